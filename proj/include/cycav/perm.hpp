#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cycav/error.hpp"

namespace cycav {

// A permutation of {1,...,n} held in one-line form: one_line()[i-1] == pi(i).
// Values and positions are 1-based throughout the public interface.
class Permutation {
public:
    // Validates that `values` is a permutation of {1,...,n} with n >= 1.
    static Permutation from_one_line(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int apply(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return values_; }

    Permutation inverse() const;

    // True iff the orbit of 1 covers all of {1,...,n}.
    bool is_cyclic() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}
    std::vector<int> values_;
};

// Standard cycle form of a cyclic permutation: the word c_1 c_2 ... c_n with
// c_1 = 1, where the permutation maps c_i to c_{i+1} and c_n back to 1.
class CycleWord {
public:
    static CycleWord from_word(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    int at(int pos) const { return word_[static_cast<std::size_t>(pos) - 1]; }
    const std::vector<int>& word() const { return word_; }

    // 1-based position of `value` in the word.
    int position_of(int value) const;

    friend bool operator==(const CycleWord&, const CycleWord&) = default;

private:
    explicit CycleWord(std::vector<int> word) : word_(std::move(word)) {}
    std::vector<int> word_;
};

// An avoidance target: a permutation of {1,...,k}. Default-constructs to the
// unit pattern (1).
class Pattern {
public:
    Pattern() : letters_{1} {}

    static Pattern from_letters(std::vector<int> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }

    Pattern inverse() const;
    Pattern reversed() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    explicit Pattern(std::vector<int> letters) : letters_(std::move(letters)) {}
    std::vector<int> letters_;
};

// One avoidance class of cyclic permutations: the one-line form must avoid
// every pattern in `one_line_patterns` and the standard cycle word must avoid
// `cycle_pattern`.
struct AvoidanceSpec {
    std::vector<Pattern> one_line_patterns;  // pairwise distinct, may be empty
    Pattern cycle_pattern;
};

// Image of a spec under inverse symmetry: one-line patterns invert, and the
// cycle-side pattern reverses (the standard cycle word of the inverse
// permutation is the reversed word re-anchored at 1).
AvoidanceSpec mirror_spec(const AvoidanceSpec& spec);

Permutation from_cycle_word(const CycleWord& w);
CycleWord to_standard_cycle_word(const Permutation& p);  // throws NotCyclic

// Classical pattern containment: true iff some subsequence of `word` is
// order-isomorphic to `pat`. Entries of `word` must be pairwise distinct but
// need not be contiguous. Backtracking matcher pruned by remaining length.
bool contains(std::span<const int> word, const Pattern& pat);

// Lexicographically smallest list of 1-based positions carrying an occurrence
// of `pat`, or nullopt when `word` avoids it.
std::optional<std::vector<int>> find_occurrence(std::span<const int> word, const Pattern& pat);

// Membership test for the avoidance class.
bool in_class(const CycleWord& w, const AvoidanceSpec& spec);

// Text forms. Permutations are space-separated values ("5 3 4 1 2"); cycle
// words print as "(1,5,2,3,4)"; patterns as digit strings for k <= 9; specs
// as "3421,4321;213" (one-line patterns, ';', cycle pattern).
std::string to_string(const Permutation& p);
std::string to_string(const CycleWord& w);
std::string to_string(const Pattern& pat);
std::string to_string(const AvoidanceSpec& spec);

Permutation parse_permutation(std::string_view text);

// Accepts "(1,5,2,3,4)" for any n, or the bare digit form "15234" only for
// n <= 9 (longer digit strings are rejected as ambiguous).
CycleWord parse_cycle_word(std::string_view text);

Pattern parse_pattern(std::string_view digits);

// Grammar: one-line patterns comma-separated, ';', cycle pattern. An empty
// left side (";213") imposes no one-line patterns.
AvoidanceSpec parse_avoidance_spec(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const CycleWord& w);
std::ostream& operator<<(std::ostream& os, const Pattern& pat);

}  // namespace cycav
