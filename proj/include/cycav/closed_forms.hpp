#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycav/enumerate.hpp"
#include "cycav/perm.hpp"

namespace cycav {

// Exact integer sequence families appearing as closed-form class sizes.
enum class SequenceFamily {
    Fib2nMinus3,         // F(2n-3),   n >= 2
    Pow2nMinus2,         // 2^(n-2),   n >= 2
    PellNMinus1,         // P(n-1),    n >= 1
    BinomN3Plus1,        // C(n,3)+1,  n >= 3
    Linear2nMinus6,      // 2n-6,      n >= 6
    LinearNMinus2,       // n-2,       n >= 3
    BinomNMinus32Plus1,  // C(n-3,2)+1, n >= 4
    OneLine132Count,     // n-1,       n >= 2
};

std::string_view family_name(SequenceFamily family);  // "FIB_2N_MINUS_3", ...
SequenceFamily parse_family(std::string_view name);   // throws ParseError
int family_min_n(SequenceFamily family);

// F(0) = 0, F(1) = 1, F(k) = F(k-1) + F(k-2). Exact; refuses k past 64 bits.
std::uint64_t fibonacci(int k);

// P(0) = 0, P(1) = 1, P(k) = 2 P(k-1) + P(k-2). Exact; same overflow policy.
std::uint64_t pell(int k);

// Exact binomial coefficient; zero when k > n.
std::uint64_t binomial(int n, int k);

// Family value at n; throws BelowRange when n < family_min_n(family).
std::uint64_t closed_form(SequenceFamily family, int n);

struct VerificationRow {
    int n = 0;
    std::uint64_t brute_force = 0;
    std::uint64_t closed = 0;
    bool match = false;
};

// Per-n comparison of an enumerated statistic against its closed form.
struct VerificationReport {
    std::string theorem_id;
    AvoidanceSpec spec;
    SequenceFamily family = SequenceFamily::Fib2nMinus3;
    std::string statistic;  // which count the rows hold
    std::vector<VerificationRow> rows;
    bool all_match = false;
    std::string footnote;  // empty unless the family carries a caveat
};

// Registry ids accepted by verify_theorem.
std::vector<std::string> known_theorems();

// Natural first n for a registry entry.
int theorem_min_n(const std::string& theorem_id);

// Evaluates one registry entry over n in [n_min, n_max]. `tau` is required by
// the parametric entries T3.4 / T3.4-mirror (length >= 4, last letters 2, 1)
// and ignored elsewhere. Ids ending in "-mirror" check the inverse-symmetric
// class under the reversed cycle pattern.
VerificationReport verify_theorem(const std::string& theorem_id, int n_min, int n_max,
                                  const std::optional<Pattern>& tau = std::nullopt);

// Same evaluation with the closed form swapped out, so a statistic can be
// cross-checked against any family (tests use this to force a mismatch).
VerificationReport verify_theorem_as(const std::string& theorem_id, SequenceFamily family,
                                     int n_min, int n_max,
                                     const std::optional<Pattern>& tau = std::nullopt);

// Pretty JSON object {theorem, spec, family, statistic, rows[], all_match}.
std::string to_json_string(const VerificationReport& report);

void print_table(const VerificationReport& report, std::ostream& os);

}  // namespace cycav
