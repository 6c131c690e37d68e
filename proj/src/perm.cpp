#include "cycav/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <string>

namespace cycav {
namespace {

std::vector<int> checked_permutation(std::vector<int> values, const char* what) {
    if (values.empty()) throw InvalidPermutation(std::string(what) + ": empty sequence");
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n)
            throw InvalidPermutation(std::string(what) + ": value " + std::to_string(v) +
                                     " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw DuplicateValue(std::string(what) + ": value " + std::to_string(v) + " repeats");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return values;
}

}  // namespace

Permutation Permutation::from_one_line(std::vector<int> values) {
    return Permutation(checked_permutation(std::move(values), "one-line form"));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(apply(i)) - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_cyclic() const {
    int steps = 0;
    int v = 1;
    do {
        v = apply(v);
        ++steps;
    } while (v != 1);
    return steps == size();
}

CycleWord CycleWord::from_word(std::vector<int> word) {
    auto checked = checked_permutation(std::move(word), "cycle word");
    if (checked.front() != 1) throw DomainViolation("cycle word must start with 1");
    return CycleWord(std::move(checked));
}

int CycleWord::position_of(int value) const {
    for (int pos = 1; pos <= size(); ++pos)
        if (at(pos) == value) return pos;
    throw InvalidPosition("value " + std::to_string(value) + " not present in cycle word");
}

Pattern Pattern::from_letters(std::vector<int> letters) {
    return Pattern(checked_permutation(std::move(letters), "pattern"));
}

Pattern Pattern::inverse() const {
    std::vector<int> inv(letters_.size());
    for (int i = 1; i <= size(); ++i)
        inv[static_cast<std::size_t>(letters_[static_cast<std::size_t>(i) - 1]) - 1] = i;
    return Pattern(std::move(inv));
}

Pattern Pattern::reversed() const {
    return Pattern(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

AvoidanceSpec mirror_spec(const AvoidanceSpec& spec) {
    AvoidanceSpec out{{}, spec.cycle_pattern.reversed()};
    out.one_line_patterns.reserve(spec.one_line_patterns.size());
    for (const auto& pat : spec.one_line_patterns) out.one_line_patterns.push_back(pat.inverse());
    return out;
}

Permutation from_cycle_word(const CycleWord& w) {
    const int n = w.size();
    const auto& c = w.word();
    std::vector<int> one_line(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        one_line[static_cast<std::size_t>(c[static_cast<std::size_t>(i)]) - 1] =
            c[static_cast<std::size_t>((i + 1) % n)];
    return Permutation::from_one_line(std::move(one_line));
}

CycleWord to_standard_cycle_word(const Permutation& p) {
    if (!p.is_cyclic())
        throw NotCyclic("permutation " + to_string(p) + " is not a single cycle");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(p.size()));
    int v = 1;
    for (int i = 0; i < p.size(); ++i) {
        word.push_back(v);
        v = p.apply(v);
    }
    return CycleWord::from_word(std::move(word));
}

namespace {

// Places pattern position t at word positions >= from. Candidate positions
// ascend, so the first complete embedding found is the lexicographically
// smallest witness. The loop bound keeps room for the rest of the pattern.
bool match_positions(std::span<const int> word, std::span<const int> pat,
                     std::vector<int>& chosen, std::size_t t, std::size_t from) {
    if (t == pat.size()) return true;
    for (std::size_t i = from; i + (pat.size() - t) <= word.size(); ++i) {
        bool consistent = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((word[static_cast<std::size_t>(chosen[s])] < word[i]) != (pat[s] < pat[t])) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        chosen[t] = static_cast<int>(i);
        if (match_positions(word, pat, chosen, t + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains(std::span<const int> word, const Pattern& pat) {
    const std::size_t k = static_cast<std::size_t>(pat.size());
    if (k > word.size()) return false;
    std::vector<int> chosen(k);
    return match_positions(word, pat.letters(), chosen, 0, 0);
}

std::optional<std::vector<int>> find_occurrence(std::span<const int> word, const Pattern& pat) {
    const std::size_t k = static_cast<std::size_t>(pat.size());
    if (k > word.size()) return std::nullopt;
    std::vector<int> chosen(k);
    if (!match_positions(word, pat.letters(), chosen, 0, 0)) return std::nullopt;
    for (int& pos : chosen) ++pos;  // report 1-based positions
    return chosen;
}

bool in_class(const CycleWord& w, const AvoidanceSpec& spec) {
    if (contains(w.word(), spec.cycle_pattern)) return false;
    const Permutation p = from_cycle_word(w);
    for (const auto& pat : spec.one_line_patterns)
        if (contains(p.one_line(), pat)) return false;
    return true;
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p.apply(i));
    }
    return out;
}

std::string to_string(const CycleWord& w) {
    std::string out = "(";
    for (int pos = 1; pos <= w.size(); ++pos) {
        if (pos > 1) out += ',';
        out += std::to_string(w.at(pos));
    }
    out += ')';
    return out;
}

std::string to_string(const Pattern& pat) {
    std::string out;
    if (pat.size() <= 9) {
        for (int v : pat.letters()) out += static_cast<char>('0' + v);
        return out;
    }
    for (std::size_t i = 0; i < pat.letters().size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(pat.letters()[i]);
    }
    return out;
}

std::string to_string(const AvoidanceSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.one_line_patterns.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(spec.one_line_patterns[i]);
    }
    out += ';';
    out += to_string(spec.cycle_pattern);
    return out;
}

namespace {

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

int parse_int(std::string_view token) {
    token = trimmed(token);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty())
        throw ParseError("not an integer: \"" + std::string(token) + "\"");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        values.push_back(parse_int(text.substr(i, j - i)));
        i = j;
    }
    if (values.empty()) throw ParseError("empty permutation text");
    return Permutation::from_one_line(std::move(values));
}

CycleWord parse_cycle_word(std::string_view text) {
    text = trimmed(text);
    if (text.empty()) throw ParseError("empty cycle word text");
    if (text.front() == '(') {
        if (text.back() != ')') throw ParseError("unbalanced parentheses in cycle word");
        const std::string_view inner = text.substr(1, text.size() - 2);
        std::vector<int> word;
        for (std::string_view token : split(inner, ',')) word.push_back(parse_int(token));
        return CycleWord::from_word(std::move(word));
    }
    if (text.size() >= 10)
        throw ParseError("digit form is only valid for n <= 9; use \"(c1,c2,...)\"");
    std::vector<int> word;
    for (char ch : text) {
        if (ch < '1' || ch > '9')
            throw ParseError("bad character in digit-form cycle word: \"" + std::string(text) + "\"");
        word.push_back(ch - '0');
    }
    return CycleWord::from_word(std::move(word));
}

Pattern parse_pattern(std::string_view digits) {
    digits = trimmed(digits);
    if (digits.empty()) throw ParseError("empty pattern");
    std::vector<int> letters;
    for (char ch : digits) {
        if (ch < '1' || ch > '9')
            throw ParseError("bad character in pattern: \"" + std::string(digits) + "\"");
        letters.push_back(ch - '0');
    }
    return Pattern::from_letters(std::move(letters));
}

AvoidanceSpec parse_avoidance_spec(std::string_view text) {
    const auto parts = split(text, ';');
    if (parts.size() != 2)
        throw ParseError("avoidance spec must read \"<one-line patterns>;<cycle pattern>\"");
    std::vector<Pattern> one_line;
    const std::string_view left = trimmed(parts[0]);
    if (!left.empty()) {
        for (std::string_view token : split(left, ',')) {
            Pattern pat = parse_pattern(token);
            for (const auto& prev : one_line)
                if (prev == pat)
                    throw ParseError("repeated one-line pattern: " + to_string(pat));
            one_line.push_back(std::move(pat));
        }
    }
    return AvoidanceSpec{std::move(one_line), parse_pattern(parts[1])};
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const CycleWord& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const Pattern& pat) { return os << to_string(pat); }

}  // namespace cycav
