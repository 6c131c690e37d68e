#include "cycav/closed_forms.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

namespace cycav {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw CapExceeded(std::string(what) + ": value exceeds 64 bits");
    return a + b;
}

}  // namespace

std::string_view family_name(SequenceFamily family) {
    switch (family) {
        case SequenceFamily::Fib2nMinus3: return "FIB_2N_MINUS_3";
        case SequenceFamily::Pow2nMinus2: return "POW2_N_MINUS_2";
        case SequenceFamily::PellNMinus1: return "PELL_N_MINUS_1";
        case SequenceFamily::BinomN3Plus1: return "BINOM_N_3_PLUS_1";
        case SequenceFamily::Linear2nMinus6: return "LINEAR_2N_MINUS_6";
        case SequenceFamily::LinearNMinus2: return "LINEAR_N_MINUS_2";
        case SequenceFamily::BinomNMinus32Plus1: return "BINOM_N_MINUS_3_2_PLUS_1";
        case SequenceFamily::OneLine132Count: return "ONE_LINE_132_COUNT";
    }
    throw Error("unhandled family");
}

SequenceFamily parse_family(std::string_view name) {
    for (SequenceFamily family :
         {SequenceFamily::Fib2nMinus3, SequenceFamily::Pow2nMinus2, SequenceFamily::PellNMinus1,
          SequenceFamily::BinomN3Plus1, SequenceFamily::Linear2nMinus6,
          SequenceFamily::LinearNMinus2, SequenceFamily::BinomNMinus32Plus1,
          SequenceFamily::OneLine132Count}) {
        if (family_name(family) == name) return family;
    }
    throw ParseError("unknown sequence family: \"" + std::string(name) + "\"");
}

int family_min_n(SequenceFamily family) {
    switch (family) {
        case SequenceFamily::Fib2nMinus3: return 2;
        case SequenceFamily::Pow2nMinus2: return 2;
        case SequenceFamily::PellNMinus1: return 1;
        case SequenceFamily::BinomN3Plus1: return 3;
        case SequenceFamily::Linear2nMinus6: return 6;
        case SequenceFamily::LinearNMinus2: return 3;
        case SequenceFamily::BinomNMinus32Plus1: return 4;
        case SequenceFamily::OneLine132Count: return 2;
    }
    throw Error("unhandled family");
}

std::uint64_t fibonacci(int k) {
    if (k < 0) throw InvalidPosition("fibonacci index must be >= 0");
    if (k > 92) throw CapExceeded("fibonacci(k) exceeds 64 bits for k > 92");
    std::uint64_t a = 0, b = 1;  // F(0), F(1)
    for (int i = 0; i < k; ++i) {
        const std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

std::uint64_t pell(int k) {
    if (k < 0) throw InvalidPosition("pell index must be >= 0");
    if (k > 50) throw CapExceeded("pell(k) exceeds 64 bits for k > 50");
    std::uint64_t a = 0, b = 1;  // P(0), P(1)
    for (int i = 0; i < k; ++i) {
        const std::uint64_t next = 2 * b + a;
        a = b;
        b = next;
    }
    return a;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw InvalidPosition("binomial arguments must be >= 0");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw CapExceeded("binomial value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t closed_form(SequenceFamily family, int n) {
    if (n < family_min_n(family))
        throw BelowRange("n = " + std::to_string(n) + " below first valid index " +
                         std::to_string(family_min_n(family)) + " of " +
                         std::string(family_name(family)));
    switch (family) {
        case SequenceFamily::Fib2nMinus3: return fibonacci(2 * n - 3);
        case SequenceFamily::Pow2nMinus2:
            if (n - 2 > 63) throw CapExceeded("2^(n-2) exceeds 64 bits");
            return std::uint64_t{1} << (n - 2);
        case SequenceFamily::PellNMinus1: return pell(n - 1);
        case SequenceFamily::BinomN3Plus1:
            return checked_add(binomial(n, 3), 1, "C(n,3)+1");
        case SequenceFamily::Linear2nMinus6: return static_cast<std::uint64_t>(2 * n - 6);
        case SequenceFamily::LinearNMinus2: return static_cast<std::uint64_t>(n - 2);
        case SequenceFamily::BinomNMinus32Plus1:
            return checked_add(binomial(n - 3, 2), 1, "C(n-3,2)+1");
        case SequenceFamily::OneLine132Count: return static_cast<std::uint64_t>(n - 1);
    }
    throw Error("unhandled family");
}

namespace {

enum class Statistic { ClassCount, CellAtJ2, CellAtJLast, PlusSum };

const char* statistic_label(Statistic stat) {
    switch (stat) {
        case Statistic::ClassCount: return "class size";
        case Statistic::CellAtJ2: return "members with 2 at cycle position 2";
        case Statistic::CellAtJLast: return "members with 2 at the last cycle position";
        case Statistic::PlusSum:
            return "members with n directly before 2, summed over positions 4..n";
    }
    return "";
}

std::uint64_t evaluate_statistic(Statistic stat, int n, const AvoidanceSpec& spec) {
    switch (stat) {
        case Statistic::ClassCount: return count_class(n, spec);
        case Statistic::CellAtJ2: return partition_by_two(n, spec).counts_by_j.at(2);
        case Statistic::CellAtJLast: return partition_by_two(n, spec).counts_by_j.at(n);
        case Statistic::PlusSum: {
            std::uint64_t sum = 0;
            for (int r = 4; r <= n; ++r) sum += split_plus_minus(n, spec, r).plus_count;
            return sum;
        }
    }
    throw Error("unhandled statistic");
}

constexpr const char* kPellFootnote =
    "Pell numbers here follow P(k) = 2*P(k-1) + P(k-2) with P(0) = 0, P(1) = 1; "
    "the single-weight variant P(k) = P(k-1) + P(k-2) is not used.";

struct TheoremDef {
    std::string id;
    AvoidanceSpec spec;
    SequenceFamily family = SequenceFamily::Fib2nMinus3;
    Statistic stat = Statistic::ClassCount;
    int min_n = 2;
    std::string footnote;
};

AvoidanceSpec spec_of(const char* text) { return parse_avoidance_spec(text); }

void check_tau(const Pattern& tau) {
    const auto& letters = tau.letters();
    const std::size_t k = letters.size();
    if (k < 4 || letters[k - 2] != 2 || letters[k - 1] != 1)
        throw DomainViolation("tau must have length >= 4 and end with the letters 2, 1");
}

TheoremDef lookup_theorem(const std::string& theorem_id, const std::optional<Pattern>& tau) {
    static constexpr std::string_view kMirrorSuffix = "-mirror";
    std::string base = theorem_id;
    bool mirrored = false;
    if (base.size() > kMirrorSuffix.size() &&
        base.compare(base.size() - kMirrorSuffix.size(), kMirrorSuffix.size(), kMirrorSuffix) == 0) {
        mirrored = true;
        base.resize(base.size() - kMirrorSuffix.size());
    }

    TheoremDef def;
    def.id = theorem_id;
    if (base == "T3.4") {
        if (!tau) throw DomainViolation("theorem T3.4 requires a tau pattern");
        check_tau(*tau);
        AvoidanceSpec spec{{}, parse_pattern("213")};
        spec.one_line_patterns.push_back(*tau);
        const Pattern p4321 = parse_pattern("4321");
        if (!(*tau == p4321)) spec.one_line_patterns.push_back(p4321);
        def.spec = std::move(spec);
        def.family = SequenceFamily::Fib2nMinus3;
        def.min_n = 2;
    } else if (base == "C3.5") {
        def.spec = spec_of("3421,4321;213");
        def.family = SequenceFamily::Fib2nMinus3;
        def.min_n = 2;
    } else if (base == "C3.6") {
        def.spec = spec_of("4321;213");
        def.family = SequenceFamily::Fib2nMinus3;
        def.min_n = 2;
    } else if (base == "T3.7") {
        def.spec = spec_of("4312,4321;213");
        def.family = SequenceFamily::Pow2nMinus2;
        def.min_n = 2;
    } else if (base == "T3.8") {
        def.spec = spec_of("3412,4321;213");
        def.family = SequenceFamily::PellNMinus1;
        def.min_n = 2;
        def.footnote = kPellFootnote;
    } else if (base == "T4.8") {
        def.spec = spec_of("1324,1423;213");
        def.family = SequenceFamily::BinomN3Plus1;
        def.min_n = 3;
    } else if (base == "L4.4") {
        def.spec = spec_of("1324,1423;213");
        def.family = SequenceFamily::Linear2nMinus6;
        def.stat = Statistic::CellAtJ2;
        def.min_n = 6;
    } else if (base == "L4.7") {
        def.spec = spec_of("1324,1423;213");
        def.family = SequenceFamily::LinearNMinus2;
        def.stat = Statistic::CellAtJLast;
        def.min_n = 3;
    } else if (base == "E3") {
        def.spec = spec_of("1324,1423;213");
        def.family = SequenceFamily::BinomNMinus32Plus1;
        def.stat = Statistic::PlusSum;
        def.min_n = 6;
    } else {
        throw UnknownTheorem("unknown theorem id: \"" + theorem_id + "\"");
    }

    if (mirrored) {
        if (def.stat != Statistic::ClassCount)
            throw UnknownTheorem("no mirror registered for " + base);
        def.spec = mirror_spec(def.spec);
    }
    return def;
}

}  // namespace

std::vector<std::string> known_theorems() {
    return {"T3.4", "C3.5",        "C3.6",        "T3.7",        "T3.8",        "T4.8",
            "L4.4", "L4.7",        "E3",          "T3.4-mirror", "C3.5-mirror", "C3.6-mirror",
            "T3.7-mirror", "T3.8-mirror", "T4.8-mirror"};
}

int theorem_min_n(const std::string& theorem_id) {
    // tau only affects the spec, not the range; any valid tau stands in
    static const Pattern placeholder = parse_pattern("3421");
    return lookup_theorem(theorem_id, placeholder).min_n;
}

VerificationReport verify_theorem_as(const std::string& theorem_id, SequenceFamily family,
                                     int n_min, int n_max, const std::optional<Pattern>& tau) {
    const TheoremDef def = lookup_theorem(theorem_id, tau);
    if (n_min < def.min_n)
        throw BelowRange("theorem " + theorem_id + " starts at n = " + std::to_string(def.min_n));
    if (n_min > n_max) throw InvalidPosition("need n_min <= n_max");

    VerificationReport report;
    report.theorem_id = def.id;
    report.spec = def.spec;
    report.family = family;
    report.statistic = statistic_label(def.stat);
    report.footnote = def.footnote;
    report.all_match = true;
    for (int n = n_min; n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        row.brute_force = evaluate_statistic(def.stat, n, def.spec);
        row.closed = closed_form(family, n);
        row.match = row.brute_force == row.closed;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(row);
    }
    return report;
}

VerificationReport verify_theorem(const std::string& theorem_id, int n_min, int n_max,
                                  const std::optional<Pattern>& tau) {
    const TheoremDef def = lookup_theorem(theorem_id, tau);
    return verify_theorem_as(theorem_id, def.family, n_min, n_max, tau);
}

std::string to_json_string(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem_id;
    j["spec"] = to_string(report.spec);
    j["family"] = std::string(family_name(report.family));
    j["statistic"] = report.statistic;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        j["rows"].push_back({{"n", row.n},
                             {"brute_force_count", row.brute_force},
                             {"closed_form_value", row.closed},
                             {"match", row.match}});
    }
    j["all_match"] = report.all_match;
    if (!report.footnote.empty()) j["footnote"] = report.footnote;
    return j.dump(2) + "\n";
}

void print_table(const VerificationReport& report, std::ostream& os) {
    os << "theorem:   " << report.theorem_id << "\n";
    os << "spec:      " << to_string(report.spec) << "\n";
    os << "family:    " << family_name(report.family) << "\n";
    os << "statistic: " << report.statistic << "\n";
    os << std::setw(4) << "n" << std::setw(14) << "brute-force" << std::setw(14) << "closed-form"
       << std::setw(7) << "match" << "\n";
    for (const auto& row : report.rows) {
        os << std::setw(4) << row.n << std::setw(14) << row.brute_force << std::setw(14)
           << row.closed << std::setw(7) << (row.match ? "yes" : "NO") << "\n";
    }
    os << "all match: " << (report.all_match ? "yes" : "NO") << "\n";
    if (!report.footnote.empty()) os << "note: " << report.footnote << "\n";
}

}  // namespace cycav
