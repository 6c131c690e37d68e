#include "cycav/bijections.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cycav {
namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw DomainViolation(message);
}

// the letters after 2 (position r) must read 3, 4, ..., m+1
bool tail_is_run(const CycleWord& w, int r, int m) {
    for (int i = 1; i <= m - 1; ++i)
        if (w.at(r + i) != i + 2) return false;
    return true;
}

// the letters between 1 and 2 (position r) must read m+2, m+3, ..., n
bool prefix_is_run(const CycleWord& w, int r, int m) {
    for (int i = 2; i < r; ++i)
        if (w.at(i) != m + i) return false;
    return true;
}

// The map comes with a stated identity between the one-line forms of source
// and image; checking it on every call turns that statement into executable
// form. A failure here is a library defect, never bad input.
void assert_l22_one_line(const CycleWord& w, const CycleWord& out, int j, int m) {
    const auto pi = from_cycle_word(w).one_line();
    const int special = w.at(j - 1);  // the letter mapped onto 2
    std::vector<int> expected;
    expected.reserve(pi.size() - static_cast<std::size_t>(m));
    expected.push_back(pi[0] - m);
    for (int i = m + 2; i <= static_cast<int>(pi.size()); ++i)
        expected.push_back(i == special ? pi[static_cast<std::size_t>(i) - 1] - 1
                                        : pi[static_cast<std::size_t>(i) - 1] - m);
    if (from_cycle_word(out).one_line() != expected)
        throw std::logic_error("one-line identity violated in l22_forward");
}

// Image one-line form must equal (pi_i - 1) over positions 2..keep_to, with
// the position holding 1 (that is, i = c_n) left unshifted.
void assert_drop_head_one_line(const CycleWord& w, const CycleWord& out, int keep_to) {
    const auto pi = from_cycle_word(w).one_line();
    const int unshifted = w.at(w.size());  // c_n, the preimage of 1
    std::vector<int> expected;
    expected.reserve(static_cast<std::size_t>(keep_to) - 1);
    for (int i = 2; i <= keep_to; ++i)
        expected.push_back(i == unshifted ? pi[static_cast<std::size_t>(i) - 1]
                                          : pi[static_cast<std::size_t>(i) - 1] - 1);
    if (from_cycle_word(out).one_line() != expected)
        throw std::logic_error("one-line identity violated in a drop-head map");
}

}  // namespace

std::string_view map_name(MapId id) {
    switch (id) {
        case MapId::L22: return "L22";
        case MapId::L23: return "L23";
        case MapId::C24: return "C24";
        case MapId::L45Rho: return "L45_RHO";
        case MapId::L46Eta: return "L46_ETA";
        case MapId::L43Rho: return "L43_RHO";
        case MapId::InverseSymmetry: return "INV";
    }
    throw Error("unhandled map id");
}

MapId parse_map(std::string_view name) {
    for (MapId id : {MapId::L22, MapId::L23, MapId::C24, MapId::L45Rho, MapId::L46Eta,
                     MapId::L43Rho, MapId::InverseSymmetry}) {
        if (map_name(id) == name) return id;
    }
    throw ParseError("unknown map: \"" + std::string(name) + "\"");
}

CycleWord l22_forward(const CycleWord& w, int j) {
    const int n = w.size();
    require(j > 2 && j <= n, "l22: j must satisfy 2 < j <= n");
    require(w.position_of(2) == j, "l22: 2 is not at position j");
    const int m = n - j + 1;
    require(tail_is_run(w, j, m), "l22: letters after 2 must be the run 3..m+1");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(j) - 1);
    word.push_back(1);
    for (int i = 2; i < j; ++i) word.push_back(w.at(i) - m);
    CycleWord out = CycleWord::from_word(std::move(word));
    assert_l22_one_line(w, out, j, m);
    return out;
}

CycleWord l22_backward(const CycleWord& w_prime, int m) {
    require(m >= 1, "l22 backward: m must be >= 1");
    const int len = w_prime.size();
    require(len >= 2, "l22 backward: word must have length >= 2");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(len + m));
    word.push_back(1);
    for (int i = 2; i <= len; ++i) word.push_back(w_prime.at(i) + m);
    word.push_back(2);
    for (int v = 3; v <= m + 1; ++v) word.push_back(v);
    return CycleWord::from_word(std::move(word));
}

CycleWord l23_forward(const CycleWord& w) {
    const int n = w.size();
    const int r = w.position_of(2);
    require(r >= 3 && r < n, "l23: 2 must sit at position r with 3 <= r < n");
    const int m = n - r + 1;
    require(prefix_is_run(w, r, m), "l23: letters before 2 must be the run m+2..n");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(m));
    word.push_back(1);
    for (int i = r + 1; i <= n; ++i) word.push_back(w.at(i) - 1);
    CycleWord out = CycleWord::from_word(std::move(word));
    assert_drop_head_one_line(w, out, m + 1);
    return out;
}

CycleWord l23_backward(const CycleWord& w_prime, int r) {
    require(r >= 3, "l23 backward: r must be >= 3");
    const int m = w_prime.size();
    require(m >= 2, "l23 backward: word must have length >= 2");
    const int n = m + r - 1;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(1);
    for (int v = m + 2; v <= n; ++v) word.push_back(v);
    word.push_back(2);
    for (int i = 2; i <= m; ++i) word.push_back(w_prime.at(i) + 1);
    return CycleWord::from_word(std::move(word));
}

CycleWord c24_forward(const CycleWord& w) {
    const int n = w.size();
    require(n >= 2 && w.at(2) == 2, "c24: 2 must immediately follow 1");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n) - 1);
    word.push_back(1);
    for (int i = 3; i <= n; ++i) word.push_back(w.at(i) - 1);
    CycleWord out = CycleWord::from_word(std::move(word));
    assert_drop_head_one_line(w, out, n);
    return out;
}

CycleWord c24_backward(const CycleWord& w_prime) {
    const int len = w_prime.size();
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(len) + 1);
    word.push_back(1);
    word.push_back(2);
    for (int i = 2; i <= len; ++i) word.push_back(w_prime.at(i) + 1);
    return CycleWord::from_word(std::move(word));
}

CycleWord l45_rho_forward(const CycleWord& w) {
    const int n = w.size();
    require(n >= 3 && w.at(n) == 2 && w.at(n - 1) == 3, "l45: word must end with 3, 2");
    return l22_forward(w, n);
}

CycleWord l45_rho_backward(const CycleWord& w_prime) {
    require(w_prime.size() >= 2 && w_prime.at(w_prime.size()) == 2,
            "l45 backward: word must end with 2");
    return l22_backward(w_prime, 1);
}

CycleWord l46_eta_forward(const CycleWord& w, int r) {
    const int n = w.size();
    require(r > 3 && r < n, "l46: r must satisfy 3 < r < n");
    require(w.position_of(2) == r, "l46: 2 is not at position r");
    const int m = n - r + 1;
    require(w.at(r - 1) == m + 2, "l46: the letter before 2 must be m+2");
    require(tail_is_run(w, r, m), "l46: letters after 2 must be the run 3..m+1");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(r) - 1);
    word.push_back(1);
    for (int i = 2; i <= r - 2; ++i) word.push_back(w.at(i) - m);
    word.push_back(2);
    return CycleWord::from_word(std::move(word));
}

CycleWord l46_eta_backward(const CycleWord& w_prime, int m) {
    require(m >= 1, "l46 backward: m must be >= 1");
    const int len = w_prime.size();
    require(len >= 3 && w_prime.at(len) == 2,
            "l46 backward: word must end with 2 and have length >= 3");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(len + m));
    word.push_back(1);
    for (int i = 2; i <= len - 1; ++i) word.push_back(w_prime.at(i) + m);
    word.push_back(m + 2);
    word.push_back(2);
    for (int v = 3; v <= m + 1; ++v) word.push_back(v);
    return CycleWord::from_word(std::move(word));
}

CycleWord l43_rho_forward(const CycleWord& w) {
    const int n = w.size();
    require(n >= 4 && w.at(2) == n && w.at(3) == 2, "l43: word must start (1, n, 2, ...)");
    return l23_forward(w);
}

CycleWord l43_rho_backward(const CycleWord& w_prime) {
    return l23_backward(w_prime, 3);
}

CycleWord inverse_symmetry_map(const CycleWord& w) {
    const int n = w.size();
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(1);
    for (int i = n; i >= 2; --i) word.push_back(w.at(i));
    CycleWord out = CycleWord::from_word(std::move(word));
    if (to_standard_cycle_word(from_cycle_word(w).inverse()) != out)
        throw std::logic_error("reversed word disagrees with the inverse permutation");
    return out;
}

bool in_map_domain(MapId id, const CycleWord& w) {
    const int n = w.size();
    switch (id) {
        case MapId::L22: {
            if (n < 3) return false;
            const int j = w.position_of(2);
            return j > 2 && tail_is_run(w, j, n - j + 1);
        }
        case MapId::L23: {
            if (n < 5) return false;
            const int r = w.position_of(2);
            return r >= 4 && r < n && prefix_is_run(w, r, n - r + 1);
        }
        case MapId::C24:
            return n >= 2 && w.at(2) == 2;
        case MapId::L45Rho:
            return n >= 3 && w.at(n) == 2 && w.at(n - 1) == 3;
        case MapId::L46Eta: {
            if (n < 5) return false;
            const int r = w.position_of(2);
            if (r <= 3 || r >= n) return false;
            const int m = n - r + 1;
            return w.at(r - 1) == m + 2 && tail_is_run(w, r, m);
        }
        case MapId::L43Rho:
            return n >= 4 && w.at(2) == n && w.at(3) == 2;
        case MapId::InverseSymmetry:
            return true;
    }
    return false;
}

CycleWord apply_map(MapId id, const CycleWord& w) {
    switch (id) {
        case MapId::L22: return l22_forward(w, w.position_of(2));
        case MapId::L23: return l23_forward(w);
        case MapId::C24: return c24_forward(w);
        case MapId::L45Rho: return l45_rho_forward(w);
        case MapId::L46Eta: return l46_eta_forward(w, w.position_of(2));
        case MapId::L43Rho: return l43_rho_forward(w);
        case MapId::InverseSymmetry: return inverse_symmetry_map(w);
    }
    throw Error("unhandled map id");
}

namespace {

CycleWord apply_backward(MapId id, const CycleWord& image, const CycleWord& source) {
    const int n = source.size();
    switch (id) {
        case MapId::L22: return l22_backward(image, n - source.position_of(2) + 1);
        case MapId::L23: return l23_backward(image, source.position_of(2));
        case MapId::C24: return c24_backward(image);
        case MapId::L45Rho: return l45_rho_backward(image);
        case MapId::L46Eta: return l46_eta_backward(image, n - source.position_of(2) + 1);
        case MapId::L43Rho: return l43_rho_backward(image);
        case MapId::InverseSymmetry: return inverse_symmetry_map(image);
    }
    throw Error("unhandled map id");
}

// Checks forward(backward(w')) == w' and that the lift lands in the domain.
template <typename Backward, typename Forward>
void sweep_codomain(int size, RoundTripReport& report, MapId id, Backward&& backward,
                    Forward&& forward) {
    if (size < 1) return;
    for_each_cycle_word(size, [&](const CycleWord& w_prime) {
        ++report.backward_domain;
        const CycleWord lifted = backward(w_prime);
        if (!in_map_domain(id, lifted) || !(forward(lifted) == w_prime)) report.pass = false;
    });
}

}  // namespace

RoundTripReport round_trip_check(MapId id, int n) {
    RoundTripReport report;
    report.map = id;
    report.n = n;
    report.pass = true;

    for_each_cycle_word(n, [&](const CycleWord& w) {
        if (!in_map_domain(id, w)) return;
        ++report.forward_domain;
        const CycleWord image = apply_map(id, w);
        if (!(apply_backward(id, image, w) == w)) report.pass = false;
    });

    switch (id) {
        case MapId::L22:
            for (int len = 2; len <= n - 1; ++len) {
                const int m = n - len;
                sweep_codomain(
                    len, report, id,
                    [m](const CycleWord& wp) { return l22_backward(wp, m); },
                    [len](const CycleWord& lifted) { return l22_forward(lifted, len + 1); });
            }
            break;
        case MapId::L23:
            for (int r = 4; r <= n - 1; ++r) {
                sweep_codomain(
                    n - r + 1, report, id,
                    [r](const CycleWord& wp) { return l23_backward(wp, r); },
                    [](const CycleWord& lifted) { return l23_forward(lifted); });
            }
            break;
        case MapId::C24:
            sweep_codomain(
                n - 1, report, id, [](const CycleWord& wp) { return c24_backward(wp); },
                [](const CycleWord& lifted) { return c24_forward(lifted); });
            break;
        case MapId::L45Rho:
            if (n >= 3) {
                for_each_cycle_word(n - 1, [&](const CycleWord& wp) {
                    if (wp.at(wp.size()) != 2) return;
                    ++report.backward_domain;
                    const CycleWord lifted = l45_rho_backward(wp);
                    if (!in_map_domain(id, lifted) || !(l45_rho_forward(lifted) == wp))
                        report.pass = false;
                });
            }
            break;
        case MapId::L46Eta:
            for (int r = 4; r <= n - 1; ++r) {
                const int m = n - r + 1;  // >= 2, so the lift keeps r < n
                for_each_cycle_word(r - 1, [&](const CycleWord& wp) {
                    if (wp.at(wp.size()) != 2) return;
                    ++report.backward_domain;
                    const CycleWord lifted = l46_eta_backward(wp, m);
                    if (!in_map_domain(id, lifted) || !(l46_eta_forward(lifted, r) == wp))
                        report.pass = false;
                });
            }
            break;
        case MapId::L43Rho:
            if (n >= 4) {
                sweep_codomain(
                    n - 2, report, id, [](const CycleWord& wp) { return l43_rho_backward(wp); },
                    [](const CycleWord& lifted) { return l43_rho_forward(lifted); });
            }
            break;
        case MapId::InverseSymmetry:
            sweep_codomain(
                n, report, id, [](const CycleWord& wp) { return inverse_symmetry_map(wp); },
                [](const CycleWord& lifted) { return inverse_symmetry_map(lifted); });
            break;
    }
    return report;
}

bool transport_check(MapId id, const AvoidanceSpec& spec_in, const AvoidanceSpec& spec_out,
                     int n) {
    bool ok = true;
    for_each_cycle_word(n, [&](const CycleWord& w) {
        if (!ok || !in_map_domain(id, w)) return;
        if (in_class(w, spec_in) != in_class(apply_map(id, w), spec_out)) ok = false;
    });
    return ok;
}

CycleWord zigzag_construct(int n, int r) {
    if (n < 6) throw InvalidPosition("zigzag_construct needs n >= 6");
    if (!(r == 3 || (r > 3 && r < n - 1)))
        throw InvalidPosition("zigzag position r must be 3 or satisfy 3 < r < n-1");
    std::vector<int> word(static_cast<std::size_t>(n));
    word[0] = 1;
    word[1] = 2;
    for (int i = 3; i < r; ++i) word[static_cast<std::size_t>(i) - 1] = i;
    word[static_cast<std::size_t>(r) - 1] = n;
    // after n the word alternates between the low run r, r+1, ... and the
    // high run n-1, n-2, ...
    for (int pos = r + 1; pos <= n; ++pos) {
        const int d = pos - r;
        word[static_cast<std::size_t>(pos) - 1] =
            (d % 2 == 1) ? (r - 1 + (d + 1) / 2) : (n - d / 2);
    }
    CycleWord w = CycleWord::from_word(std::move(word));
    static const AvoidanceSpec kClassSpec = parse_avoidance_spec("1324,1423;213");
    if (!in_class(w, kClassSpec))
        throw std::logic_error("zigzag word fell outside its class");
    return w;
}

}  // namespace cycav
