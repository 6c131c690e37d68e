#pragma once

#include <cstdint>
#include <string_view>

#include "cycav/enumerate.hpp"
#include "cycav/perm.hpp"

namespace cycav {

// Structured shift-and-truncate maps between cycle-word families, plus the
// inverse-symmetry word map. Every forward map validates its domain shape
// eagerly and rejects anything outside it; forward and backward compose to
// the identity on the declared domain.
enum class MapId { L22, L23, C24, L45Rho, L46Eta, L43Rho, InverseSymmetry };

std::string_view map_name(MapId id);  // "L22", ..., "L45_RHO", "INV"
MapId parse_map(std::string_view name);

// (1, c_2..c_{j-1}, 2, 3..m+1) -> (1, c_2-m, ..., c_{j-1}-m) with m = n-j+1.
// j is passed explicitly and checked against the actual position of 2.
CycleWord l22_forward(const CycleWord& w, int j);

// (1, d_2..d_{j-1}) -> (1, d_2+m, ..., d_{j-1}+m, 2, 3, ..., m+1), m >= 1.
CycleWord l22_backward(const CycleWord& w_prime, int m);

// (1, m+2..n, 2, c_{r+1}..c_n) -> (1, c_{r+1}-1, ..., c_n-1), 3 <= r < n.
CycleWord l23_forward(const CycleWord& w);
CycleWord l23_backward(const CycleWord& w_prime, int r);

// (1, 2, c_3..c_n) -> (1, c_3-1, ..., c_n-1).
CycleWord c24_forward(const CycleWord& w);
CycleWord c24_backward(const CycleWord& w_prime);

// (1, c_2..c_{n-2}, 3, 2) -> (1, c_2-1, ..., c_{n-2}-1, 2).
CycleWord l45_rho_forward(const CycleWord& w);
CycleWord l45_rho_backward(const CycleWord& w_prime);

// (1, c_2..c_{r-2}, m+2, 2, 3..m+1) -> (1, c_2-m, ..., c_{r-2}-m, 2),
// with 3 < r < n and m = n-r+1.
CycleWord l46_eta_forward(const CycleWord& w, int r);
CycleWord l46_eta_backward(const CycleWord& w_prime, int m);

// (1, n, 2, c_4..c_n) -> (1, c_4-1, ..., c_n-1).
CycleWord l43_rho_forward(const CycleWord& w);
CycleWord l43_rho_backward(const CycleWord& w_prime);

// Standard cycle word of the inverse permutation: the reversed word
// re-anchored at 1. An involution on cycle words.
CycleWord inverse_symmetry_map(const CycleWord& w);

// Shape-only domain test; class membership plays no part. The L23 domain here
// is the slice with 2 at position r >= 4; the r = 3 slice belongs to L43_RHO.
bool in_map_domain(MapId id, const CycleWord& w);

// Forward application with parameters inferred from the word.
CycleWord apply_map(MapId id, const CycleWord& w);

struct RoundTripReport {
    MapId map = MapId::L22;
    int n = 0;
    std::uint64_t forward_domain = 0;   // words checked through backward(forward(w))
    std::uint64_t backward_domain = 0;  // words checked through forward(backward(w'))
    bool pass = false;
};

// Sweeps backward(forward(w)) == w over the full domain at size n, and
// forward(backward(w')) == w' over every codomain slice reachable at size n.
RoundTripReport round_trip_check(MapId id, int n);

// True iff membership transports through the map: for every word w in the
// map's domain at size n, in_class(w, spec_in) <=> in_class(map(w), spec_out).
bool transport_check(MapId id, const AvoidanceSpec& spec_in, const AvoidanceSpec& spec_out,
                     int n);

// The unique member of the ({1324,1423};213) class with 2 at cycle position 2
// and the maximum n at position r, built from its explicit alternating
// formula. Valid for n >= 6 and r = 3 or 3 < r < n-1.
CycleWord zigzag_construct(int n, int r);

}  // namespace cycav
