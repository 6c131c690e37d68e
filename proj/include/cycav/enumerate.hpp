#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cycav/perm.hpp"

namespace cycav {

// Hard caps guarding the factorial search spaces: the pruned generator stays
// usable through n = 12, the unpruned oracle through n = 10.
inline constexpr int kEnumerationCap = 12;
inline constexpr int kOracleCap = 10;

// Class members of one size split by the cycle-word position of the value 2.
struct PositionPartition {
    int n = 0;
    AvoidanceSpec spec;
    std::map<int, std::uint64_t> counts_by_j;  // j in 2..n, zero cells included
    std::uint64_t total() const;
};

// Refinement of one partition cell by whether n sits directly before 2.
struct PlusMinusSplit {
    int n = 0;
    int r = 0;
    std::uint64_t plus_count = 0;   // c_{r-1} == n
    std::uint64_t minus_count = 0;  // c_{r-1} != n
};

// Visits all (n-1)! cycle words (1, c_2, ..., c_n) of size n in lexicographic
// order, with no pruning. Subject to kOracleCap.
void for_each_cycle_word(int n, const std::function<void(const CycleWord&)>& visit);

// Streams the class members of size n in lexicographic cycle-word order.
// Depth-first over cycle-word prefixes: a branch is abandoned as soon as the
// prefix contains the cycle pattern (containment is monotone under
// extension); one-line patterns are decided on complete words only.
void for_each_in_class(int n, const AvoidanceSpec& spec,
                       const std::function<void(const CycleWord&)>& yield);

std::vector<CycleWord> enumerate_class(int n, const AvoidanceSpec& spec);

// Class size. Shards the search by c_2 across OpenMP threads; shard results
// are pure counts, so the aggregation order cannot matter.
std::uint64_t count_class(int n, const AvoidanceSpec& spec);

// Single-threaded reference kernel for the same count.
std::uint64_t count_class_serial(int n, const AvoidanceSpec& spec);

// Unpruned reference: filters all (n-1)! cycle words through in_class.
std::uint64_t naive_count_oracle(int n, const AvoidanceSpec& spec);

PositionPartition partition_by_two(int n, const AvoidanceSpec& spec);  // n >= 2

// Split of the cell at position r (4 <= r <= n) by whether c_{r-1} = n.
PlusMinusSplit split_plus_minus(int n, const AvoidanceSpec& spec, int r);

// (n, count) for every n in [n_min, n_max]; n_max may not exceed `cap`.
std::vector<std::pair<int, std::uint64_t>> sequence(const AvoidanceSpec& spec, int n_min,
                                                    int n_max, int cap = kEnumerationCap);

}  // namespace cycav
