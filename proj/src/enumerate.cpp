#include "cycav/enumerate.hpp"

#include <numeric>
#include <string>

namespace cycav {
namespace {

void check_enumeration_size(int n) {
    if (n < 1) throw InvalidPosition("n must be >= 1");
    if (n > kEnumerationCap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the pruned-search cap " +
                          std::to_string(kEnumerationCap));
}

void check_oracle_size(int n) {
    if (n < 1) throw InvalidPosition("n must be >= 1");
    if (n > kOracleCap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the oracle cap " +
                          std::to_string(kOracleCap));
}

// Depth-first construction of cycle words (1, c_2, ..., c_n) in lexicographic
// order. A branch dies as soon as the prefix contains the cycle pattern; the
// one-line patterns only become decidable at complete words, so they are
// tested at the leaves.
class PrefixSearch {
public:
    PrefixSearch(int n, const AvoidanceSpec& spec)
        : n_(n), spec_(&spec), used_(static_cast<std::size_t>(n) + 1, 0) {
        prefix_.reserve(static_cast<std::size_t>(n));
        prefix_.push_back(1);
        used_[1] = 1;
    }

    template <typename Leaf>
    void run(Leaf&& leaf) {
        if (contains(prefix_, spec_->cycle_pattern)) return;  // length-1 cycle pattern
        extend(leaf);
    }

    // Restricts the search to the subtree with c_2 = first.
    template <typename Leaf>
    void run_shard(int first, Leaf&& leaf) {
        if (contains(prefix_, spec_->cycle_pattern)) return;
        descend(first, leaf);
    }

private:
    template <typename Leaf>
    void extend(Leaf& leaf) {
        if (static_cast<int>(prefix_.size()) == n_) {
            emit(leaf);
            return;
        }
        for (int v = 2; v <= n_; ++v)
            if (!used_[static_cast<std::size_t>(v)]) descend(v, leaf);
    }

    template <typename Leaf>
    void descend(int v, Leaf& leaf) {
        prefix_.push_back(v);
        // the prefix avoided the pattern before, so only occurrences ending
        // at v are possible; a full scan finds exactly those
        if (!contains(prefix_, spec_->cycle_pattern)) {
            used_[static_cast<std::size_t>(v)] = 1;
            extend(leaf);
            used_[static_cast<std::size_t>(v)] = 0;
        }
        prefix_.pop_back();
    }

    template <typename Leaf>
    void emit(Leaf& leaf) {
        CycleWord w = CycleWord::from_word(prefix_);
        const Permutation p = from_cycle_word(w);
        for (const auto& pat : spec_->one_line_patterns)
            if (contains(p.one_line(), pat)) return;
        leaf(w);
    }

    int n_;
    const AvoidanceSpec* spec_;
    std::vector<char> used_;
    std::vector<int> prefix_;
};

}  // namespace

std::uint64_t PositionPartition::total() const {
    std::uint64_t sum = 0;
    for (const auto& [j, count] : counts_by_j) sum += count;
    return sum;
}

void for_each_cycle_word(int n, const std::function<void(const CycleWord&)>& visit) {
    check_oracle_size(n);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        visit(CycleWord::from_word(word));
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

void for_each_in_class(int n, const AvoidanceSpec& spec,
                       const std::function<void(const CycleWord&)>& yield) {
    check_enumeration_size(n);
    PrefixSearch search(n, spec);
    search.run(yield);
}

std::vector<CycleWord> enumerate_class(int n, const AvoidanceSpec& spec) {
    std::vector<CycleWord> words;
    for_each_in_class(n, spec, [&words](const CycleWord& w) { words.push_back(w); });
    return words;
}

std::uint64_t count_class(int n, const AvoidanceSpec& spec) {
    check_enumeration_size(n);
    if (n == 1) return count_class_serial(n, spec);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (int first = 2; first <= n; ++first) {
        PrefixSearch search(n, spec);
        std::uint64_t shard = 0;
        search.run_shard(first, [&shard](const CycleWord&) { ++shard; });
        total += shard;
    }
    return total;
}

std::uint64_t count_class_serial(int n, const AvoidanceSpec& spec) {
    check_enumeration_size(n);
    PrefixSearch search(n, spec);
    std::uint64_t total = 0;
    search.run([&total](const CycleWord&) { ++total; });
    return total;
}

std::uint64_t naive_count_oracle(int n, const AvoidanceSpec& spec) {
    std::uint64_t count = 0;
    for_each_cycle_word(n, [&](const CycleWord& w) {
        if (in_class(w, spec)) ++count;
    });
    return count;
}

PositionPartition partition_by_two(int n, const AvoidanceSpec& spec) {
    if (n < 2) throw InvalidPosition("partition_by_two needs n >= 2");
    check_enumeration_size(n);
    PositionPartition part{n, spec, {}};
    for (int j = 2; j <= n; ++j) part.counts_by_j[j] = 0;
    for_each_in_class(n, spec, [&part](const CycleWord& w) { ++part.counts_by_j[w.position_of(2)]; });
    return part;
}

PlusMinusSplit split_plus_minus(int n, const AvoidanceSpec& spec, int r) {
    if (r < 4 || r > n) throw InvalidPosition("split position r must satisfy 4 <= r <= n");
    check_enumeration_size(n);
    PlusMinusSplit split{n, r, 0, 0};
    for_each_in_class(n, spec, [&](const CycleWord& w) {
        if (w.position_of(2) != r) return;
        if (w.at(r - 1) == n)
            ++split.plus_count;
        else
            ++split.minus_count;
    });
    return split;
}

std::vector<std::pair<int, std::uint64_t>> sequence(const AvoidanceSpec& spec, int n_min,
                                                    int n_max, int cap) {
    if (n_min < 1 || n_min > n_max) throw InvalidPosition("need 1 <= n_min <= n_max");
    if (n_max > cap)
        throw CapExceeded("n_max = " + std::to_string(n_max) + " exceeds the cap " +
                          std::to_string(cap));
    std::vector<std::pair<int, std::uint64_t>> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) rows.emplace_back(n, count_class(n, spec));
    return rows;
}

}  // namespace cycav
