#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cycav/enumerate.hpp"
#include "oracles.hpp"

using namespace cycav;

namespace {

const std::vector<const char*> kStandardSpecs = {
    "3421,4321;213", "4321;213",      "4312,4321;213", "3412,4321;213",
    "1324,1423;213", "132;213",       ";213",
};

}  // namespace

TEST_CASE("enumerate_class on the worked examples") {
    const auto s3 = enumerate_class(3, parse_avoidance_spec(";213"));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == parse_cycle_word("(1,2,3)"));
    CHECK(s3[1] == parse_cycle_word("(1,3,2)"));

    const auto s2 = enumerate_class(2, parse_avoidance_spec("3421,4321;213"));
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == parse_cycle_word("(1,2)"));

    CHECK(enumerate_class(5, parse_avoidance_spec("1324,1423;213")).size() == 11);
}

TEST_CASE("count_class on the worked examples") {
    CHECK(count_class(4, parse_avoidance_spec("3421,4321;213")) == 5);
    CHECK(count_class(4, parse_avoidance_spec("4312,4321;213")) == 4);
    CHECK(count_class(4, parse_avoidance_spec("3412,4321;213")) == 5);
}

TEST_CASE("pruned enumeration matches the naive listing, n <= 6") {
    for (const char* text : kStandardSpecs) {
        const AvoidanceSpec spec = parse_avoidance_spec(text);
        for (int n = 1; n <= 6; ++n) {
            const auto pruned = enumerate_class(n, spec);
            const auto naive = testing::enumerate_naive(n, spec);
            REQUIRE(pruned == naive);  // same words, same lexicographic order
        }
    }
}

TEST_CASE("count_class, serial kernel and oracles all agree, n <= 7") {
    for (const char* text : kStandardSpecs) {
        const AvoidanceSpec spec = parse_avoidance_spec(text);
        for (int n = 1; n <= 7; ++n) {
            const std::uint64_t parallel = count_class(n, spec);
            REQUIRE(parallel == count_class_serial(n, spec));
            REQUIRE(parallel == naive_count_oracle(n, spec));
            REQUIRE(parallel == testing::count_naive(n, spec));
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    const AvoidanceSpec spec = parse_avoidance_spec("1324,1423;213");
    CHECK(enumerate_class(7, spec) == enumerate_class(7, spec));
}

TEST_CASE("naive_count_oracle on the worked examples") {
    CHECK(naive_count_oracle(3, parse_avoidance_spec(";213")) == 2);
    CHECK(naive_count_oracle(4, parse_avoidance_spec("1324,1423;213")) == 5);
    // 213-avoiding cycle words of length 5: the leading 1 cannot take part in
    // an occurrence, so these are counted by the 4th Catalan number
    CHECK(naive_count_oracle(5, parse_avoidance_spec(";213")) == 14);
}

TEST_CASE("partition_by_two on the worked examples") {
    const AvoidanceSpec spec = parse_avoidance_spec("1324,1423;213");
    CHECK(partition_by_two(5, spec).counts_by_j.at(5) == 3);
    CHECK(partition_by_two(6, spec).counts_by_j.at(2) == 6);
}

TEST_CASE("partition cells sum to the class size") {
    for (const char* text : kStandardSpecs) {
        const AvoidanceSpec spec = parse_avoidance_spec(text);
        for (int n = 2; n <= 7; ++n) {
            const PositionPartition part = partition_by_two(n, spec);
            REQUIRE(part.total() == count_class(n, spec));
            REQUIRE(part.counts_by_j.size() == static_cast<std::size_t>(n - 1));
        }
    }
}

TEST_CASE("split_plus_minus on the worked examples") {
    const AvoidanceSpec spec = parse_avoidance_spec("1324,1423;213");
    CHECK(split_plus_minus(7, spec, 4).plus_count == 3);  // n - r
    CHECK(split_plus_minus(7, spec, 7).plus_count == 1);

    std::uint64_t plus_sum = 0;
    for (int r = 4; r <= 6; ++r) plus_sum += split_plus_minus(6, spec, r).plus_count;
    CHECK(plus_sum == 4);  // C(3,2) + 1

    CHECK_THROWS_AS(split_plus_minus(7, spec, 3), InvalidPosition);
    CHECK_THROWS_AS(split_plus_minus(7, spec, 8), InvalidPosition);
}

TEST_CASE("plus and minus cells refine the partition cell") {
    const AvoidanceSpec spec = parse_avoidance_spec("1324,1423;213");
    for (int n = 4; n <= 8; ++n) {
        const PositionPartition part = partition_by_two(n, spec);
        for (int r = 4; r <= n; ++r) {
            const PlusMinusSplit split = split_plus_minus(n, spec, r);
            REQUIRE(split.plus_count + split.minus_count == part.counts_by_j.at(r));
        }
    }
}

TEST_CASE("sequence on the worked examples") {
    using Row = std::pair<int, std::uint64_t>;
    CHECK(sequence(parse_avoidance_spec("4321;213"), 2, 6) ==
          std::vector<Row>{{2, 1}, {3, 2}, {4, 5}, {5, 13}, {6, 34}});
    CHECK(sequence(parse_avoidance_spec("4312,4321;213"), 2, 5) ==
          std::vector<Row>{{2, 1}, {3, 2}, {4, 4}, {5, 8}});
    CHECK(sequence(parse_avoidance_spec("3412,4321;213"), 2, 5) ==
          std::vector<Row>{{2, 1}, {3, 2}, {4, 5}, {5, 12}});
}

TEST_CASE("caps and degenerate sizes") {
    const AvoidanceSpec spec = parse_avoidance_spec(";213");
    CHECK_THROWS_AS(sequence(spec, 2, 13), CapExceeded);
    CHECK_THROWS_AS(count_class(13, spec), CapExceeded);
    CHECK_THROWS_AS(naive_count_oracle(11, spec), CapExceeded);
    CHECK_THROWS_AS(sequence(spec, 0, 4), InvalidPosition);
    CHECK_THROWS_AS(sequence(spec, 5, 4), InvalidPosition);
    CHECK_THROWS_AS(partition_by_two(1, spec), InvalidPosition);

    // n = 1: the single cycle word (1); a length-1 cycle pattern kills it
    CHECK(count_class(1, spec) == 1);
    CHECK(enumerate_class(1, spec).size() == 1);
    CHECK(count_class(1, parse_avoidance_spec(";1")) == 0);
}

TEST_CASE("every member with 2 at position r splits the letters around it") {
    // the prefix before 2 carries the top r-2 values, the tail the rest
    for (const char* text : kStandardSpecs) {
        const AvoidanceSpec spec = parse_avoidance_spec(text);
        for (int n = 3; n <= 7; ++n) {
            for_each_in_class(n, spec, [n](const CycleWord& w) {
                const int r = w.position_of(2);
                for (int i = 2; i < r; ++i) REQUIRE(w.at(i) >= n - r + 3);
                for (int i = r + 1; i <= w.size(); ++i) REQUIRE(w.at(i) <= n - r + 2);
            });
        }
    }
}

TEST_CASE("members of the 4321 class keep the letters after 2 increasing") {
    const AvoidanceSpec spec = parse_avoidance_spec("4321;213");
    for (int n = 3; n <= 8; ++n) {
        for_each_in_class(n, spec, [](const CycleWord& w) {
            if (w.at(2) == 2) return;
            const int r = w.position_of(2);
            for (int i = r + 1; i < w.size(); ++i) REQUIRE(w.at(i) < w.at(i + 1));
        });
    }
}

TEST_CASE("members of the 1324/1423 class with interior 2 take one of two shapes") {
    const AvoidanceSpec spec = parse_avoidance_spec("1324,1423;213");
    for (int n = 6; n <= 8; ++n) {
        for_each_in_class(n, spec, [n](const CycleWord& w) {
            const int r = w.position_of(2);
            if (r <= 2 || r >= n) return;
            bool rising_prefix = w.at(r - 1) == n;
            for (int i = 2; i + 1 <= r - 1 && rising_prefix; ++i)
                if (w.at(i) >= w.at(i + 1)) rising_prefix = false;
            bool rising_tail = w.at(r - 1) == w.at(n) + 1;
            for (int i = r + 1; i + 1 <= n && rising_tail; ++i)
                if (w.at(i) >= w.at(i + 1)) rising_tail = false;
            REQUIRE((rising_prefix || rising_tail));
            if (rising_tail && !rising_prefix) REQUIRE(r > 3);
            if (r == 3) REQUIRE(w.at(2) == n);
        });
    }
}
