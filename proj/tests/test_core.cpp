#include "doctest.h"

#include <set>
#include <vector>

#include "qpf/core.hpp"

using namespace qpf;

namespace {

std::vector<std::uint64_t> collect(const BetaSet& set) {
    return {set.begin(), set.end()};
}

} // namespace

TEST_CASE("Domain validates and sizes") {
    CHECK(Domain(1).size == 2);
    CHECK(Domain(10).size == 1024);
    CHECK_THROWS_AS(Domain(0), std::invalid_argument);
    CHECK_THROWS_AS(Domain(-3), std::invalid_argument);
    CHECK(Domain(4).contains(15));
    CHECK_FALSE(Domain(4).contains(16));
}

TEST_CASE("beta_members enumerates strings with a cleared bit") {
    CHECK(collect(beta_members(Domain(4), 2)) ==
          std::vector<std::uint64_t>{0, 1, 2, 3, 8, 9, 10, 11});
    CHECK(collect(beta_members(Domain(1), 0)) == std::vector<std::uint64_t>{0});
    CHECK(collect(beta_members(Domain(3), 0)) == std::vector<std::uint64_t>{0, 2, 4, 6});
    CHECK_THROWS_AS(beta_members(Domain(3), 3), std::out_of_range);
    CHECK_THROWS_AS(beta_members(Domain(3), -1), std::out_of_range);
}

TEST_CASE("beta_members yields ascending order and half the domain") {
    for (int n = 1; n <= 10; ++n) {
        const Domain domain(n);
        for (int q = 0; q < n; ++q) {
            const BetaSet set(domain, q);
            CHECK(set.size() == domain.size / 2);
            std::uint64_t previous = 0;
            bool started = false;
            for (std::uint64_t b : set) {
                CHECK(((b >> q) & 1) == 0);
                if (started) CHECK(b > previous);
                previous = b;
                started = true;
            }
        }
    }
}

TEST_CASE("complement_string flips exactly the requested zero bit") {
    CHECK(complement_string(0, 2) == 4);
    CHECK(complement_string(3, 2) == 7);  // 0011 -> 0111
    CHECK(complement_string(3, 3) == 11); // 0011 -> 1011
    CHECK(complement_string(9, 1) == 11); // 1001 -> 1011
    CHECK_THROWS_AS(complement_string(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(complement_string(0, 70), std::out_of_range);
}

TEST_CASE("beta set and complements partition the domain") {
    for (int n = 1; n <= 10; ++n) {
        const Domain domain(n);
        for (int q = 0; q < n; ++q) {
            std::set<std::uint64_t> seen;
            for (std::uint64_t b : beta_members(domain, q)) {
                seen.insert(b);
                seen.insert(complement_string(b, q));
            }
            CHECK(seen.size() == domain.size);
            CHECK(*seen.begin() == 0);
            CHECK(*seen.rbegin() == domain.size - 1);
        }
    }
}

TEST_CASE("beta_range produces the documented intervals") {
    const IntervalRange last = beta_range(Domain(6), 5);
    REQUIRE(last.count() == 1);
    CHECK(last.intervals()[0].lo == 0);
    CHECK(last.intervals()[0].hi == 32);

    const IntervalRange penultimate = beta_range(Domain(6), 4);
    REQUIRE(penultimate.count() == 2);
    CHECK(penultimate.intervals()[0].lo == 0);
    CHECK(penultimate.intervals()[0].hi == 16);
    CHECK(penultimate.intervals()[1].lo == 32);
    CHECK(penultimate.intervals()[1].hi == 48);

    const IntervalRange n4q1 = beta_range(Domain(4), 1);
    REQUIRE(n4q1.count() == 4);
    const std::vector<Interval> expected{{0, 2}, {4, 6}, {8, 10}, {12, 14}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(n4q1.intervals()[i].lo == expected[i].lo);
        CHECK(n4q1.intervals()[i].hi == expected[i].hi);
    }

    CHECK_THROWS_AS(beta_range(Domain(4), 4), std::out_of_range);
}

TEST_CASE("beta_range interval count, width and spacing follow the closed form") {
    for (int n = 1; n <= 12; ++n) {
        const Domain domain(n);
        for (int q = 0; q < n; ++q) {
            const int q_from_last = n - 1 - q;
            const IntervalRange range = beta_range(domain, q);
            CHECK(range.count() == (std::uint64_t{1} << q_from_last));
            CHECK(range.measure() == domain.size / 2);
            const std::uint64_t width = domain.size >> (q_from_last + 1);
            const std::uint64_t spacing = domain.size >> q_from_last;
            CHECK(range.intervals().front().lo == 0);
            for (std::size_t j = 0; j < range.count(); ++j) {
                const Interval& iv = range.intervals()[j];
                CHECK(iv.width() == width);
                CHECK(iv.lo == j * spacing);
            }
        }
    }
}

TEST_CASE("beta_range integers agree with beta_members exhaustively") {
    for (int n = 1; n <= 12; ++n) {
        const Domain domain(n);
        for (int q = 0; q < n; ++q) {
            const IntervalRange range = beta_range(domain, q);
            const BetaSet set(domain, q);
            for (std::uint64_t b = 0; b < domain.size; ++b) {
                CHECK(range.contains(static_cast<double>(b)) == set.contains(b));
            }
        }
    }
}

TEST_CASE("interval containment is half-open at both ends") {
    const IntervalRange range = beta_range(Domain(4), 1); // [0,2) u [4,6) u ...
    CHECK(range.contains(0.0));
    CHECK(range.contains(1.999));
    CHECK_FALSE(range.contains(2.0));
    CHECK_FALSE(range.contains(3.999));
    CHECK(range.contains(4.0));
    CHECK_FALSE(range.contains(-1.0));
    CHECK_FALSE(range.contains(16.0));

    // Exact rational membership: 14/7 = 2 sits on a closed-open boundary.
    CHECK_FALSE(range.contains_ratio(14, 7));
    CHECK(range.contains_ratio(13, 7));
    CHECK(range.contains_ratio(28, 7));
}
