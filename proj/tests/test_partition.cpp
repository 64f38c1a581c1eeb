#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "schurlc/partition.hpp"

using namespace schurlc;

namespace {

// Euler pentagonal-number recurrence, independent of enumerate_partitions.
std::vector<long long> partition_numbers(int max_n) {
    std::vector<long long> p(max_n + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition construction and canonical form") {
    CHECK(P({}).size() == 0);
    CHECK(P({3, 1}).size() == 4);
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));  // zero parts stripped
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    // brute-force column count over the diagram of (4,4,1,1)
    CHECK(conjugate(P({4, 4, 1, 1})) == P({4, 2, 2, 2}));
}

TEST_CASE("conjugate is an involution, sizes <= 20") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).size() == n);
        }
}

TEST_CASE("is_column_even examples") {
    CHECK(is_column_even(P({2, 2})));
    CHECK_FALSE(is_column_even(P({3, 1})));
    CHECK(is_column_even(P({2, 2, 1, 1})));
    CHECK(is_column_even(P({})));
}

TEST_CASE("column-even implies even size, sizes <= 20") {
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : enumerate_partitions(n))
            if (is_column_even(p)) CHECK(n % 2 == 0);
}

TEST_CASE("enumeration order and count") {
    std::vector<Partition> of4 = enumerate_partitions(4);
    REQUIRE(of4.size() == 5);
    CHECK(of4[0] == P({4}));
    CHECK(of4[1] == P({3, 1}));
    CHECK(of4[2] == P({2, 2}));
    CHECK(of4[3] == P({2, 1, 1}));
    CHECK(of4[4] == P({1, 1, 1, 1}));

    std::vector<Partition> filtered = enumerate_partitions(3, 2);
    REQUIRE(filtered.size() == 1);
    CHECK(filtered[0] == P({2, 1}));

    std::vector<Partition> zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == P({}));
}

TEST_CASE("enumeration matches the Euler recurrence, n <= 40") {
    std::vector<long long> p = partition_numbers(40);
    for (int n = 0; n <= 40; ++n)
        CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(p[n]));
}

TEST_CASE("theta partitions of n biject with partitions of n/2, even n <= 40") {
    std::vector<long long> p = partition_numbers(20);
    for (int n = 0; n <= 40; n += 2) {
        long long theta_count = 0;
        for (const Partition& q : enumerate_partitions(n))
            if (is_column_even(q)) ++theta_count;
        CHECK(theta_count == p[n / 2]);
    }
}

TEST_CASE("sort_split examples") {
    CHECK(sort_split(P({3, 1}), P({2, 2})) == std::pair{P({3, 2}), P({2, 1})});
    CHECK(sort_split(P({2, 1, 1}), P({2})) == std::pair{P({2, 1}), P({2, 1})});
    CHECK(sort_split(P({}), P({5, 3})) == std::pair{P({5}), P({3})});
}

TEST_CASE("sort_split containment, size pairs <= 10") {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; a + b <= 10; ++b)
            for (const Partition& x : enumerate_partitions(a))
                for (const Partition& y : enumerate_partitions(b)) {
                    auto [s1, s2] = sort_split(x, y);
                    CHECK(s1.size() + s2.size() == a + b);
                    CHECK(s1.contains(s2));
                }
}

TEST_CASE("midpoint_shapes examples") {
    auto [lo1, hi1] = midpoint_shapes(SkewShape(P({4}), P({})), SkewShape(P({2, 2}), P({})));
    CHECK(lo1 == SkewShape(P({3, 1}), P({})));
    CHECK(hi1 == SkewShape(P({3, 1}), P({})));

    auto [lo2, hi2] = midpoint_shapes(SkewShape(P({3}), P({})), SkewShape(P({2}), P({})));
    CHECK(lo2 == SkewShape(P({2}), P({})));
    CHECK(hi2 == SkewShape(P({3}), P({})));

    SkewShape same(P({3, 2}), P({1}));
    auto [lo3, hi3] = midpoint_shapes(same, same);
    CHECK(lo3 == same);
    CHECK(hi3 == same);
}

TEST_CASE("midpoint sizes add up") {
    SkewShape a(P({4, 2, 1}), P({2, 1}));
    SkewShape b(P({3, 3}), P({1}));
    auto [lo, hi] = midpoint_shapes(a, b);
    CHECK(lo.size() + hi.size() == a.size() + b.size());
}

TEST_CASE("skew containment enforced") {
    CHECK_THROWS_AS(SkewShape(P({2}), P({3})), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape(P({3, 1}), P({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("partition parsing") {
    CHECK(parse_partition("3,3,2,2") == P({3, 3, 2, 2}));
    CHECK(parse_partition("3^2,2^2") == P({3, 3, 2, 2}));
    CHECK(parse_partition("4,2^2,1") == P({4, 2, 2, 1}));
    CHECK(parse_partition("-") == P({}));
    CHECK(parse_partition("") == P({}));
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2^0"), std::invalid_argument);
}

TEST_CASE("to_string round trip") {
    CHECK(P({3, 3, 2, 2}).to_string() == "3,3,2,2");
    CHECK(P({}).to_string() == "-");
    CHECK(parse_partition(P({5, 2, 1}).to_string()) == P({5, 2, 1}));
}
