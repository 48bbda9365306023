#include <catch_amalgamated.hpp>

#include <partcolor/partition_tables.hpp>
#include <partcolor/series.hpp>

using namespace partcolor;

TEST_CASE("unrestricted table", "[tables]") {
    const auto t = build_partition_table(10);
    CHECK(t.kind() == TableKind::unrestricted);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(4, 2) == 2);
    CHECK(partition_count(0, t) == 1);
    CHECK(partition_count(4, t) == 5);
    CHECK(partition_count(7, t) == 15);
    CHECK(partition_count(10, t) == 42);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(t.at(n, 0) == 0);
        CHECK(t.at(n, 1) == 1);
        CHECK(t.at(n, n) == 1);
    }
    CHECK(t.at(3, 5) == 0);
    CHECK_THROWS_AS(partition_count(11, t), std::out_of_range);
    CHECK_THROWS_AS(t.at(11, 1), std::out_of_range);
}

TEST_CASE("distinct table", "[tables]") {
    const auto t = build_distinct_table(20);
    CHECK(t.at(3, 2) == 1);
    CHECK(t.at(5, 3) == 0);
    CHECK(t.row_sum(9) == 8);
    for (std::size_t n = 0; n <= 20; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            if (2 * n < m * (m + 1)) CHECK(t.at(n, m) == 0);
        }
    }
    CHECK_THROWS_AS(partition_count(3, t), std::invalid_argument);
}

TEST_CASE("tables agree with the generating functions", "[tables][property]") {
    const std::size_t N = 120;
    const PartitionTables tables(N);
    const auto p = euler_product(1, N, ProductKind::reciprocal);
    const auto q = euler_product(1, N, ProductKind::binomial);
    for (std::size_t n = 0; n <= N; ++n) {
        CHECK(tables.unrestricted.row_sum(n) == p[n]);
        CHECK(tables.distinct.row_sum(n) == q[n]);
    }
}

TEST_CASE("staircase bijection d(n,m) = P(n - m(m-1)/2, m)", "[tables][property]") {
    const std::size_t N = 100;
    const PartitionTables tables(N);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            const std::size_t shift = m == 0 ? 0 : m * (m - 1) / 2;
            const BigInt expected = shift <= n ? tables.unrestricted.at(n - shift, m) : BigInt(0);
            CHECK(tables.distinct.at(n, m) == expected);
        }
    }
}

TEST_CASE("binomial coefficients", "[tables]") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    for (std::size_t k = 0; k <= 30; ++k) {
        CHECK(binomial(k, 0) == 1);
        CHECK(binomial(k, k) == 1);
        for (std::size_t j = 1; j <= k; ++j) CHECK(binomial(k + 1, j) == binomial(k, j) + binomial(k, j - 1));
    }
}
