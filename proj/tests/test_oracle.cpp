#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include <partcolor/families.hpp>
#include <partcolor/oracle.hpp>

using namespace partcolor;
using namespace partcolor::families;
using oracle::Parts;

TEST_CASE("partition enumeration", "[oracle]") {
    const auto p4 = oracle::enumerate_partitions(4, false);
    CHECK(p4 == std::vector<Parts>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(oracle::enumerate_partitions(3, true) == std::vector<Parts>{{3}, {2, 1}});
    CHECK(oracle::enumerate_partitions(1, true) == std::vector<Parts>{{1}});

    for (std::size_t n = 1; n <= 15; ++n) {
        for (bool distinct : {false, true}) {
            const auto all = oracle::enumerate_partitions(n, distinct);
            CHECK(std::is_sorted(all.rbegin(), all.rend()));
            CHECK(std::set<Parts>(all.begin(), all.end()).size() == all.size());
            for (const auto& p : all) {
                CHECK(std::accumulate(p.begin(), p.end(), std::size_t{0}) == n);
                if (distinct) CHECK(std::adjacent_find(p.begin(), p.end(), std::less_equal<>()) == p.end());
                else CHECK(std::is_sorted(p.rbegin(), p.rend()));
            }
        }
    }
    CHECK(oracle::enumerate_partitions(20, false).size() == 627);
    CHECK(oracle::enumerate_partitions(20, true).size() == 64);
}

TEST_CASE("worked counts", "[oracle]") {
    CHECK(oracle::brute_count(cp, 2, 2) == 6);
    CHECK(oracle::brute_count(d, 2, 3) == 6);
    CHECK(oracle::brute_count(ep, 2, 2) == 2);
    CHECK(oracle::brute_count(dd, 3, 3) == 9);
    CHECK(oracle::brute_count(edistinct, 4, 15) == 384);
}

TEST_CASE("equal parts with swapped colors are distinct objects", "[oracle]") {
    const auto listed = oracle::enumerate_colored(ep, 2, 2);
    REQUIRE(listed.size() == 2);
    CHECK(listed[0] == oracle::ColoredPartition{{1, 1}, {1, 2}});
    CHECK(listed[1] == oracle::ColoredPartition{{1, 1}, {2, 1}});
}

TEST_CASE("adjacency is judged on the sorted part list", "[oracle]") {
    // 2+1+1 colored (1,2,1) is admissible; the same multiset colored
    // (1,1,2) is not, although reordering parts 1,2 would fix it
    const auto listed = oracle::enumerate_colored(d, 2, 4);
    auto has = [&](Parts p, std::vector<std::size_t> c) {
        return std::find(listed.begin(), listed.end(), oracle::ColoredPartition{p, c}) != listed.end();
    };
    CHECK(has({2, 1, 1}, {1, 2, 1}));
    CHECK_FALSE(has({2, 1, 1}, {1, 1, 2}));
}

TEST_CASE("budget guard", "[oracle]") {
    CHECK_THROWS_AS(oracle::brute_count(cp, 4, 10, 1000), oracle::BudgetExceeded);
    CHECK_THROWS_WITH(oracle::brute_count(cp, 4, 10, 1000), Catch::Matchers::ContainsSubstring("out of budget"));
    // exactly CP_2(3) = 14 candidates
    CHECK(oracle::brute_count(cp, 2, 3, 14) == 14);
    CHECK_THROWS_AS(oracle::brute_count(cp, 2, 3, 13), oracle::BudgetExceeded);
    CHECK_THROWS_AS(oracle::brute_count(cp, 0, 3), std::invalid_argument);
}

TEST_CASE("oracle agrees with the part-count path", "[oracle][property]") {
    const PartitionTables tables(10);
    for (auto f : all_families) {
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto seq = msum_sequence(f, k, 10, tables);
            for (std::size_t n = 1; n <= 10; ++n) {
                INFO(symbol(f) << "_" << k << "(" << n << ")");
                CHECK(oracle::brute_count(f, k, n) == seq.values[n - 1]);
            }
        }
    }
}
