#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qslab/partition.hpp"

using namespace qslab;

namespace {

void check_partitioned(const std::vector<Key>& a, std::size_t lo, std::size_t hi, std::size_t k, Key p) {
    REQUIRE(k >= lo);
    REQUIRE(k < hi);
    CHECK(a[k] == p);
    for (std::size_t i = lo; i < k; ++i) CHECK(a[i] <= p);
    for (std::size_t i = k + 1; i < hi; ++i) CHECK(a[i] >= p);
}

}  // namespace

TEST_CASE("two elements") {
    std::vector<Key> a{2, 1};
    Counters c;
    const std::size_t k = hoare_partition(a, 0, 2, 0, c);
    CHECK(k == 1);
    CHECK(a == std::vector<Key>{1, 2});
    CHECK(c.comparisons == 1);
}

TEST_CASE("every permutation of {1,2,3} around 2") {
    std::vector<Key> perm{1, 2, 3};
    int seen = 0;
    do {
        std::vector<Key> a = perm;
        const auto pivot = static_cast<std::size_t>(std::find(a.begin(), a.end(), 2) - a.begin());
        Counters c;
        const std::size_t k = hoare_partition(a, 0, 3, pivot, c);
        CHECK(k == 1);
        CHECK(a == std::vector<Key>{1, 2, 3});
        CHECK(c.comparisons == 2);
        ++seen;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(seen == 6);
}

TEST_CASE("true median of 100 distinct keys splits 50/49") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = oracle::random_permutation(100, rng);
        const Key median = oracle::sorted_copy(a)[50];
        const auto pivot = static_cast<std::size_t>(std::find(a.begin(), a.end(), median) - a.begin());
        Counters c;
        const std::size_t k = hoare_partition(a, 0, 100, pivot, c);
        CHECK(k == oracle::rank_of(a, median));
        CHECK(k >= 49);
        CHECK(k <= 51);
        check_partitioned(a, 0, 100, k, median);
    }
}

TEST_CASE("property: n-1 comparisons, partition order, multiset kept") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = 1 + rng() % 60;
        const std::size_t lo = rng() % 5;
        const std::size_t hi = lo + len;
        std::vector<Key> a(hi + rng() % 5);
        // small key range to exercise duplicates
        const Key range = trial % 2 == 0 ? 1000 : 4;
        for (auto& x : a) x = static_cast<Key>(rng() % range);
        const std::vector<Key> before = a;
        const std::size_t pivot = lo + rng() % len;
        const Key p = a[pivot];

        Counters c;
        const std::size_t k = hoare_partition(a, lo, hi, pivot, c);
        CHECK(c.comparisons == len - 1);
        check_partitioned(a, lo, hi, k, p);
        CHECK(std::equal(a.begin(), a.begin() + lo, before.begin()));
        CHECK(std::equal(a.begin() + hi, a.end(), before.begin() + hi));
        std::vector<Key> x(a.begin() + lo, a.begin() + hi), y(before.begin() + lo, before.begin() + hi);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        CHECK(x == y);
    }
}

TEST_CASE("pivot outside the range is rejected") {
    std::vector<Key> a{3, 1, 2, 5};
    Counters c;
    CHECK_THROWS_AS(hoare_partition(a, 1, 3, 0, c), std::out_of_range);
    CHECK_THROWS_AS(hoare_partition(a, 0, 5, 0, c), std::out_of_range);
    CHECK_THROWS_AS(hoare_partition(a, 2, 2, 2, c), std::out_of_range);
}
