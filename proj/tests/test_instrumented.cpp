#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qslab/generators.hpp"
#include "qslab/instrumented.hpp"
#include "qslab/sort_core.hpp"

using namespace qslab;

TEST_CASE("counted_less counts exactly one comparison") {
    Counters c;
    CHECK(counted_less(1, 2, c));
    CHECK(c.comparisons == 1);
    CHECK_FALSE(counted_less(5, 5, c));
    CHECK(c.comparisons == 2);
    CHECK_FALSE(counted_less(7, 3, c));
    CHECK(c.comparisons == 3);
    CHECK(c.partition_comparisons() == 3);
    CHECK(c.selection_comparisons() == 0);
}

TEST_CASE("counted_swap exchanges and counts self-swaps") {
    Counters c;
    std::vector<Key> a{1, 2};
    counted_swap(std::span<Key>(a), 0, 1, c);
    CHECK(a == std::vector<Key>{2, 1});
    CHECK(c.swaps == 1);

    std::vector<Key> one{7};
    counted_swap(std::span<Key>(one), 0, 0, c);
    CHECK(one == std::vector<Key>{7});
    CHECK(c.swaps == 2);

    CHECK_THROWS_AS(counted_swap(std::span<Key>(a), 0, 2, c), std::out_of_range);
    CHECK(c.swaps == 2);
}

TEST_CASE("random swap sequences preserve the multiset") {
    std::mt19937_64 rng(3);
    std::vector<Key> a{4, 4, 1, 9, 0, -3, 7, 7, 7, 2};
    const auto before = oracle::sorted_copy(a);
    Counters c;
    std::uniform_int_distribution<std::size_t> idx(0, a.size() - 1);
    for (int i = 0; i < 1000; ++i) counted_swap(std::span<Key>(a), idx(rng), idx(rng), c);
    CHECK(oracle::sorted_copy(a) == before);
    CHECK(c.swaps == 1000);
}

TEST_CASE("PhaseScope routes comparisons and restores the previous phase") {
    Counters c;
    {
        PhaseScope outer(c, Phase::Selection);
        counted_less(1, 2, c);
        {
            PhaseScope inner(c, Phase::Partition);
            counted_less(1, 2, c);
        }
        counted_less(1, 2, c);
    }
    CHECK(c.phase == Phase::Partition);
    CHECK(c.selection_comparisons() == 2);
    CHECK(c.partition_comparisons() == 1);
}

TEST_CASE("phase totals add up for every strategy") {
    const std::vector<SortConfig> configs{
        {Strategy::Rand, 1, false, 5},   {Strategy::Med3, 1},    {Strategy::PMed9, 1},
        {Strategy::TBfprt, 1},           {Strategy::TBfprt, 40}, {Strategy::TPMed3L, 3},
        {Strategy::TPMed3L, 40, true},
    };
    for (const auto& cfg : configs) {
        auto a = gen_random_distinct(5000, 11);
        const Counters c = quicksort(a, cfg);
        CAPTURE(to_string(cfg.strategy));
        CHECK(c.partition_comparisons() + c.selection_comparisons() == c.comparisons);
        CHECK(c.comparisons >= a.size() - 1);
        if (cfg.strategy == Strategy::Rand) CHECK(c.selection_comparisons() == 0);
        else CHECK(c.selection_comparisons() > 0);
    }
}

TEST_CASE("counters are a deterministic function of input and config") {
    for (auto strategy : {Strategy::Rand, Strategy::PMed9, Strategy::TBfprt, Strategy::TPMed3L}) {
        const SortConfig cfg{strategy, 4, false, 99};
        auto a = gen_random_distinct(3000, 8);
        auto b = a;
        CHECK(quicksort(a, cfg) == quicksort(b, cfg));
        CHECK(a == b);
    }
}
