#pragma once

// Comparison kernels shared by the sort driver and the selectors. They work on a span of
// elements T viewed through a key projection, so the BFPRT selector can run either on keys
// directly or on positions into the array being sorted (which lets the sort learn where
// its pivot lives without an extra search).

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

#include "qslab/instrumented.hpp"

namespace qslab::detail {

struct Identity {
    Key operator()(Key k) const noexcept { return k; }
};

struct ByPosition {
    std::span<const Key> base;
    Key operator()(std::size_t i) const noexcept { return base[i]; }
};

// Index in {i, j, k} of the median of b[i], b[j], b[k]; 2 or 3 comparisons.
template <class Values>
std::size_t median3_index(const Values& b, std::size_t i, std::size_t j, std::size_t k,
                          Counters& c) {
    if (counted_less(b(i), b(j), c)) {
        if (counted_less(b(j), b(k), c)) return j;
        return counted_less(b(i), b(k), c) ? k : i;
    }
    if (counted_less(b(i), b(k), c)) return i;
    return counted_less(b(j), b(k), c) ? k : j;
}

// Partitions b[lo, hi) around the element at `pivot`. The pivot is parked at lo, the other
// elements are each compared with it exactly once by two converging scans, and the pivot is
// finally moved between the halves. Returns its final index k: b[lo, k) <= p <= b(k, hi).
template <class T, class KeyOf>
std::size_t partition_at(std::span<T> b, std::size_t lo, std::size_t hi, std::size_t pivot,
                         KeyOf key, Counters& c) {
    if (hi > b.size() || lo >= hi || pivot < lo || pivot >= hi) {
        throw std::out_of_range("partition: pivot outside range");
    }
    counted_swap(b, lo, pivot, c);
    const Key p = key(b[lo]);
    // b[lo+1, i) <= p, b(j, hi) >= p, [i, j] unclassified
    std::size_t i = lo + 1;
    std::size_t j = hi - 1;
    while (i <= j) {
        if (counted_less(key(b[i]), p, c)) {
            ++i;
            continue;
        }
        while (j > i && counted_less(p, key(b[j]), c)) --j;
        if (j == i) break;  // b[i] >= p already known
        counted_swap(b, i, j, c);
        ++i;
        --j;
    }
    counted_swap(b, lo, i - 1, c);
    return i - 1;
}

template <class T, class KeyOf>
void sort_small(std::span<T> b, std::size_t first, std::size_t len, KeyOf key, Counters& c) {
    for (std::size_t i = first + 1; i < first + len; ++i) {
        for (std::size_t j = i; j > first && counted_less(key(b[j]), key(b[j - 1]), c); --j) {
            counted_swap(b, j, j - 1, c);
        }
    }
}

// Index of the median of b[first, first+5) using 6 comparisons.
template <class T, class KeyOf>
std::size_t median5_index(std::span<const T> b, std::size_t first, KeyOf key, Counters& c) {
    std::size_t i0 = first, i1 = first + 1, i2 = first + 2, i3 = first + 3;
    const std::size_t i4 = first + 4;
    auto less = [&](std::size_t x, std::size_t y) { return counted_less(key(b[x]), key(b[y]), c); };
    if (less(i1, i0)) std::swap(i0, i1);
    if (less(i3, i2)) std::swap(i2, i3);
    if (less(i2, i0)) {
        std::swap(i0, i2);
        std::swap(i1, i3);
    }
    // i0 is below three others: not the median
    i0 = i4;
    if (less(i1, i0)) std::swap(i0, i1);
    if (less(i2, i0)) {
        std::swap(i0, i2);
        std::swap(i1, i3);
    }
    // the two smallest are gone and i2 < i3
    return less(i1, i2) ? i1 : i2;
}

template <class T, class KeyOf>
std::size_t select_index(std::span<T> b, std::size_t k, KeyOf key, Counters& c);

// BFPRT pivot step. Moves the median of each group of five to the front of b and returns the
// index of the exact median of those medians.
template <class T, class KeyOf>
std::size_t median_of_medians_index(std::span<T> b, KeyOf key, Counters& c) {
    const std::size_t m = b.size();
    if (m == 0) throw std::invalid_argument("median_of_medians: empty input");
    const std::size_t groups = (m + 4) / 5;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t first = 5 * g;
        const std::size_t len = std::min<std::size_t>(5, m - first);
        std::size_t med;
        if (len == 5) {
            med = median5_index(std::span<const T>(b), first, key, c);
        } else {
            sort_small(b, first, len, key, c);
            med = first + len / 2;
        }
        // g <= first: only already processed slots are overwritten
        counted_swap(b, g, med, c);
    }
    if (groups == 1) return 0;
    return select_index(b.first(groups), groups / 2, key, c);
}

// Rearranges b so that b[k] holds the element of rank k, and returns k.
template <class T, class KeyOf>
std::size_t select_index(std::span<T> b, std::size_t k, KeyOf key, Counters& c) {
    if (k >= b.size()) throw std::out_of_range("select_bfprt: rank out of range");
    std::size_t lo = 0;
    std::size_t hi = b.size();
    for (;;) {
        if (hi - lo <= 5) {
            sort_small(b, lo, hi - lo, key, c);
            return k;
        }
        const std::size_t pivot = lo + median_of_medians_index(b.subspan(lo, hi - lo), key, c);
        const std::size_t r = partition_at(b, lo, hi, pivot, key, c);
        if (k == r) return k;
        if (k < r) {
            hi = r;
        } else {
            lo = r + 1;
        }
    }
}

}  // namespace qslab::detail
