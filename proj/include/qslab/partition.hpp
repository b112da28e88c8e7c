#pragma once

#include <cstddef>
#include <span>

#include "qslab/instrumented.hpp"

namespace qslab {

// Single-pivot partition of a[lo, hi) around the element at pivot_index (lo <= pivot_index < hi).
//
// The pivot is set aside at lo, the remaining hi - lo - 1 elements are each compared with it
// exactly once by two indices scanning towards each other (out-of-place pairs are swapped),
// and the pivot is then swapped into the gap. Returns the pivot's final index k:
// a[lo, k) <= p, a[k] == p, a(k, hi) >= p.
std::size_t hoare_partition(std::span<Key> a, std::size_t lo, std::size_t hi,
                            std::size_t pivot_index, Counters& c);

}  // namespace qslab
