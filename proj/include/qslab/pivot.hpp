#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qslab/instrumented.hpp"

namespace qslab {

using RandomStream = std::mt19937_64;

/// Every `stride`-th element of `base` starting at `offset`.
struct SampledView {
    std::span<const Key> base;
    std::size_t offset = 0;
    std::size_t stride = 1;
    std::size_t length = 0;

    /// The sample thinned-out BFPRT works on: floor(count / stride) elements taken from
    /// base[offset, offset + count).
    static SampledView thinned(std::span<const Key> base, std::size_t offset, std::size_t count,
                               std::size_t stride);

    [[nodiscard]] std::size_t index(std::size_t i) const noexcept { return offset + i * stride; }
    [[nodiscard]] Key operator[](std::size_t i) const { return base[index(i)]; }
    [[nodiscard]] std::size_t size() const noexcept { return length; }
};

/// How t-BFPRT turns its sample into a pivot.
enum class BfprtPivot : std::uint8_t {
    MedianOfMedians,  // one BFPRT pivot step: exact median of the group-of-five medians
    ExactMedian,      // full linear-time selection of the sample median
};

Key median_of_three(Key x, Key y, Key z, Counters& c);

std::size_t pivot_random(std::size_t lo, std::size_t hi, RandomStream& rng);

// Each selector below comes in two flavours: the `_index` form reports where in `a` the
// chosen pivot lives (what the sort driver needs), the plain form returns its key.

/// Median of a[lo], a[(lo+hi-1)/2], a[hi-1]; ranges of length 1-2 give a[lo].
std::size_t pivot_med3_index(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c);
Key pivot_med3(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c);

/// Ranges up to this length use median-of-three instead of the ninther (Bentley-McIlroy).
inline constexpr std::size_t kNintherCutoff = 40;

/// Tukey's ninther over the nine probes lo + k(len-1)/8, grouped in consecutive triples.
/// Ranges of at most kNintherCutoff elements fall back to median-of-three.
std::size_t pivot_pmed9_index(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c);
Key pivot_pmed9(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c);

/// Key of 0-based rank k in b (groups of five, worst-case linear). Reorders b.
Key select_bfprt(std::span<Key> b, std::size_t k, Counters& c);

/// The BFPRT pivot of b: splits b into contiguous groups of five, moves each group's median
/// to the front and returns the exact median of those medians. For m >= 40 its rank lies in
/// [0.3m - 6, 0.7m + 6]. Reorders b.
Key median_of_medians(std::span<Key> b, Counters& c);

/// Thinned-out BFPRT. Runs the selector on a[lo], a[lo+s], ..., a[lo+(m-1)s] with
/// m = floor((hi-lo)/s), using `scratch` for the sampled positions; a is not modified.
/// With m <= 1 the middle element of the range is returned.
std::size_t pivot_t_bfprt_index(std::span<const Key> a, std::size_t lo, std::size_t hi,
                                std::size_t s, std::vector<std::size_t>& scratch, Counters& c,
                                BfprtPivot mode = BfprtPivot::MedianOfMedians);
Key pivot_t_bfprt(std::span<const Key> a, std::size_t lo, std::size_t hi, std::size_t s,
                  std::vector<std::size_t>& scratch, Counters& c,
                  BfprtPivot mode = BfprtPivot::MedianOfMedians);

/// Thinned-out pseudo-median of 3^L: median-of-three of the recursive results on the three
/// thirds of the range (the last third takes the remainder), bottoming out at a[lo + n/2]
/// once n <= s. Ranges of fewer than three elements are also treated as leaves. Read-only.
std::size_t pivot_t_pmed3l_index(std::span<const Key> a, std::size_t lo, std::size_t hi,
                                 std::size_t s, Counters& c);
Key pivot_t_pmed3l(std::span<const Key> a, std::size_t lo, std::size_t hi, std::size_t s,
                   Counters& c);

}  // namespace qslab
