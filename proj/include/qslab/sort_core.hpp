#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qslab/instrumented.hpp"
#include "qslab/partition.hpp"
#include "qslab/pivot.hpp"

namespace qslab {

enum class Strategy : std::uint8_t { Rand, Med3, PMed9, TBfprt, TPMed3L };

std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// True for the selectors that take a thinning parameter.
constexpr bool is_thinned(Strategy s) noexcept {
    return s == Strategy::TBfprt || s == Strategy::TPMed3L;
}

struct SortConfig {
    Strategy strategy = Strategy::Med3;
    std::size_t s = 1;
    // Below the strategy's size threshold (n < 5s for TBfprt, n < s for TPMed3L) fall back to
    // median-of-three. Has no effect on the other strategies.
    bool adaptive_small = false;
    std::uint64_t seed = 0;
    BfprtPivot bfprt_pivot = BfprtPivot::MedianOfMedians;

    /// Throws std::invalid_argument if s == 0.
    void validate() const;
};

/// Sorts a ascending with single-pivot Hoare quicksort, all the way down to length-1
/// subarrays. Returns the run's counters.
Counters quicksort(std::span<Key> a, const SortConfig& cfg);

}  // namespace qslab
