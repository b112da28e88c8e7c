#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

namespace qslab {

using Key = std::int64_t;

/// Which part of the sort is currently spending comparisons.
enum class Phase : std::uint8_t { Partition = 0, Selection = 1 };

/// Per-run tallies. One instance belongs to exactly one trial.
struct Counters {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t max_depth = 0;  // deepest partition level reached (root = 1)

    // comparisons split by phase; always sums to `comparisons`
    std::array<std::uint64_t, 2> phase_comparisons{};
    Phase phase = Phase::Partition;

    [[nodiscard]] std::uint64_t partition_comparisons() const noexcept {
        return phase_comparisons[static_cast<std::size_t>(Phase::Partition)];
    }
    [[nodiscard]] std::uint64_t selection_comparisons() const noexcept {
        return phase_comparisons[static_cast<std::size_t>(Phase::Selection)];
    }

    void note_depth(std::uint64_t depth) noexcept { max_depth = std::max(max_depth, depth); }

    friend bool operator==(const Counters&, const Counters&) = default;
};

/// The only place where keys are compared.
inline bool counted_less(Key a, Key b, Counters& c) noexcept {
    ++c.comparisons;
    ++c.phase_comparisons[static_cast<std::size_t>(c.phase)];
    return a < b;
}

/// Exchanges a[i] and a[j]. Self-swaps are counted too.
template <class T>
void counted_swap(std::span<T> a, std::size_t i, std::size_t j, Counters& c) {
    if (i >= a.size() || j >= a.size()) throw std::out_of_range("counted_swap: index out of range");
    std::swap(a[i], a[j]);
    ++c.swaps;
}

/// Switches the active phase for the lifetime of the scope.
class PhaseScope {
public:
    PhaseScope(Counters& c, Phase p) noexcept : c_(c), saved_(c.phase) { c_.phase = p; }
    ~PhaseScope() { c_.phase = saved_; }
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    Counters& c_;
    Phase saved_;
};

}  // namespace qslab
