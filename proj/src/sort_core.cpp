#include "qslab/sort_core.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qslab {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 5> kNames{{
    {Strategy::Rand, "Rand"},
    {Strategy::Med3, "Med3"},
    {Strategy::PMed9, "PMed9"},
    {Strategy::TBfprt, "TBfprt"},
    {Strategy::TPMed3L, "TPMed3L"},
}};

class Sorter {
public:
    Sorter(std::span<Key> a, const SortConfig& cfg) : a_(a), cfg_(cfg), rng_(cfg.seed) {}

    Counters run() {
        sort(0, a_.size(), 0);
        return c_;
    }

private:
    bool use_fallback(std::size_t n) const {
        if (!cfg_.adaptive_small) return false;
        switch (cfg_.strategy) {
            case Strategy::TBfprt: return n < 5 * cfg_.s;
            case Strategy::TPMed3L: return n < cfg_.s;
            default: return false;
        }
    }

    std::size_t choose_pivot(std::size_t lo, std::size_t hi) {
        PhaseScope scope(c_, Phase::Selection);
        if (use_fallback(hi - lo)) return pivot_med3_index(a_, lo, hi, c_);
        switch (cfg_.strategy) {
            case Strategy::Rand: return pivot_random(lo, hi, rng_);
            case Strategy::Med3: return pivot_med3_index(a_, lo, hi, c_);
            case Strategy::PMed9: return pivot_pmed9_index(a_, lo, hi, c_);
            case Strategy::TBfprt:
                return pivot_t_bfprt_index(a_, lo, hi, cfg_.s, scratch_, c_, cfg_.bfprt_pivot);
            case Strategy::TPMed3L: return pivot_t_pmed3l_index(a_, lo, hi, cfg_.s, c_);
        }
        throw std::logic_error("unknown strategy");
    }

    // Recurse into the smaller side, loop on the larger one.
    void sort(std::size_t lo, std::size_t hi, std::uint64_t depth) {
        while (hi - lo >= 2) {
            c_.note_depth(++depth);
            const std::size_t k = hoare_partition(a_, lo, hi, choose_pivot(lo, hi), c_);
            if (k - lo < hi - k - 1) {
                sort(lo, k, depth);
                lo = k + 1;
            } else {
                sort(k + 1, hi, depth);
                hi = k;
            }
        }
    }

    std::span<Key> a_;
    const SortConfig& cfg_;
    RandomStream rng_;
    Counters c_;
    std::vector<std::size_t> scratch_;
};

}  // namespace

std::string_view to_string(Strategy s) noexcept {
    for (const auto& [value, name] : kNames) {
        if (value == s) return name;
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
    for (const auto& [value, text] : kNames) {
        if (text == name) return value;
    }
    return std::nullopt;
}

void SortConfig::validate() const {
    if (s == 0) throw std::invalid_argument("SortConfig: s must be >= 1");
}

Counters quicksort(std::span<Key> a, const SortConfig& cfg) {
    cfg.validate();
    return Sorter(a, cfg).run();
}

}  // namespace qslab
