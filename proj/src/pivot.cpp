#include "qslab/pivot.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "qslab/detail/kernels.hpp"

namespace qslab {

namespace {

struct ArrayValues {
    std::span<const Key> a;
    Key operator()(std::size_t i) const { return a[i]; }
};

void check_range(std::span<const Key> a, std::size_t lo, std::size_t hi, const char* who) {
    if (hi <= lo || hi > a.size()) throw std::invalid_argument(std::string(who) + ": empty or invalid range");
}

}  // namespace

SampledView SampledView::thinned(std::span<const Key> base, std::size_t offset, std::size_t count,
                                 std::size_t stride) {
    if (stride == 0) throw std::invalid_argument("SampledView: stride must be >= 1");
    if (offset + count > base.size()) throw std::out_of_range("SampledView: range exceeds base");
    return SampledView{base, offset, stride, count / stride};
}

Key median_of_three(Key x, Key y, Key z, Counters& c) {
    const std::array<Key, 3> v{x, y, z};
    return v[detail::median3_index(ArrayValues{v}, 0, 1, 2, c)];
}

std::size_t pivot_random(std::size_t lo, std::size_t hi, RandomStream& rng) {
    if (hi <= lo) throw std::invalid_argument("pivot_random: empty range");
    std::uniform_int_distribution<std::size_t> pick(lo, hi - 1);
    return pick(rng);
}

std::size_t pivot_med3_index(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c) {
    check_range(a, lo, hi, "pivot_med3");
    if (hi - lo < 3) return lo;
    return detail::median3_index(ArrayValues{a}, lo, lo + (hi - lo - 1) / 2, hi - 1, c);
}

Key pivot_med3(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c) {
    return a[pivot_med3_index(a, lo, hi, c)];
}

std::size_t pivot_pmed9_index(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c) {
    check_range(a, lo, hi, "pivot_pmed9");
    const std::size_t n = hi - lo;
    if (n <= kNintherCutoff) return pivot_med3_index(a, lo, hi, c);
    auto probe = [&](std::size_t k) { return lo + k * (n - 1) / 8; };
    const ArrayValues v{a};
    const std::size_t m0 = detail::median3_index(v, probe(0), probe(1), probe(2), c);
    const std::size_t m1 = detail::median3_index(v, probe(3), probe(4), probe(5), c);
    const std::size_t m2 = detail::median3_index(v, probe(6), probe(7), probe(8), c);
    return detail::median3_index(v, m0, m1, m2, c);
}

Key pivot_pmed9(std::span<const Key> a, std::size_t lo, std::size_t hi, Counters& c) {
    return a[pivot_pmed9_index(a, lo, hi, c)];
}

Key select_bfprt(std::span<Key> b, std::size_t k, Counters& c) {
    return b[detail::select_index(b, k, detail::Identity{}, c)];
}

Key median_of_medians(std::span<Key> b, Counters& c) {
    return b[detail::median_of_medians_index(b, detail::Identity{}, c)];
}

std::size_t pivot_t_bfprt_index(std::span<const Key> a, std::size_t lo, std::size_t hi,
                                std::size_t s, std::vector<std::size_t>& scratch, Counters& c,
                                BfprtPivot mode) {
    check_range(a, lo, hi, "pivot_t_bfprt");
    if (s == 0) throw std::invalid_argument("pivot_t_bfprt: s must be >= 1");
    const auto sample = SampledView::thinned(a, lo, hi - lo, s);
    if (sample.size() <= 1) return lo + (hi - lo) / 2;

    scratch.resize(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) scratch[i] = sample.index(i);
    std::span<std::size_t> work(scratch);
    const detail::ByPosition key{a};
    const std::size_t at = mode == BfprtPivot::ExactMedian
                               ? detail::select_index(work, work.size() / 2, key, c)
                               : detail::median_of_medians_index(work, key, c);
    return work[at];
}

Key pivot_t_bfprt(std::span<const Key> a, std::size_t lo, std::size_t hi, std::size_t s,
                  std::vector<std::size_t>& scratch, Counters& c, BfprtPivot mode) {
    return a[pivot_t_bfprt_index(a, lo, hi, s, scratch, c, mode)];
}

std::size_t pivot_t_pmed3l_index(std::span<const Key> a, std::size_t lo, std::size_t hi,
                                 std::size_t s, Counters& c) {
    check_range(a, lo, hi, "pivot_t_pmed3l");
    if (s == 0) throw std::invalid_argument("pivot_t_pmed3l: s must be >= 1");
    const std::size_t n = hi - lo;
    if (n <= s || n < 3) return lo + n / 2;
    const std::size_t third = n / 3;
    const std::size_t i0 = pivot_t_pmed3l_index(a, lo, lo + third, s, c);
    const std::size_t i1 = pivot_t_pmed3l_index(a, lo + third, lo + 2 * third, s, c);
    const std::size_t i2 = pivot_t_pmed3l_index(a, lo + 2 * third, hi, s, c);
    return detail::median3_index(ArrayValues{a}, i0, i1, i2, c);
}

Key pivot_t_pmed3l(std::span<const Key> a, std::size_t lo, std::size_t hi, std::size_t s,
                   Counters& c) {
    return a[pivot_t_pmed3l_index(a, lo, hi, s, c)];
}

}  // namespace qslab
