#include "qslab/partition.hpp"

#include "qslab/detail/kernels.hpp"

namespace qslab {

std::size_t hoare_partition(std::span<Key> a, std::size_t lo, std::size_t hi,
                            std::size_t pivot_index, Counters& c) {
    return detail::partition_at(a, lo, hi, pivot_index, detail::Identity{}, c);
}

}  // namespace qslab
