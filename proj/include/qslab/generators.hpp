#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qslab/instrumented.hpp"

namespace qslab {

enum class GeneratorKind : std::uint8_t { RandomDistinct, Ascending, Descending, TBfprtAdversary };

std::string_view to_string(GeneratorKind k) noexcept;
/// Accepts the CLI names: random, ascending, descending, adversary.
std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept;

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::RandomDistinct;
    std::size_t n = 0;
    std::size_t s = 2;  // only read by TBfprtAdversary
    std::uint64_t seed = 0;
};

/// Uniform random permutation of 0..n-1 (seeded Fisher-Yates).
std::vector<Key> gen_random_distinct(std::size_t n, std::uint64_t seed);
std::vector<Key> gen_ascending(std::size_t n);
std::vector<Key> gen_descending(std::size_t n);

/// Bad input for thinned-out BFPRT: the largest keys go to every index that is a multiple of
/// s (exactly the positions the strided sample reads) and to the last floor(n/s) positions.
/// Planted and remaining positions are each filled in ascending index order.
/// Throws std::invalid_argument unless s >= 2 and n >= 5s.
std::vector<Key> gen_tbfprt_adversary(std::size_t n, std::size_t s);

std::vector<Key> generate(const GeneratorSpec& spec);

}  // namespace qslab
