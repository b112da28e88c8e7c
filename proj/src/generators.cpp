#include "qslab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qslab {

std::string_view to_string(GeneratorKind k) noexcept {
    switch (k) {
        case GeneratorKind::RandomDistinct: return "random";
        case GeneratorKind::Ascending: return "ascending";
        case GeneratorKind::Descending: return "descending";
        case GeneratorKind::TBfprtAdversary: return "adversary";
    }
    return "?";
}

std::optional<GeneratorKind> parse_generator(std::string_view name) noexcept {
    for (auto k : {GeneratorKind::RandomDistinct, GeneratorKind::Ascending,
                   GeneratorKind::Descending, GeneratorKind::TBfprtAdversary}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::vector<Key> gen_random_distinct(std::size_t n, std::uint64_t seed) {
    std::vector<Key> out = gen_ascending(n);
    std::mt19937_64 rng(seed);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

std::vector<Key> gen_ascending(std::size_t n) {
    std::vector<Key> out(n);
    std::iota(out.begin(), out.end(), Key{0});
    return out;
}

std::vector<Key> gen_descending(std::size_t n) {
    std::vector<Key> out = gen_ascending(n);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Key> gen_tbfprt_adversary(std::size_t n, std::size_t s) {
    if (s < 2) throw std::invalid_argument("gen_tbfprt_adversary: s must be >= 2");
    if (n < 5 * s) throw std::invalid_argument("gen_tbfprt_adversary: n must be >= 5s");

    const std::size_t tail_start = n - n / s;
    auto marked = [&](std::size_t i) { return i % s == 0 || i >= tail_start; };

    std::size_t planted = 0;
    for (std::size_t i = 0; i < n; ++i) planted += marked(i) ? 1 : 0;

    std::vector<Key> out(n);
    Key small = 0;
    auto large = static_cast<Key>(n - planted);
    for (std::size_t i = 0; i < n; ++i) out[i] = marked(i) ? large++ : small++;
    return out;
}

std::vector<Key> generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::RandomDistinct: return gen_random_distinct(spec.n, spec.seed);
        case GeneratorKind::Ascending: return gen_ascending(spec.n);
        case GeneratorKind::Descending: return gen_descending(spec.n);
        case GeneratorKind::TBfprtAdversary: return gen_tbfprt_adversary(spec.n, spec.s);
    }
    throw std::invalid_argument("generate: unknown kind");
}

}  // namespace qslab
