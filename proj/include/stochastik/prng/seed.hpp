#ifndef STOCHASTIK_PRNG_SEED_HPP
#define STOCHASTIK_PRNG_SEED_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stochastik {

inline constexpr std::uint64_t knuth_multiplier = 6364136223846793005ULL;
inline constexpr std::uint64_t knuth_increment = 1442695040888963407ULL;

inline constexpr std::size_t seed_warmup = 16;

/**
 * Derive `count` words from one seed.
 *
 * Iterates the Knuth-constant LCG (m = 2^64) from `seed`, throws away the
 * first 16 outputs, and returns the next `count`. A zero word is replaced by
 * the increment so multi-word states are never all zero. The result for k
 * words is a prefix of the result for k + 1.
 */
inline std::vector<std::uint64_t> expand_seed(std::uint64_t seed, std::size_t count) {
    std::uint64_t x = seed;
    for (std::size_t i = 0; i < seed_warmup; ++i) {
        x = knuth_multiplier * x + knuth_increment;
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        x = knuth_multiplier * x + knuth_increment;
        out.push_back(x != 0 ? x : knuth_increment);
    }
    return out;
}

} // namespace stochastik

#endif // STOCHASTIK_PRNG_SEED_HPP
