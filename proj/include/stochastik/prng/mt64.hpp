#ifndef STOCHASTIK_PRNG_MT64_HPP
#define STOCHASTIK_PRNG_MT64_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "stochastik/modmath.hpp"

namespace stochastik {

/// 64-bit Mersenne twister (MT19937-64), standard initialization and tempering.
class Mt64 {
public:
    static constexpr std::size_t state_size = 312;
    static constexpr std::size_t shift_size = 156;
    static constexpr std::uint64_t matrix_a = 0xB5026F5AA96619E9ULL;
    static constexpr std::uint64_t upper_mask = 0xFFFFFFFF80000000ULL;
    static constexpr std::uint64_t lower_mask = 0x7FFFFFFFULL;
    static constexpr std::uint64_t default_seed = 5489;

    explicit Mt64(std::uint64_t seed = default_seed) noexcept {
        mt_[0] = seed;
        for (std::size_t i = 1; i < state_size; ++i) {
            mt_[i] = 6364136223846793005ULL * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + i;
        }
        index_ = state_size;
    }

    std::uint64_t next() noexcept {
        if (index_ >= state_size) {
            twist();
        }
        auto x = mt_[index_++];
        x ^= (x >> 29) & 0x5555555555555555ULL;
        x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
        x ^= (x << 37) & 0xFFF7EEE000000000ULL;
        x ^= x >> 43;
        return x;
    }

    [[nodiscard]] static Modulus modulus() noexcept { return Modulus::word(); }

private:
    void twist() noexcept {
        for (std::size_t i = 0; i < state_size; ++i) {
            const auto x = (mt_[i] & upper_mask) | (mt_[(i + 1) % state_size] & lower_mask);
            const auto xa = (x >> 1) ^ ((x & 1U) != 0 ? matrix_a : 0);
            mt_[i] = mt_[(i + shift_size) % state_size] ^ xa;
        }
        index_ = 0;
    }

    std::array<std::uint64_t, state_size> mt_{};
    std::size_t index_ = state_size;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_MT64_HPP
