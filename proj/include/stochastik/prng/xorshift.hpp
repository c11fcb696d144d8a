#ifndef STOCHASTIK_PRNG_XORSHIFT_HPP
#define STOCHASTIK_PRNG_XORSHIFT_HPP

#include <cstdint>
#include <vector>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/seed.hpp"

namespace stochastik {

/// xorshift* : shifts 12/25/27 on one word, output multiplied by a fixed odd constant.
class XorShiftStar {
public:
    static constexpr std::uint64_t multiplier = 2685821657736338717ULL;

    explicit XorShiftStar(std::uint64_t seed) : x_(seed) {
        if (seed == 0) {
            throw error(errc::zero_state, "xorshift* seed must be nonzero");
        }
    }

    std::uint64_t next() noexcept {
        x_ ^= x_ >> 12;
        x_ ^= x_ << 25;
        x_ ^= x_ >> 27;
        return x_ * multiplier;
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return x_; }
    [[nodiscard]] static Modulus modulus() noexcept { return Modulus::word(); }

private:
    std::uint64_t x_;
};

/// xorshift+ : two-word state, output is the sum of the new and the old second word.
class XorShiftPlus {
public:
    XorShiftPlus(std::uint64_t s1, std::uint64_t s2) : s1_(s1), s2_(s2) {
        if (s1 == 0 && s2 == 0) {
            throw error(errc::zero_state, "xorshift+ state must not be all zero");
        }
    }

    /// Both words from expand_seed(seed, 2).
    explicit XorShiftPlus(std::uint64_t seed) : XorShiftPlus(expand_seed(seed, 2)) {}

    std::uint64_t next() noexcept {
        auto x = s1_;
        const auto y = s2_;
        s1_ = y;
        x ^= x << 23;
        s2_ = x ^ y ^ (x >> 17) ^ (y >> 26);
        return s2_ + y;
    }

    [[nodiscard]] std::uint64_t first() const noexcept { return s1_; }
    [[nodiscard]] std::uint64_t second() const noexcept { return s2_; }
    [[nodiscard]] static Modulus modulus() noexcept { return Modulus::word(); }

private:
    explicit XorShiftPlus(const std::vector<std::uint64_t>& w) : XorShiftPlus(w[0], w[1]) {}

    std::uint64_t s1_;
    std::uint64_t s2_;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_XORSHIFT_HPP
