#ifndef STOCHASTIK_PRNG_INVERSIVE_HPP
#define STOCHASTIK_PRNG_INVERSIVE_HPP

#include <cstdint>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"

namespace stochastik {

struct IcgParams {
    std::uint64_t a = 9102;
    std::uint64_t b = 36884165;
    std::uint64_t m = 2147483647;  // prime: every nonzero state is invertible
};

/**
 * Inversive congruential generator x <- (a * x^{-1} + b) mod m.
 *
 * The state 0 uses the usual convention 0^{-1} = 0, so a prime modulus never
 * gets stuck. Any other state sharing a factor with m raises
 * NonInvertibleState.
 */
class Icg {
public:
    explicit Icg(std::uint64_t seed, IcgParams params = {}) : p_(params) {
        if (p_.m < 2) {
            throw error(errc::invalid_parameter, "ICG modulus must be >= 2");
        }
        if (gcd(p_.a, p_.m) != 1 && p_.a != 0) {
            throw error(errc::invalid_parameter, "ICG multiplier must be coprime to m");
        }
        x_ = seed % p_.m;
        b_ = p_.b % p_.m;
    }

    std::uint64_t next() {
        std::uint64_t inv = 0;
        if (x_ != 0) {
            if (gcd(x_, p_.m) != 1) {
                throw error(errc::non_invertible_state,
                            "state " + std::to_string(x_) + " shares a factor with m = " + std::to_string(p_.m));
            }
            inv = modinv(x_, p_.m);
        }
        x_ = static_cast<std::uint64_t>((u128{p_.a % p_.m} * inv + b_) % p_.m);
        return x_;
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return x_; }
    [[nodiscard]] Modulus modulus() const { return Modulus(p_.m); }

private:
    IcgParams p_;
    std::uint64_t x_ = 0;
    std::uint64_t b_ = 0;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_INVERSIVE_HPP
