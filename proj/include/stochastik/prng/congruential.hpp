#ifndef STOCHASTIK_PRNG_CONGRUENTIAL_HPP
#define STOCHASTIK_PRNG_CONGRUENTIAL_HPP

#include <cstdint>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/seed.hpp"

namespace stochastik {

struct LcgParams {
    std::uint64_t multiplier = knuth_multiplier;
    std::uint64_t increment = knuth_increment;
    Modulus modulus = Modulus::word();
};

/// x <- (a*x + c) mod m. Returns the new state.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed, LcgParams params = {}) : p_(params), x_(seed) {
        const auto& m = p_.modulus;
        if (!m.is_word()) {
            if (m.value() <= 1) {
                throw error(errc::invalid_parameter, "LCG modulus must be > 1");
            }
            if (p_.multiplier >= m.value() || p_.increment >= m.value()) {
                throw error(errc::invalid_parameter, "LCG multiplier and increment must be < m");
            }
            x_ = seed % m.value();
        }
    }

    std::uint64_t next() noexcept {
        x_ = p_.modulus.reduce(u128{p_.multiplier} * x_ + p_.increment);
        return x_;
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return x_; }
    [[nodiscard]] const LcgParams& params() const noexcept { return p_; }
    [[nodiscard]] Modulus modulus() const noexcept { return p_.modulus; }

private:
    LcgParams p_;
    std::uint64_t x_;
};

/**
 * Quadratic and cubic congruential generators.
 *
 * degree 2: x <- (a x^2 + b x + d) mod m   (c is ignored)
 * degree 3: x <- (a x^3 + b x^2 + c x + d) mod m
 *
 * The defaults give a single full cycle for m = 2^e (a even, b = a + 1 mod 4,
 * d odd for the quadratic case).
 */
struct PolyCongruentialParams {
    std::uint64_t a = 6364136223846793004ULL;
    std::uint64_t b = 6364136223846793005ULL;
    std::uint64_t c = 0;
    std::uint64_t d = knuth_increment;
    Modulus modulus = Modulus::word();
    int degree = 2;

    static PolyCongruentialParams quadratic() { return {}; }
    static PolyCongruentialParams cubic() {
        return {6364136223846793004ULL, 6364136223846793004ULL, 6364136223846793005ULL, knuth_increment,
                Modulus::word(), 3};
    }
};

class PolyCongruential {
public:
    explicit PolyCongruential(std::uint64_t seed, PolyCongruentialParams params = {}) : p_(params), x_(seed) {
        if (p_.degree != 2 && p_.degree != 3) {
            throw error(errc::invalid_parameter, "polynomial congruential degree must be 2 or 3");
        }
        if (!p_.modulus.is_word()) {
            if (p_.modulus.value() <= 1) {
                throw error(errc::invalid_parameter, "polynomial congruential modulus must be > 1");
            }
            x_ = seed % p_.modulus.value();
        }
    }

    std::uint64_t next() noexcept {
        const auto& m = p_.modulus;
        // Horner form; each partial product is reduced before the next multiply.
        std::uint64_t acc = m.reduce(p_.a);
        if (p_.degree == 3) {
            acc = m.reduce(u128{acc} * x_ + m.reduce(p_.b));
            acc = m.reduce(u128{acc} * x_ + m.reduce(p_.c));
        } else {
            acc = m.reduce(u128{acc} * x_ + m.reduce(p_.b));
        }
        x_ = m.reduce(u128{acc} * x_ + m.reduce(p_.d));
        return x_;
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return x_; }
    [[nodiscard]] Modulus modulus() const noexcept { return p_.modulus; }

private:
    PolyCongruentialParams p_;
    std::uint64_t x_;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_CONGRUENTIAL_HPP
