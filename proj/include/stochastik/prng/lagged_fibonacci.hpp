#ifndef STOCHASTIK_PRNG_LAGGED_FIBONACCI_HPP
#define STOCHASTIK_PRNG_LAGGED_FIBONACCI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/seed.hpp"

namespace stochastik {

struct LfgLags {
    std::size_t a = 55;
    std::size_t b = 24;
};

/**
 * Additive lagged Fibonacci generator x_n = (x_{n-a} + x_{n-b}) mod 2^e.
 *
 * The ring buffer holds the last max(a, b) values; the initial buffer is
 * given oldest first, so for lags (2, 1) and buffer [1, 2] the stream is
 * 3, 5, 8, ...
 */
class Lfg {
public:
    Lfg(std::span<const std::uint64_t> initial, LfgLags lags = {}, unsigned width_bits = 64)
        : lags_(lags), modulus_(Modulus::bits(width_bits)) {
        if (lags.a == 0 || lags.b == 0 || lags.a == lags.b) {
            throw error(errc::invalid_parameter, "LFG lags must be positive and distinct");
        }
        const auto len = std::max(lags.a, lags.b);
        if (initial.size() != len) {
            throw error(errc::invalid_parameter,
                        "LFG needs exactly " + std::to_string(len) + " initial words, got " + std::to_string(initial.size()));
        }
        ring_.assign(initial.begin(), initial.end());
        for (auto& w : ring_) {
            w = modulus_.reduce(w);
        }
    }

    /// Buffer filled from expand_seed(seed, max(a, b)).
    explicit Lfg(std::uint64_t seed, LfgLags lags = {}, unsigned width_bits = 64)
        : Lfg(expand_seed(seed, std::max(lags.a, lags.b)), lags, width_bits) {}

    std::uint64_t next() noexcept {
        const auto len = ring_.size();
        // pos_ indexes the oldest element, x_{n-len}.
        const auto xa = ring_[(pos_ + len - lags_.a) % len];
        const auto xb = ring_[(pos_ + len - lags_.b) % len];
        const auto v = modulus_.reduce(u128{xa} + xb);
        ring_[pos_] = v;
        pos_ = (pos_ + 1) % len;
        return v;
    }

    [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
    [[nodiscard]] LfgLags lags() const noexcept { return lags_; }

private:
    LfgLags lags_;
    Modulus modulus_;
    std::vector<std::uint64_t> ring_;
    std::size_t pos_ = 0;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_LAGGED_FIBONACCI_HPP
