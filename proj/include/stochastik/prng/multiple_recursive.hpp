#ifndef STOCHASTIK_PRNG_MULTIPLE_RECURSIVE_HPP
#define STOCHASTIK_PRNG_MULTIPLE_RECURSIVE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/seed.hpp"

namespace stochastik {

namespace detail {

// sum(coeff[i] * hist[i]) mod m with signed coefficients, exact in 128 bits.
template <std::size_t N>
std::uint64_t signed_dot_mod(const std::array<std::int64_t, N>& coeff, const std::array<std::uint64_t, N>& hist,
                             std::uint64_t m) noexcept {
    i128 acc = 0;
    for (std::size_t i = 0; i < N; ++i) {
        acc += static_cast<i128>(coeff[i]) * static_cast<i128>(hist[i]);
    }
    acc %= static_cast<i128>(m);
    if (acc < 0) {
        acc += m;
    }
    return static_cast<std::uint64_t>(acc);
}

template <std::size_t N>
void push_history(std::array<std::uint64_t, N>& hist, std::uint64_t v) noexcept {
    std::shift_left(hist.begin(), hist.end(), 1);
    hist.back() = v;
}

template <std::size_t N>
bool all_zero(const std::array<std::uint64_t, N>& hist) noexcept {
    return std::all_of(hist.begin(), hist.end(), [](std::uint64_t v) { return v == 0; });
}

} // namespace detail

/// Coefficients and moduli of the combined order-3 recurrence (GSL defaults).
struct CmrgParams {
    std::array<std::int64_t, 3> a{0, 63308, -183326};
    std::array<std::int64_t, 3> b{86098, 0, -539608};
    std::uint64_t m1 = 2147483647;
    std::uint64_t m2 = 2145483479;
};

/**
 * Combined multiple recursive generator.
 *
 *   x_n = (a1 x_{n-1} + a2 x_{n-2} + a3 x_{n-3}) mod m1
 *   y_n = (b1 y_{n-1} + b2 y_{n-2} + b3 y_{n-3}) mod m2
 *   z_n = (x_n - y_n) mod m1
 *
 * Histories are stored oldest first: {x_{n-3}, x_{n-2}, x_{n-1}}.
 */
class Cmrg {
public:
    using History = std::array<std::uint64_t, 3>;

    Cmrg(History x, History y, CmrgParams params = {}) : p_(params), x_(x), y_(y) {
        if (p_.m1 < 2 || p_.m2 < 2) {
            throw error(errc::invalid_parameter, "CMRG moduli must be >= 2");
        }
        for (auto v : x_) {
            if (v >= p_.m1) {
                throw error(errc::invalid_parameter, "CMRG x-history must lie in [0, m1)");
            }
        }
        for (auto v : y_) {
            if (v >= p_.m2) {
                throw error(errc::invalid_parameter, "CMRG y-history must lie in [0, m2)");
            }
        }
    }

    /// Histories from expand_seed(seed, 6); an all-zero history gets a trailing 1.
    explicit Cmrg(std::uint64_t seed, CmrgParams params = {}) : Cmrg(seeded(seed, params), params) {}

    std::uint64_t next() noexcept {
        const auto xn = detail::signed_dot_mod(p_.a, reversed(x_), p_.m1);
        const auto yn = detail::signed_dot_mod(p_.b, reversed(y_), p_.m2);
        detail::push_history(x_, xn);
        detail::push_history(y_, yn);
        i128 z = (static_cast<i128>(xn) - static_cast<i128>(yn)) % static_cast<i128>(p_.m1);
        if (z < 0) {
            z += p_.m1;
        }
        return static_cast<std::uint64_t>(z);
    }

    [[nodiscard]] Modulus modulus() const { return Modulus(p_.m1); }
    [[nodiscard]] const History& x_history() const noexcept { return x_; }
    [[nodiscard]] const History& y_history() const noexcept { return y_; }

private:
    Cmrg(std::pair<History, History> xy, CmrgParams params) : Cmrg(xy.first, xy.second, params) {}

    static std::pair<History, History> seeded(std::uint64_t seed, const CmrgParams& p) {
        const auto w = expand_seed(seed, 6);
        History x{w[0] % p.m1, w[1] % p.m1, w[2] % p.m1};
        History y{w[3] % p.m2, w[4] % p.m2, w[5] % p.m2};
        if (detail::all_zero(x)) {
            x[2] = 1;
        }
        if (detail::all_zero(y)) {
            y[2] = 1;
        }
        return {x, y};
    }

    // Coefficient i multiplies x_{n-1-i}; histories are stored oldest first.
    static History reversed(const History& h) noexcept { return {h[2], h[1], h[0]}; }

    CmrgParams p_;
    History x_;
    History y_;
};

struct Mrg5Params {
    std::int64_t a1 = 107374182;
    std::int64_t a5 = 104480;
    std::uint64_t m = 2147483647;
};

/// Fifth-order recurrence x_n = (a1 x_{n-1} + a5 x_{n-5}) mod m, history oldest first.
class Mrg5 {
public:
    using History = std::array<std::uint64_t, 5>;

    explicit Mrg5(History history, Mrg5Params params = {}) : p_(params), h_(history) {
        if (p_.m < 2) {
            throw error(errc::invalid_parameter, "MRG5 modulus must be >= 2");
        }
        for (auto v : h_) {
            if (v >= p_.m) {
                throw error(errc::invalid_parameter, "MRG5 history must lie in [0, m)");
            }
        }
    }

    explicit Mrg5(std::uint64_t seed, Mrg5Params params = {}) : Mrg5(seeded(seed, params), params) {}

    std::uint64_t next() noexcept {
        const std::array<std::int64_t, 2> coeff{p_.a1, p_.a5};
        const std::array<std::uint64_t, 2> terms{h_[4], h_[0]};
        const auto v = detail::signed_dot_mod(coeff, terms, p_.m);
        detail::push_history(h_, v);
        return v;
    }

    [[nodiscard]] Modulus modulus() const { return Modulus(p_.m); }
    [[nodiscard]] const History& history() const noexcept { return h_; }

private:
    static History seeded(std::uint64_t seed, const Mrg5Params& p) {
        const auto w = expand_seed(seed, 5);
        History h{};
        std::transform(w.begin(), w.end(), h.begin(), [&](std::uint64_t v) { return v % p.m; });
        if (detail::all_zero(h)) {
            h[4] = 1;
        }
        return h;
    }

    Mrg5Params p_;
    History h_;
};

} // namespace stochastik

#endif // STOCHASTIK_PRNG_MULTIPLE_RECURSIVE_HPP
