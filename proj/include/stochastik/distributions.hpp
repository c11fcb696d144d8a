#ifndef STOCHASTIK_DISTRIBUTIONS_HPP
#define STOCHASTIK_DISTRIBUTIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/concepts.hpp"

namespace stochastik {

/// A real number in [0, 1].
class UnitReal {
public:
    explicit UnitReal(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw error(errc::domain_error, "unit real out of [0, 1]: " + std::to_string(v));
        }
    }
    [[nodiscard]] double value() const noexcept { return v_; }
    operator double() const noexcept { return v_; }

private:
    double v_;
};

/**
 * word / m in [0, 1).
 *
 * For m = 2^64 the top 53 bits are used so the result is exactly
 * representable and never rounds up to 1.
 */
inline UnitReal scale_by_modulus(std::uint64_t word, Modulus m) {
    if (!m.contains(word)) {
        throw error(errc::domain_error, "word " + std::to_string(word) + " not below modulus " + m.to_string());
    }
    if (m.is_word()) {
        return UnitReal(static_cast<double>(word >> 11) * 0x1.0p-53);
    }
    const double v = static_cast<double>(word) / static_cast<double>(m.value());
    return UnitReal(v < 1.0 ? v : std::nextafter(1.0, 0.0));
}

/// Divide every element by the sequence maximum; the maximum maps to exactly 1.
inline std::vector<UnitReal> normalize_by_max(std::span<const std::uint64_t> words) {
    if (words.empty()) {
        throw error(errc::empty_sequence, "normalize_by_max needs at least one value");
    }
    const auto max = *std::max_element(words.begin(), words.end());
    if (max == 0) {
        throw error(errc::all_zero, "normalize_by_max: every value is zero");
    }
    std::vector<UnitReal> out;
    out.reserve(words.size());
    const auto denom = static_cast<long double>(max);
    for (auto w : words) {
        out.emplace_back(static_cast<double>(static_cast<long double>(w) / denom));
    }
    return out;
}

template <WordGenerator G>
double uniform01(G& gen) {
    return scale_by_modulus(gen.next(), gen.modulus()).value();
}

/// 2u - 1 for u = word / m; feeds the polar form.
template <WordGenerator G>
double uniform_pm1(G& gen) {
    return 2.0 * uniform01(gen) - 1.0;
}

struct NormalPair {
    double z1;
    double z2;
};

/// Box-Muller, trigonometric form. Both inputs must lie strictly inside (0, 1).
inline NormalPair box_muller_standard(double x, double y) {
    if (!(x > 0.0 && x < 1.0) || !(y > 0.0 && y < 1.0)) {
        throw error(errc::domain_error, "box_muller_standard needs x, y in (0, 1)");
    }
    const double r = std::sqrt(-2.0 * std::log(x));
    const double theta = 2.0 * std::numbers::pi * y;
    return {std::cos(theta) * r, std::sin(theta) * r};
}

struct PolarResult {
    double z1;
    double z2;
    std::size_t rejected;  // pairs discarded before acceptance
};

/**
 * Box-Muller, polar form.
 *
 * `source()` yields std::optional<std::pair<double, double>> on [-1, 1]^2.
 * Pairs with s = x^2 + y^2 outside (0, 1] are rejected; an empty optional
 * before acceptance raises SourceExhausted.
 */
template <class PairSource>
PolarResult box_muller_polar(PairSource&& source) {
    std::size_t rejected = 0;
    for (;;) {
        std::optional<std::pair<double, double>> p = source();
        if (!p) {
            throw error(errc::source_exhausted, "pair source ended after " + std::to_string(rejected) + " rejections");
        }
        const auto [x, y] = *p;
        const double s = x * x + y * y;
        if (s > 0.0 && s <= 1.0) {
            const double f = std::sqrt(-2.0 * std::log(s) / s);
            return {x * f, y * f, rejected};
        }
        ++rejected;
    }
}

template <WordGenerator G>
auto pair_source(G& gen) {
    return [&gen]() -> std::optional<std::pair<double, double>> {
        const double x = uniform_pm1(gen);
        const double y = uniform_pm1(gen);
        return std::pair{x, y};
    };
}

template <WordGenerator G>
auto uniform_source(G& gen) {
    return [&gen]() -> std::optional<double> { return uniform01(gen); };
}

/// Replays fixed uniforms, then reports exhaustion.
inline auto sequence_source(std::span<const double> values) {
    return [values, i = std::size_t{0}]() mutable -> std::optional<double> {
        if (i >= values.size()) {
            return std::nullopt;
        }
        return values[i++];
    };
}

struct NormalParams {
    double mu = 0.0;
    double sigma = 1.0;

    NormalParams() = default;
    NormalParams(double mean, double stddev) : mu(mean), sigma(stddev) {
        if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(mean)) {
            throw error(errc::invalid_parameter, "normal distribution needs finite mu and sigma > 0");
        }
    }
};

inline double normal_general(double z, const NormalParams& p) noexcept { return p.sigma * z + p.mu; }

enum class NormalMethod { polar, standard };

/**
 * Stream of standard normals from a word generator.
 *
 * Each transform yields two variates; the second is held back and returned
 * by the next call. The standard form resamples a zero first uniform.
 */
class NormalSampler {
public:
    explicit NormalSampler(NormalMethod method = NormalMethod::polar) : method_(method) {}

    template <WordGenerator G>
    double operator()(G& gen) {
        if (spare_) {
            const double z = *spare_;
            spare_.reset();
            return z;
        }
        NormalPair pair{};
        if (method_ == NormalMethod::polar) {
            const auto r = box_muller_polar(pair_source(gen));
            pair = {r.z1, r.z2};
        } else {
            double x = 0.0;
            do {
                x = uniform01(gen);
            } while (x <= 0.0);
            double y = 0.0;
            do {
                y = uniform01(gen);
            } while (y <= 0.0);
            pair = box_muller_standard(x, y);
        }
        spare_ = pair.z2;
        return pair.z1;
    }

    template <WordGenerator G>
    double operator()(G& gen, const NormalParams& p) {
        return normal_general((*this)(gen), p);
    }

    void reset() noexcept { spare_.reset(); }

private:
    NormalMethod method_;
    std::optional<double> spare_;
};

struct PoissonParams {
    double lambda = 1.0;

    /// Largest intensity before exp(-lambda) underflows.
    static constexpr double max_lambda = 700.0;

    PoissonParams() = default;
    explicit PoissonParams(double l) : lambda(l) {
        if (!(l >= 0.0) || l > max_lambda) {
            throw error(errc::invalid_parameter, "Poisson lambda must be in [0, 700]");
        }
    }
};

/**
 * Knuth's multiplicative Poisson sampler.
 *
 * Multiplies uniforms into p until p <= exp(-lambda) and returns the number
 * of multiplications minus one; consumes exactly (result + 1) uniforms.
 */
template <class UniformSource>
std::uint64_t poisson_sample(UniformSource&& source, const PoissonParams& params) {
    const double threshold = std::exp(-params.lambda);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
        const std::optional<double> u = source();
        if (!u) {
            throw error(errc::source_exhausted, "uniform source ended after " + std::to_string(k) + " draws");
        }
        ++k;
        p *= *u;
    } while (p > threshold);
    return k - 1;
}

template <class UniformSource>
std::uint64_t poisson_sample(UniformSource&& source, double lambda) {
    return poisson_sample(std::forward<UniformSource>(source), PoissonParams(lambda));
}

} // namespace stochastik

#endif // STOCHASTIK_DISTRIBUTIONS_HPP
