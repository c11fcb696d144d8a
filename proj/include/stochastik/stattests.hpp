#ifndef STOCHASTIK_STATTESTS_HPP
#define STOCHASTIK_STATTESTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stochastik/distributions.hpp"
#include "stochastik/error.hpp"
#include "stochastik/prng/concepts.hpp"
#include "stochastik/prng/registry.hpp"

namespace stochastik {

// ---------------------------------------------------------------------------
// Special functions

namespace detail {

// P(a, x) by its power series; converges fast for x < a + 1.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 100000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-17) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the modified Lentz continued fraction; for x >= a + 1.
inline double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace detail

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
inline double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw error(errc::domain_error, "gamma_q needs a > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return std::clamp(1.0 - detail::gamma_p_series(a, x), 0.0, 1.0);
    }
    return std::clamp(detail::gamma_q_continued_fraction(a, x), 0.0, 1.0);
}

/// Upper tail P(X > x) of a chi-square variable with `df` degrees of freedom.
inline double chi_square_sf(double x, double df) { return gamma_q(0.5 * df, 0.5 * x); }

/// Two-sided tail of a standard normal z-score.
inline double normal_two_sided_p(double z) { return std::erfc(std::fabs(z) / std::numbers::sqrt2); }

// ---------------------------------------------------------------------------
// Outcomes

enum class Verdict { pass, weak, fail };

constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::weak: return "WEAK";
    case Verdict::fail: return "FAIL";
    }
    return "?";
}

inline constexpr double fail_threshold = 1e-6;
inline constexpr double weak_threshold = 0.005;

/// Fail below 1e-6, Weak below 0.005, Pass otherwise.
constexpr Verdict verdict_for(double p) noexcept {
    if (!(p >= fail_threshold)) {
        return Verdict::fail;
    }
    return p < weak_threshold ? Verdict::weak : Verdict::pass;
}

struct TestOutcome {
    std::string name;
    double statistic = 0.0;
    double p_value = 1.0;
    Verdict verdict = Verdict::pass;

    friend bool operator==(const TestOutcome&, const TestOutcome&) = default;
};

namespace detail {

inline void require_samples(std::size_t have, std::size_t need, std::string_view test) {
    if (have < need) {
        throw error(errc::too_few_samples, std::string(test) + " needs at least " + std::to_string(need) +
                                               " samples, got " + std::to_string(have));
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Tests

/// Equal-width histogram on [0, 1] against the flat expectation; bins - 1 degrees of freedom.
inline TestOutcome chi_square_uniform(std::span<const double> samples, std::size_t bins) {
    if (bins < 2) {
        throw error(errc::invalid_parameter, "chi-square needs at least two bins");
    }
    detail::require_samples(samples.size(), 10 * bins, "chi-square");
    std::vector<std::size_t> counts(bins, 0);
    for (double u : samples) {
        auto b = static_cast<std::size_t>(u * static_cast<double>(bins));
        counts[std::min(b, bins - 1)]++;
    }
    const double expected = static_cast<double>(samples.size()) / static_cast<double>(bins);
    double stat = 0.0;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    const double p = chi_square_sf(stat, static_cast<double>(bins - 1));
    return {"chi-square-uniform-" + std::to_string(bins), stat, p, verdict_for(p)};
}

/**
 * Lag-k sample autocorrelation, scored against rho ~ N(0, 1/N).
 *
 * A constant sequence has no defined correlation and is reported as
 * rho = 1, p = 0.
 */
inline TestOutcome serial_correlation(std::span<const double> samples, std::size_t lag) {
    if (lag == 0) {
        throw error(errc::invalid_parameter, "serial correlation lag must be positive");
    }
    detail::require_samples(samples.size(), std::max<std::size_t>(1000, lag + 2), "serial correlation");
    const auto n = samples.size();
    double mean = 0.0;
    for (double x : samples) {
        mean += x;
    }
    mean /= static_cast<double>(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = samples[i] - mean;
        den += a * a;
        if (i + lag < n) {
            num += a * (samples[i + lag] - mean);
        }
    }
    const std::string name = "serial-correlation-lag" + std::to_string(lag);
    if (den == 0.0) {
        return {name, 1.0, 0.0, Verdict::fail};
    }
    const double rho = num / den;
    const double p = normal_two_sided_p(rho * std::sqrt(static_cast<double>(n)));
    return {name, rho, p, verdict_for(p)};
}

inline constexpr std::size_t max_failing_low_bit_period = 64;

/**
 * Shortest period of the least-significant output bit among the next
 * `max_check` outputs. Candidate periods go up to max_check / 2 so every
 * reported period is seen repeating at least once.
 *
 * statistic = period found (0 if none); p = 0 when the period is <= 64,
 * otherwise 1.
 */
template <WordGenerator G>
TestOutcome low_bit_period(G& gen, std::size_t max_check) {
    if (max_check < 4) {
        throw error(errc::invalid_parameter, "low_bit_period needs max_check >= 4");
    }
    std::vector<unsigned char> bits(max_check);
    for (auto& b : bits) {
        b = static_cast<unsigned char>(gen.next() & 1U);
    }
    std::size_t period = 0;
    for (std::size_t p = 1; p <= max_check / 2 && period == 0; ++p) {
        if (std::equal(bits.begin() + static_cast<std::ptrdiff_t>(p), bits.end(), bits.begin())) {
            period = p;
        }
    }
    const bool short_period = period != 0 && period <= max_failing_low_bit_period;
    const double pv = short_period ? 0.0 : 1.0;
    return {"low-bit-period", static_cast<double>(period), pv, verdict_for(pv)};
}

/**
 * z-scores of the sample mean and (population) variance against expected
 * values. The variance standard error uses the sample fourth central moment.
 *
 * statistic = max |z|; p = its two-sided normal tail. Fails outright when
 * max |z| exceeds `multiplier`, otherwise the verdict follows p.
 */
inline TestOutcome moments_test(std::span<const double> samples, double expected_mean, double expected_variance,
                                double multiplier, std::string name = "moments") {
    detail::require_samples(samples.size(), 1000, "moments test");
    if (!(expected_variance > 0.0) || !(multiplier > 0.0)) {
        throw error(errc::invalid_parameter, "moments test needs positive variance and multiplier");
    }
    const auto n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double x : samples) {
        mean += x;
    }
    mean /= n;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : samples) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= n;
    m4 /= n;

    auto score = [](double diff, double se) {
        if (se > 0.0) {
            return diff / se;
        }
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    const double z_mean = score(mean - expected_mean, std::sqrt(expected_variance / n));
    const double z_var = score(m2 - expected_variance, std::sqrt(std::max(m4 - m2 * m2, 0.0) / n));
    const double stat = std::max(std::fabs(z_mean), std::fabs(z_var));
    const double p = normal_two_sided_p(stat);
    const Verdict v = stat > multiplier ? Verdict::fail : verdict_for(p);
    return {std::move(name), stat, p, v};
}

// ---------------------------------------------------------------------------
// Battery

struct BatteryReport {
    std::string generator;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<TestOutcome> outcomes;

    [[nodiscard]] std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(
            std::count_if(outcomes.begin(), outcomes.end(), [v](const TestOutcome& o) { return o.verdict == v; }));
    }
    [[nodiscard]] std::size_t fails() const { return count(Verdict::fail); }
    [[nodiscard]] std::size_t weaks() const { return count(Verdict::weak); }
    [[nodiscard]] std::size_t passes() const { return count(Verdict::pass); }

    friend bool operator==(const BatteryReport&, const BatteryReport&) = default;
};

inline constexpr std::size_t battery_min_samples = 100000;
inline constexpr std::size_t battery_bins = 100;
inline constexpr std::size_t battery_low_bit_window = 4096;
inline constexpr double battery_moment_multiplier = 5.0;
inline constexpr std::size_t battery_test_count = 5;

/**
 * Runs every test on `samples` outputs of a fresh generator from `make()`.
 * The low-bit scan uses a second fresh generator so it sees the stream from
 * its start.
 */
template <class Factory>
BatteryReport run_battery(Factory&& make, std::size_t samples) {
    detail::require_samples(samples, battery_min_samples, "battery");
    auto gen = make();
    std::vector<double> u(samples);
    for (auto& x : u) {
        x = uniform01(gen);
    }
    BatteryReport report;
    report.samples = samples;
    report.outcomes.push_back(chi_square_uniform(u, battery_bins));
    report.outcomes.push_back(serial_correlation(u, 1));
    report.outcomes.push_back(serial_correlation(u, 2));
    report.outcomes.push_back(moments_test(u, 0.5, 1.0 / 12.0, battery_moment_multiplier, "uniform-moments"));
    auto fresh = make();
    report.outcomes.push_back(low_bit_period(fresh, battery_low_bit_window));
    return report;
}

inline BatteryReport run_battery(std::string_view generator, std::uint64_t seed, std::size_t samples) {
    auto report = run_battery([&] { return make_generator(generator, seed); }, samples);
    report.generator = std::string(generator);
    report.seed = seed;
    return report;
}

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace detail

/// Human-readable table followed by a fail/weak/pass summary line.
inline std::string format_report(const BatteryReport& r) {
    std::ostringstream os;
    os << "generator: " << r.generator << "  seed: " << r.seed << "  samples: " << r.samples << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %18s %18s  %s\n", "test", "statistic", "p-value", "verdict");
    os << line;
    for (const auto& o : r.outcomes) {
        std::snprintf(line, sizeof line, "%-26s %18s %18s  %s\n", o.name.c_str(),
                      detail::format_real(o.statistic).c_str(), detail::format_real(o.p_value).c_str(),
                      std::string(to_string(o.verdict)).c_str());
        os << line;
    }
    os << "summary: fail " << r.fails() << "  weak " << r.weaks() << "  pass " << r.passes() << '\n';
    return os.str();
}

/// CSV rows: test,statistic,p_value,verdict.
inline std::string format_report_csv(const BatteryReport& r) {
    std::ostringstream os;
    os << "test,statistic,p_value,verdict\n";
    for (const auto& o : r.outcomes) {
        os << o.name << ',' << detail::format_real(o.statistic) << ',' << detail::format_real(o.p_value) << ','
           << to_string(o.verdict) << '\n';
    }
    return os.str();
}

} // namespace stochastik

#endif // STOCHASTIK_STATTESTS_HPP
