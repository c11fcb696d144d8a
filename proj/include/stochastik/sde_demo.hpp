#ifndef STOCHASTIK_SDE_DEMO_HPP
#define STOCHASTIK_SDE_DEMO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "stochastik/distributions.hpp"
#include "stochastik/error.hpp"
#include "stochastik/prng/concepts.hpp"
#include "stochastik/processes.hpp"

namespace stochastik {

/// Periodic event source firing at t0 + k*interval, k >= 1.
struct SampleClock {
    double t0 = 0.0;
    double interval = 0.1;
};

/// Variance of the Wiener increment added at each clock event.
enum class IncrementVariance {
    step,  // N(0, interval): true Wiener scaling
    unit,  // N(0, 1) per event
};

struct OscillatorConfig {
    double x0 = 2.0;
    double y0 = 0.0;
    double t_end = 100.0;
    double euler_step = 1e-3;
    SampleClock clock{};
    double gain = 1.0;
    IncrementVariance variance = IncrementVariance::step;
};

struct OscState {
    double x;
    double y;
    double t;
};

inline constexpr double divergence_bound = 1e6;

/// Right-hand side of x' = y, y' = x(1 - x^2) - y + x*W.
inline void oscillator_field(double x, double y, double w, double& dx, double& dy) noexcept {
    dx = y;
    dy = x * (1.0 - x * x) - y + x * w;
}

/// One explicit Euler step of length dt under a frozen signal w.
inline OscState euler_step(const OscState& s, double w, double dt) noexcept {
    double dx = 0.0;
    double dy = 0.0;
    oscillator_field(s.x, s.y, w, dx, dy);
    return {s.x + dt * dx, s.y + dt * dy, s.t + dt};
}

namespace detail {

inline void validate(const OscillatorConfig& c) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(c.x0) || !finite(c.y0) || !finite(c.gain) || !finite(c.clock.t0)) {
        throw error(errc::invalid_parameter, "oscillator inputs must be finite");
    }
    if (!(c.clock.interval > 0.0) || !finite(c.clock.interval)) {
        throw error(errc::invalid_parameter, "sample interval must be > 0");
    }
    if (!(c.euler_step > 0.0) || c.euler_step > c.clock.interval) {
        throw error(errc::invalid_parameter, "Euler step must satisfy 0 < h_e <= sample interval");
    }
    if (!(c.t_end > c.clock.t0) || !finite(c.t_end)) {
        throw error(errc::invalid_parameter, "t_end must be after the clock start");
    }
}

} // namespace detail

/**
 * van der Pol-Duffing oscillator driven by a sampled Wiener signal.
 *
 * The run starts at clock.t0 with W = 0. At each clock event the signal
 * gains gain * dW (dW from `increment()`) and then stays constant until the
 * next event. Between events the field is integrated with explicit Euler
 * steps of euler_step, shortened where needed so no step crosses an event.
 *
 * Output columns: x, y, W (W already multiplied by gain); one row per Euler
 * step plus the initial row. At an event time the row shows the post-event W.
 * Throws Diverged if |x| or |y| exceeds 1e6.
 */
template <class IncrementSource>
Trajectory simulate_with(const OscillatorConfig& cfg, IncrementSource&& increment) {
    detail::validate(cfg);
    const double t0 = cfg.clock.t0;
    const double hs = cfg.clock.interval;
    const double he = cfg.euler_step;
    constexpr double slack = 1e-9;
    const auto events = static_cast<std::size_t>(std::floor((cfg.t_end - t0) / hs + slack));

    std::vector<double> times{t0};
    std::vector<double> xs{cfg.x0}, ys{cfg.y0}, ws{0.0};
    OscState s{cfg.x0, cfg.y0, t0};
    double w = 0.0;

    auto integrate = [&](double a, double b) {
        const auto n = static_cast<std::size_t>(std::ceil((b - a) / he - slack));
        double t_prev = a;
        for (std::size_t j = 1; j <= n; ++j) {
            const double t = j == n ? b : a + static_cast<double>(j) * he;
            s = euler_step(s, w, t - t_prev);
            s.t = t;
            if (!(std::fabs(s.x) <= divergence_bound) || !(std::fabs(s.y) <= divergence_bound)) {
                throw error(errc::diverged, "oscillator left |x|,|y| <= 1e6 at t = " + std::to_string(t));
            }
            times.push_back(t);
            xs.push_back(s.x);
            ys.push_back(s.y);
            ws.push_back(w);
            t_prev = t;
        }
    };

    double seg_start = t0;
    for (std::size_t k = 1; k <= events; ++k) {
        const double event = std::min(t0 + static_cast<double>(k) * hs, cfg.t_end);
        if (event > seg_start) {
            integrate(seg_start, event);
        }
        w += cfg.gain * increment();
        ws.back() = w;
        seg_start = event;
    }
    if (cfg.t_end - seg_start > slack * hs) {
        integrate(seg_start, cfg.t_end);
    }

    Trajectory traj(std::move(times), 3);
    for (std::size_t r = 0; r < traj.rows(); ++r) {
        traj.at(r, 0) = xs[r];
        traj.at(r, 1) = ys[r];
        traj.at(r, 2) = ws[r];
    }
    return traj;
}

template <WordGenerator G>
Trajectory simulate(const OscillatorConfig& cfg, G& gen) {
    const double scale = cfg.variance == IncrementVariance::step ? std::sqrt(cfg.clock.interval) : 1.0;
    NormalSampler normal;
    return simulate_with(cfg, [&] { return scale * normal(gen); });
}

inline const std::vector<std::string>& oscillator_columns() {
    static const std::vector<std::string> names{"x", "y", "W"};
    return names;
}

} // namespace stochastik

#endif // STOCHASTIK_SDE_DEMO_HPP
