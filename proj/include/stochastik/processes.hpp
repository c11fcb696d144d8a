#ifndef STOCHASTIK_PROCESSES_HPP
#define STOCHASTIK_PROCESSES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stochastik/distributions.hpp"
#include "stochastik/error.hpp"
#include "stochastik/prng/concepts.hpp"

namespace stochastik {

/// Uniform grid t_i = t0 + i*h, i = 0..n_steps.
class TimeGrid {
public:
    TimeGrid(double t0, double h, std::size_t n_steps) : t0_(t0), h_(h), n_(n_steps) {
        if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(t0)) {
            throw error(errc::invalid_parameter, "time grid needs a finite step h > 0");
        }
        if (n_steps == 0) {
            throw error(errc::invalid_parameter, "time grid needs at least one step");
        }
    }

    /// Grid covering [0, horizon] with step h; the step count is rounded to the nearest integer.
    static TimeGrid over(double horizon, double h) {
        if (!(horizon > 0.0) || !(h > 0.0) || !std::isfinite(horizon) || !std::isfinite(h)) {
            throw error(errc::invalid_parameter, "horizon and step must be positive");
        }
        const auto n = static_cast<std::size_t>(std::llround(horizon / h));
        return {0.0, h, n == 0 ? 1 : n};
    }

    [[nodiscard]] double t0() const noexcept { return t0_; }
    [[nodiscard]] double step() const noexcept { return h_; }
    [[nodiscard]] std::size_t steps() const noexcept { return n_; }
    [[nodiscard]] double at(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * h_; }

    [[nodiscard]] std::vector<double> points() const {
        std::vector<double> t(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) {
            t[i] = at(i);
        }
        return t;
    }

private:
    double t0_;
    double h_;
    std::size_t n_;
};

/// Sampled path: one time column plus `dims` value columns, stored row-major.
class Trajectory {
public:
    Trajectory(std::vector<double> times, std::size_t dims)
        : times_(std::move(times)), dims_(dims), values_(times_.size() * dims, 0.0) {
        if (dims == 0) {
            throw error(errc::invalid_parameter, "trajectory needs at least one dimension");
        }
    }

    [[nodiscard]] std::size_t rows() const noexcept { return times_.size(); }
    [[nodiscard]] std::size_t dims() const noexcept { return dims_; }
    [[nodiscard]] double time(std::size_t row) const { return times_.at(row); }
    [[nodiscard]] std::span<const double> times() const noexcept { return times_; }

    [[nodiscard]] double& at(std::size_t row, std::size_t dim) { return values_[index(row, dim)]; }
    [[nodiscard]] double at(std::size_t row, std::size_t dim) const { return values_[index(row, dim)]; }
    [[nodiscard]] std::span<const double> row(std::size_t r) const {
        return std::span<const double>(values_).subspan(index(r, 0), dims_);
    }

    /// Values of one dimension over time.
    [[nodiscard]] std::vector<double> column(std::size_t dim) const {
        std::vector<double> out(rows());
        for (std::size_t r = 0; r < rows(); ++r) {
            out[r] = at(r, dim);
        }
        return out;
    }

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    [[nodiscard]] std::size_t index(std::size_t row, std::size_t dim) const {
        if (row >= times_.size() || dim >= dims_) {
            throw error(errc::invalid_parameter, "trajectory index out of range");
        }
        return row * dims_ + dim;
    }

    std::vector<double> times_;
    std::size_t dims_;
    std::vector<double> values_;
};

/**
 * Cumulative sum of injected increments, starting from the zero vector.
 *
 * `increment(step, dim)` is called for step = 0..n_steps-1 and, within a
 * step, for dim = 0..dims-1.
 */
template <class IncrementSource>
Trajectory cumulative_trajectory(const TimeGrid& grid, std::size_t dims, IncrementSource&& increment) {
    Trajectory traj(grid.points(), dims);
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        for (std::size_t d = 0; d < dims; ++d) {
            traj.at(i + 1, d) = traj.at(i, d) + static_cast<double>(increment(i, d));
        }
    }
    return traj;
}

/// W_0 = 0 and independent N(0, h) increments per step and coordinate.
template <WordGenerator G>
Trajectory wiener_trajectory(G& gen, const TimeGrid& grid, std::size_t dims = 1,
                             NormalSampler sampler = NormalSampler{}) {
    const double scale = std::sqrt(grid.step());
    return cumulative_trajectory(grid, dims,
                                 [&](std::size_t, std::size_t) { return scale * sampler(gen); });
}

/// N_0 = 0 and independent Poisson(lambda*h) counts per step.
template <WordGenerator G>
Trajectory poisson_trajectory(G& gen, const TimeGrid& grid, double lambda) {
    const PoissonParams per_step(lambda * grid.step());
    return cumulative_trajectory(grid, 1, [&](std::size_t, std::size_t) {
        return static_cast<double>(poisson_sample(uniform_source(gen), per_step));
    });
}

/// First differences per dimension; rows() - 1 rows of `dims` values.
inline std::vector<std::vector<double>> increments_of(const Trajectory& traj) {
    if (traj.rows() < 2) {
        throw error(errc::too_short, "increments need at least two rows, got " + std::to_string(traj.rows()));
    }
    std::vector<std::vector<double>> out(traj.rows() - 1, std::vector<double>(traj.dims()));
    for (std::size_t r = 0; r + 1 < traj.rows(); ++r) {
        for (std::size_t d = 0; d < traj.dims(); ++d) {
            out[r][d] = traj.at(r + 1, d) - traj.at(r, d);
        }
    }
    return out;
}

} // namespace stochastik

#endif // STOCHASTIK_PROCESSES_HPP
