#ifndef STOCHASTIK_TOOLS_CLI_HPP
#define STOCHASTIK_TOOLS_CLI_HPP

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stochastik/stochastik.hpp"

namespace stochastik::cli {

enum exit_code : int {
    ok = 0,
    io_failure = 1,
    config_error = 2,
    tests_failed = 3,
};

namespace detail {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

inline std::uint64_t resolve_seed(const std::string& text, std::ostream& err) {
    if (text == "os") {
        const auto seed = os_seed(1).front();
        err << "seed: " << seed << '\n';
        return seed;
    }
    std::uint64_t v = 0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
        throw error(errc::invalid_parameter, "seed must be an unsigned integer or 'os', got '" + text + "'");
    }
    return v;
}

inline AnyGenerator resolve_generator(const std::string& alg, const std::string& seed, std::ostream& err) {
    if (!is_generator_name(alg)) {
        throw error(errc::invalid_parameter, "unknown generator '" + alg + "'; valid names: " + generator_name_list());
    }
    return make_generator(alg, resolve_seed(seed, err));
}

/// Writes to `path` when given, otherwise to the default data stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) {
                throw error(errc::io_error, "cannot open '" + path + "' for writing");
            }
            stream_ = file_.get();
        }
    }

    std::ostream& get() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) {
            throw error(errc::io_error, "write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// "paths.csv", 3 -> "paths_3.csv"
inline std::string indexed_path(const std::string& path, std::size_t index) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + "_" + std::to_string(index);
    }
    return path.substr(0, dot) + "_" + std::to_string(index) + path.substr(dot);
}

struct GenOptions {
    std::string alg = "xorshift-star";
    std::string seed = "1";
    std::size_t count = 1000;
    std::string format = "dieharder-text";
    unsigned numbit = 0;
    std::string output;
};

inline int cmd_gen(const GenOptions& o, Streams io) {
    auto gen = resolve_generator(o.alg, o.seed, io.err);
    unsigned numbit = o.numbit;
    if (numbit == 0) {
        numbit = (!gen.modulus().is_word() && gen.modulus().value() <= (std::uint64_t{1} << 32)) ? 32 : 64;
    }
    Sink sink(o.output, io.out);
    if (o.format == "dieharder-text") {
        write_dieharder_text(gen, o.count, numbit, sink.get());
    } else if (o.format == "raw") {
        write_raw_binary(gen, o.count, sink.get());
    } else {
        write_hex(gen, o.count, sink.get());
    }
    sink.finish();
    return ok;
}

struct DistOptions {
    std::string kind;
    double mu = 0.0;
    double sigma = 1.0;
    double lambda = 1.0;
    std::size_t count = 10;
    std::string seed = "1";
    std::string alg = "xorshift-star";
    std::string method = "polar";
    std::string output;
};

inline int cmd_dist(const DistOptions& o, Streams io) {
    std::optional<NormalParams> normal;
    std::optional<PoissonParams> poisson;
    if (o.kind == "normal") {
        normal = NormalParams(o.mu, o.sigma);
    } else {
        poisson = PoissonParams(o.lambda);
    }
    auto gen = resolve_generator(o.alg, o.seed, io.err);
    Sink sink(o.output, io.out);
    std::string text;
    if (normal) {
        NormalSampler sampler(o.method == "standard" ? NormalMethod::standard : NormalMethod::polar);
        for (std::size_t i = 0; i < o.count; ++i) {
            text += format_double(sampler(gen, *normal));
            text += '\n';
        }
    } else {
        for (std::size_t i = 0; i < o.count; ++i) {
            text += std::to_string(poisson_sample(uniform_source(gen), *poisson));
            text += '\n';
        }
    }
    sink.get() << text;
    sink.finish();
    return ok;
}

struct ProcessOptions {
    std::string kind;
    double horizon = 1.0;
    double h = 0.01;
    std::size_t dims = 1;
    double lambda = 1.0;
    std::size_t trajectories = 1;
    std::string seed = "1";
    std::string alg = "xorshift-star";
    std::string output;
};

inline int cmd_process(const ProcessOptions& o, Streams io) {
    if (!(o.horizon > 0.0) || !(o.h > 0.0) || o.h > o.horizon) {
        throw error(errc::invalid_parameter, "need T > 0 and 0 < h <= T");
    }
    if (o.dims == 0 || o.trajectories == 0) {
        throw error(errc::invalid_parameter, "dims and trajectories must be >= 1");
    }
    if (o.trajectories > 1 && o.output.empty()) {
        throw error(errc::invalid_parameter, "--output is required when writing more than one trajectory");
    }
    const auto grid = TimeGrid::over(o.horizon, o.h);
    auto gen = resolve_generator(o.alg, o.seed, io.err);
    for (std::size_t i = 0; i < o.trajectories; ++i) {
        const Trajectory traj =
            o.kind == "wiener" ? wiener_trajectory(gen, grid, o.dims) : poisson_trajectory(gen, grid, o.lambda);
        Sink sink(o.trajectories > 1 ? indexed_path(o.output, i) : o.output, io.out);
        std::vector<std::string> names;
        if (o.kind == "poisson") {
            names = {"n1"};
        }
        write_trajectory_csv(traj, sink.get(), names);
        sink.finish();
    }
    return ok;
}

struct TestOptions {
    std::string alg = "xorshift-star";
    std::string seed = "1";
    std::size_t samples = 1000000;
    bool csv = false;
};

inline int cmd_test(const TestOptions& o, Streams io) {
    if (o.samples < battery_min_samples) {
        throw error(errc::invalid_parameter, "--samples must be >= " + std::to_string(battery_min_samples));
    }
    if (!is_generator_name(o.alg)) {
        throw error(errc::invalid_parameter, "unknown generator '" + o.alg + "'; valid names: " + generator_name_list());
    }
    const auto seed = resolve_seed(o.seed, io.err);
    const auto report = run_battery(o.alg, seed, o.samples);
    io.out << (o.csv ? format_report_csv(report) : format_report(report));
    io.out.flush();
    return report.fails() == 0 ? ok : tests_failed;
}

struct SdeOptions {
    OscillatorConfig config;
    std::string variance = "step";
    std::string seed = "1";
    std::string alg = "xorshift-star";
    std::string output;
};

inline int cmd_sde(SdeOptions o, Streams io) {
    o.config.variance = o.variance == "unit" ? IncrementVariance::unit : IncrementVariance::step;
    auto gen = resolve_generator(o.alg, o.seed, io.err);
    const auto traj = simulate(o.config, gen);
    Sink sink(o.output, io.out);
    write_trajectory_csv(traj, sink.get(), oscillator_columns());
    sink.finish();
    return ok;
}

inline int exit_for(const error& e) {
    switch (e.code()) {
    case errc::io_error:
    case errc::entropy_unavailable:
    case errc::diverged:
        return io_failure;
    default:
        return config_error;
    }
}

} // namespace detail

/**
 * Entry point shared by the executable and the tests. Data goes to `out`,
 * diagnostics to `err`.
 *
 * Exit codes: 0 success, 1 I/O or runtime failure (including divergence),
 * 2 configuration error, 3 battery reported at least one Fail.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pseudo-random generators, samplers, stochastic processes and quality tests", "stochastik"};
    app.require_subcommand(1);

    const std::string alg_help = "generator: " + generator_name_list();

    detail::GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit a generator stream (DieHarder text, raw binary or hex)");
    gen_cmd->add_option("--alg", gen.alg, alg_help);
    gen_cmd->add_option("--seed", gen.seed, "unsigned integer or 'os'");
    gen_cmd->add_option("--count", gen.count, "number of words")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"dieharder-text", "raw", "hex"}));
    gen_cmd->add_option("--numbit", gen.numbit, "32 or 64 (default: from the generator modulus)")
        ->check(CLI::IsMember({32u, 64u}));
    gen_cmd->add_option("--output,-o", gen.output, "output file (default stdout)");

    detail::DistOptions dist;
    auto* dist_cmd = app.add_subcommand("dist", "sample normal or Poisson variates");
    dist_cmd->add_option("kind", dist.kind)->required()->check(CLI::IsMember({"normal", "poisson"}));
    dist_cmd->add_option("--mu", dist.mu);
    dist_cmd->add_option("--sigma", dist.sigma);
    dist_cmd->add_option("--lambda", dist.lambda);
    dist_cmd->add_option("--count", dist.count);
    dist_cmd->add_option("--seed", dist.seed, "unsigned integer or 'os'");
    dist_cmd->add_option("--alg", dist.alg, alg_help);
    dist_cmd->add_option("--method", dist.method, "Box-Muller form")->check(CLI::IsMember({"polar", "standard"}));
    dist_cmd->add_option("--output,-o", dist.output);

    detail::ProcessOptions proc;
    auto* proc_cmd = app.add_subcommand("process", "simulate Wiener or Poisson trajectories as CSV");
    proc_cmd->set_help_flag("--help", "print this help message and exit");  // -h is taken by the step option
    proc_cmd->add_option("kind", proc.kind)->required()->check(CLI::IsMember({"wiener", "poisson"}));
    proc_cmd->add_option("--T", proc.horizon, "time horizon");
    proc_cmd->add_option("--h", proc.h, "time step");
    proc_cmd->add_option("--dims", proc.dims, "Wiener dimensions");
    proc_cmd->add_option("--lambda", proc.lambda, "Poisson intensity");
    proc_cmd->add_option("--trajectories", proc.trajectories);
    proc_cmd->add_option("--seed", proc.seed, "unsigned integer or 'os'");
    proc_cmd->add_option("--alg", proc.alg, alg_help);
    proc_cmd->add_option("--output,-o", proc.output, "CSV path; indexed as name_<i>.csv when trajectories > 1");

    detail::TestOptions test;
    auto* test_cmd = app.add_subcommand("test", "run the statistical battery; exit 3 on any Fail");
    test_cmd->add_option("--alg", test.alg, alg_help);
    test_cmd->add_option("--seed", test.seed, "unsigned integer or 'os'");
    test_cmd->add_option("--samples", test.samples);
    test_cmd->add_flag("--csv", test.csv, "CSV rows instead of the table");

    detail::SdeOptions sde;
    auto* sde_cmd = app.add_subcommand("sde", "van der Pol-Duffing oscillator with a sampled Wiener input");
    sde_cmd->add_option("--x0", sde.config.x0);
    sde_cmd->add_option("--y0", sde.config.y0);
    sde_cmd->add_option("--t-end", sde.config.t_end);
    sde_cmd->add_option("--step", sde.config.euler_step, "Euler step");
    sde_cmd->add_option("--t0", sde.config.clock.t0, "clock start");
    sde_cmd->add_option("--sample-interval", sde.config.clock.interval, "seconds between noise events");
    sde_cmd->add_option("--gain", sde.config.gain);
    sde_cmd->add_option("--increment-variance", sde.variance)->check(CLI::IsMember({"step", "unit"}));
    sde_cmd->add_option("--seed", sde.seed, "unsigned integer or 'os'");
    sde_cmd->add_option("--alg", sde.alg, alg_help);
    sde_cmd->add_option("--output,-o", sde.output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == static_cast<int>(CLI::ExitCodes::Success) ? ok : config_error;
    }

    const detail::Streams io{out, err};
    try {
        if (*gen_cmd) return detail::cmd_gen(gen, io);
        if (*dist_cmd) return detail::cmd_dist(dist, io);
        if (*proc_cmd) return detail::cmd_process(proc, io);
        if (*test_cmd) return detail::cmd_test(test, io);
        return detail::cmd_sde(sde, io);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return detail::exit_for(e);
    }
}

} // namespace stochastik::cli

#endif // STOCHASTIK_TOOLS_CLI_HPP
