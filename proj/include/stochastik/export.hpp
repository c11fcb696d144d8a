#ifndef STOCHASTIK_EXPORT_HPP
#define STOCHASTIK_EXPORT_HPP

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stochastik/error.hpp"
#include "stochastik/prng/concepts.hpp"
#include "stochastik/processes.hpp"

namespace stochastik {

/// Preamble of the DieHarder `file_input` text format.
struct StreamHeader {
    char type = 'd';
    std::uint64_t count = 0;
    unsigned numbit = 64;

    friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

namespace detail {

inline std::size_t put(std::ostream& sink, std::string_view s) {
    sink.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!sink) {
        throw error(errc::io_error, "write to output sink failed");
    }
    return s.size();
}

inline std::string_view to_decimal(std::uint64_t v, std::array<char, 24>& buf) {
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), static_cast<std::size_t>(r.ptr - buf.data())};
}

inline std::string_view to_shortest17(double v, std::array<char, 40>& buf) {
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return {buf.data(), static_cast<std::size_t>(r.ptr - buf.data())};
}

inline void check_count(std::size_t count) {
    if (count == 0) {
        throw error(errc::invalid_parameter, "count must be >= 1");
    }
}

} // namespace detail

inline std::size_t write_dieharder_header(const StreamHeader& h, std::ostream& sink) {
    std::string s = "type: ";
    s += h.type;
    s += "\ncount: " + std::to_string(h.count) + "\nnumbit: " + std::to_string(h.numbit) + "\n";
    return detail::put(sink, s);
}

/**
 * DieHarder text stream (`dieharder -g 202 -f file`):
 *
 *   type: d
 *   count: <count>
 *   numbit: <numbit>
 *   <one unsigned decimal per line>
 *
 * With numbit = 32 each word is truncated to its low 32 bits. LF endings,
 * no trailing blank line. Returns the number of bytes written.
 */
template <WordGenerator G>
std::size_t write_dieharder_text(G& gen, std::size_t count, unsigned numbit, std::ostream& sink) {
    detail::check_count(count);
    if (numbit != 32 && numbit != 64) {
        throw error(errc::invalid_parameter, "numbit must be 32 or 64");
    }
    std::size_t bytes = write_dieharder_header({'d', count, numbit}, sink);
    const std::uint64_t mask = numbit == 64 ? ~std::uint64_t{0} : 0xFFFFFFFFULL;
    std::array<char, 24> buf{};
    std::string chunk;
    for (std::size_t i = 0; i < count; ++i) {
        chunk += detail::to_decimal(gen.next() & mask, buf);
        chunk += '\n';
        if (chunk.size() > 1 << 16) {
            bytes += detail::put(sink, chunk);
            chunk.clear();
        }
    }
    bytes += detail::put(sink, chunk);
    return bytes;
}

struct DieharderText {
    StreamHeader header;
    std::vector<std::uint64_t> values;
};

/// Parses the text format back; rejects malformed headers and count mismatches.
inline DieharderText read_dieharder_text(std::istream& in) {
    DieharderText out;
    std::string line;
    auto expect = [&](std::string_view key) {
        if (!std::getline(in, line) || line.rfind(key, 0) != 0) {
            throw error(errc::invalid_parameter, "expected header line '" + std::string(key) + "'");
        }
        return line.substr(key.size());
    };
    const auto type = expect("type: ");
    if (type.size() != 1) {
        throw error(errc::invalid_parameter, "type must be a single character");
    }
    out.header.type = type[0];
    out.header.count = std::stoull(expect("count: "));
    out.header.numbit = static_cast<unsigned>(std::stoul(expect("numbit: ")));
    while (std::getline(in, line)) {
        std::uint64_t v = 0;
        const auto r = std::from_chars(line.data(), line.data() + line.size(), v);
        if (r.ec != std::errc{} || r.ptr != line.data() + line.size()) {
            throw error(errc::invalid_parameter, "bad value line '" + line + "'");
        }
        out.values.push_back(v);
    }
    if (out.values.size() != out.header.count) {
        throw error(errc::invalid_parameter, "header count " + std::to_string(out.header.count) + " but " +
                                                 std::to_string(out.values.size()) + " values");
    }
    return out;
}

/// `count` 64-bit words, little-endian, no header (`dieharder -g 200`).
template <WordGenerator G>
std::size_t write_raw_binary(G& gen, std::size_t count, std::ostream& sink) {
    detail::check_count(count);
    std::string chunk;
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t w = gen.next();
        for (int b = 0; b < 8; ++b) {
            chunk += static_cast<char>(w & 0xFFU);
            w >>= 8;
        }
        if (chunk.size() > 1 << 16) {
            bytes += detail::put(sink, chunk);
            chunk.clear();
        }
    }
    return bytes + detail::put(sink, chunk);
}

/// One zero-padded 16-digit lowercase hex word per line.
template <WordGenerator G>
std::size_t write_hex(G& gen, std::size_t count, std::ostream& sink) {
    detail::check_count(count);
    static constexpr char digits[] = "0123456789abcdef";
    std::string chunk;
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t w = gen.next();
        for (int s = 60; s >= 0; s -= 4) {
            chunk += digits[(w >> s) & 0xFU];
        }
        chunk += '\n';
        if (chunk.size() > 1 << 16) {
            bytes += detail::put(sink, chunk);
            chunk.clear();
        }
    }
    return bytes + detail::put(sink, chunk);
}

/**
 * CSV with header `t,<names...>` (default w1..wD) and one row per grid
 * point. Numbers use 17 significant digits so they parse back exactly.
 */
inline std::size_t write_trajectory_csv(const Trajectory& traj, std::ostream& sink,
                                        const std::vector<std::string>& column_names = {}) {
    if (!column_names.empty() && column_names.size() != traj.dims()) {
        throw error(errc::invalid_parameter, "column name count does not match trajectory dimensions");
    }
    std::string out = "t";
    for (std::size_t d = 0; d < traj.dims(); ++d) {
        out += ',';
        out += column_names.empty() ? "w" + std::to_string(d + 1) : column_names[d];
    }
    out += '\n';
    std::array<char, 40> buf{};
    std::size_t bytes = 0;
    for (std::size_t r = 0; r < traj.rows(); ++r) {
        out += detail::to_shortest17(traj.time(r), buf);
        for (double v : traj.row(r)) {
            out += ',';
            out += detail::to_shortest17(v, buf);
        }
        out += '\n';
        if (out.size() > 1 << 16) {
            bytes += detail::put(sink, out);
            out.clear();
        }
    }
    return bytes + detail::put(sink, out);
}

struct TrajectoryCsv {
    std::vector<std::string> columns;  // without the leading "t"
    Trajectory trajectory;
};

inline TrajectoryCsv read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("t", 0) != 0) {
        throw error(errc::invalid_parameter, "trajectory CSV must start with a 't' column");
    }
    std::vector<std::string> columns;
    {
        std::istringstream hs(line);
        std::string cell;
        std::getline(hs, cell, ',');
        while (std::getline(hs, cell, ',')) {
            columns.push_back(cell);
        }
    }
    std::vector<double> times;
    std::vector<double> values;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::size_t n = 0;
        while (std::getline(ls, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                throw error(errc::invalid_parameter, "bad number '" + cell + "'");
            }
            (n == 0 ? times : values).push_back(v);
            ++n;
        }
        if (n != columns.size() + 1) {
            throw error(errc::invalid_parameter, "row has " + std::to_string(n) + " cells");
        }
    }
    Trajectory traj(std::move(times), columns.size());
    for (std::size_t r = 0; r < traj.rows(); ++r) {
        for (std::size_t d = 0; d < traj.dims(); ++d) {
            traj.at(r, d) = values[r * traj.dims() + d];
        }
    }
    return {std::move(columns), std::move(traj)};
}

} // namespace stochastik

#endif // STOCHASTIK_EXPORT_HPP
