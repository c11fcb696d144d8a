#ifndef STOCHASTIK_ENTROPY_HPP
#define STOCHASTIK_ENTROPY_HPP

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include "stochastik/error.hpp"

namespace stochastik {

inline constexpr const char* entropy_path_env = "STOCHASTIK_ENTROPY_PATH";
inline constexpr const char* default_entropy_path = "/dev/urandom";

/// Where seed bytes come from: the nonblocking OS device, or an explicit file.
class EntropySource {
public:
    /// OS default, unless STOCHASTIK_ENTROPY_PATH is set.
    static EntropySource os_default() {
        if (const char* p = std::getenv(entropy_path_env); p != nullptr && *p != '\0') {
            return EntropySource(std::string(p));
        }
        return EntropySource(std::nullopt);
    }

    static EntropySource file(std::string path) { return EntropySource(std::move(path)); }

    [[nodiscard]] bool is_override() const noexcept { return override_.has_value(); }
    [[nodiscard]] std::string path() const { return override_.value_or(default_entropy_path); }

    /// Fresh read of exactly 8*n bytes, little-endian words. Short reads are retried.
    [[nodiscard]] std::vector<std::uint64_t> read_words(std::size_t n) const {
        if (n == 0) {
            return {};
        }
        const auto p = path();
        const int fd = ::open(p.c_str(), O_RDONLY | O_CLOEXEC);
        if (fd < 0) {
            throw error(errc::entropy_unavailable, "cannot open " + p + ": " + std::strerror(errno));
        }
        std::vector<unsigned char> bytes(8 * n);
        std::size_t got = 0;
        while (got < bytes.size()) {
            const auto r = ::read(fd, bytes.data() + got, bytes.size() - got);
            if (r < 0 && errno == EINTR) {
                continue;
            }
            if (r <= 0) {
                const std::string why = r < 0 ? std::strerror(errno) : std::string("unexpected end of file");
                ::close(fd);
                throw error(errc::entropy_unavailable, "reading " + p + ": " + why);
            }
            got += static_cast<std::size_t>(r);
        }
        ::close(fd);
        std::vector<std::uint64_t> words(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t w = 0;
            for (int b = 7; b >= 0; --b) {
                w = (w << 8) | bytes[8 * i + static_cast<std::size_t>(b)];
            }
            words[i] = w;
        }
        return words;
    }

private:
    explicit EntropySource(std::optional<std::string> p) : override_(std::move(p)) {}

    std::optional<std::string> override_;
};

/// n_words seed words from the OS (or the STOCHASTIK_ENTROPY_PATH override).
inline std::vector<std::uint64_t> os_seed(std::size_t n_words) {
    return EntropySource::os_default().read_words(n_words);
}

} // namespace stochastik

#endif // STOCHASTIK_ENTROPY_HPP
