#ifndef STOCHASTIK_ERROR_HPP
#define STOCHASTIK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace stochastik {

enum class errc {
    invalid_parameter,
    not_coprime,
    non_invertible_state,
    zero_state,
    entropy_unavailable,
    empty_sequence,
    all_zero,
    domain_error,
    source_exhausted,
    too_short,
    too_few_samples,
    diverged,
    io_error,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::not_coprime: return "NotCoprime";
    case errc::non_invertible_state: return "NonInvertibleState";
    case errc::zero_state: return "ZeroState";
    case errc::entropy_unavailable: return "EntropyUnavailable";
    case errc::empty_sequence: return "EmptySequence";
    case errc::all_zero: return "AllZero";
    case errc::domain_error: return "DomainError";
    case errc::source_exhausted: return "SourceExhausted";
    case errc::too_short: return "TooShort";
    case errc::too_few_samples: return "TooFewSamples";
    case errc::diverged: return "Diverged";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

/// Single exception type for the library; inspect code() to branch.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace stochastik

#endif // STOCHASTIK_ERROR_HPP
