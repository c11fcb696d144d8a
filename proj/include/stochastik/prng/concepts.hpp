#ifndef STOCHASTIK_PRNG_CONCEPTS_HPP
#define STOCHASTIK_PRNG_CONCEPTS_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"

namespace stochastik {

/// A deterministic uniform source of integer words in [0, modulus()).
/// 32-bit generators zero-extend into the 64-bit word.
template <class G>
concept WordGenerator = requires(G g, const G cg) {
    { g.next() } -> std::same_as<std::uint64_t>;
    { cg.modulus() } -> std::same_as<Modulus>;
};

/**
 * Replays a fixed list of words as if they were generator output.
 *
 * Used to inject known values into exporters and samplers. Running past the
 * end raises SourceExhausted.
 */
class SequenceGenerator {
public:
    explicit SequenceGenerator(std::vector<std::uint64_t> words, Modulus m = Modulus::word())
        : words_(std::move(words)), modulus_(m) {}

    std::uint64_t next() {
        if (pos_ >= words_.size()) {
            throw error(errc::source_exhausted, "injected sequence ended after " + std::to_string(pos_) + " words");
        }
        return words_[pos_++];
    }

    [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::size_t consumed() const noexcept { return pos_; }

private:
    std::vector<std::uint64_t> words_;
    Modulus modulus_;
    std::size_t pos_ = 0;
};

template <WordGenerator G>
std::vector<std::uint64_t> take(G& gen, std::size_t n) {
    std::vector<std::uint64_t> out(n);
    for (auto& w : out) {
        w = gen.next();
    }
    return out;
}

} // namespace stochastik

#endif // STOCHASTIK_PRNG_CONCEPTS_HPP
