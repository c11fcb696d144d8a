#ifndef STOCHASTIK_PRNG_REGISTRY_HPP
#define STOCHASTIK_PRNG_REGISTRY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "stochastik/error.hpp"
#include "stochastik/prng/concepts.hpp"
#include "stochastik/prng/congruential.hpp"
#include "stochastik/prng/inversive.hpp"
#include "stochastik/prng/kiss.hpp"
#include "stochastik/prng/lagged_fibonacci.hpp"
#include "stochastik/prng/mt64.hpp"
#include "stochastik/prng/multiple_recursive.hpp"
#include "stochastik/prng/xorshift.hpp"

namespace stochastik {

/// Type-erased generator; owns one concrete state machine.
class AnyGenerator {
public:
    template <WordGenerator G>
    AnyGenerator(std::string name, G gen)
        : name_(std::move(name)), impl_(std::make_unique<Model<G>>(std::move(gen))) {}

    AnyGenerator(const AnyGenerator& other) : name_(other.name_), impl_(other.impl_->clone()) {}
    AnyGenerator& operator=(const AnyGenerator& other) {
        if (this != &other) {
            name_ = other.name_;
            impl_ = other.impl_->clone();
        }
        return *this;
    }
    AnyGenerator(AnyGenerator&&) noexcept = default;
    AnyGenerator& operator=(AnyGenerator&&) noexcept = default;
    ~AnyGenerator() = default;

    std::uint64_t next() { return impl_->next(); }
    [[nodiscard]] Modulus modulus() const { return impl_->modulus(); }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    struct Concept {
        virtual ~Concept() = default;
        virtual std::uint64_t next() = 0;
        [[nodiscard]] virtual Modulus modulus() const = 0;
        [[nodiscard]] virtual std::unique_ptr<Concept> clone() const = 0;
    };

    template <class G>
    struct Model final : Concept {
        explicit Model(G g) : gen(std::move(g)) {}
        std::uint64_t next() override { return gen.next(); }
        [[nodiscard]] Modulus modulus() const override { return gen.modulus(); }
        [[nodiscard]] std::unique_ptr<Concept> clone() const override { return std::make_unique<Model>(gen); }
        G gen;
    };

    std::string name_;
    std::unique_ptr<Concept> impl_;
};

inline constexpr std::array<std::string_view, 12> generator_names{
    "lcg",           "lfg",  "cmrg",  "mrg5", "icg",     "xorshift-star",
    "xorshift-plus", "kiss", "jkiss", "mt64", "quad-cg", "cubic-cg",
};

inline bool is_generator_name(std::string_view name) {
    return std::find(generator_names.begin(), generator_names.end(), name) != generator_names.end();
}

inline std::string generator_name_list() {
    std::string out;
    for (auto n : generator_names) {
        if (!out.empty()) {
            out += ", ";
        }
        out += n;
    }
    return out;
}

/**
 * Build a registered generator from a single seed word.
 *
 *   lcg, quad-cg, cubic-cg, xorshift-star, mt64   seed used directly
 *   icg                                           seed mod m
 *   lfg, cmrg, mrg5, xorshift-plus, kiss, jkiss   state from expand_seed
 *
 * xorshift-star rejects seed 0 with ZeroState.
 */
inline AnyGenerator make_generator(std::string_view name, std::uint64_t seed) {
    const std::string n(name);
    if (name == "lcg") return {n, Lcg(seed)};
    if (name == "quad-cg") return {n, PolyCongruential(seed, PolyCongruentialParams::quadratic())};
    if (name == "cubic-cg") return {n, PolyCongruential(seed, PolyCongruentialParams::cubic())};
    if (name == "lfg") return {n, Lfg(seed)};
    if (name == "cmrg") return {n, Cmrg(seed)};
    if (name == "mrg5") return {n, Mrg5(seed)};
    if (name == "icg") return {n, Icg(seed)};
    if (name == "xorshift-star") return {n, XorShiftStar(seed)};
    if (name == "xorshift-plus") return {n, XorShiftPlus(seed)};
    if (name == "kiss") return {n, Kiss(seed)};
    if (name == "jkiss") return {n, make_jkiss(seed)};
    if (name == "mt64") return {n, Mt64(seed)};
    throw error(errc::invalid_parameter, "unknown generator '" + n + "'; valid names: " + generator_name_list());
}

} // namespace stochastik

#endif // STOCHASTIK_PRNG_REGISTRY_HPP
