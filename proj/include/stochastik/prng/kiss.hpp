#ifndef STOCHASTIK_PRNG_KISS_HPP
#define STOCHASTIK_PRNG_KISS_HPP

#include <cstdint>

#include "stochastik/error.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/seed.hpp"

namespace stochastik {

/// Constants distinguishing KISS from jKISS.
struct KissConstants {
    std::uint32_t lcg_multiplier;
    std::uint32_t lcg_increment;
    unsigned shift_left_1;
    unsigned shift_right;
    unsigned shift_left_2;
    std::uint64_t mwc_multiplier;
};

inline constexpr KissConstants kiss_constants{69069u, 123456u, 13, 17, 5, 698769069ULL};
inline constexpr KissConstants jkiss_constants{314527869u, 1234567u, 5, 7, 22, 4294584393ULL};

struct KissState {
    std::uint32_t lcg;       // seed_0
    std::uint32_t xorshift;  // seed_1, never zero
    std::uint32_t mwc;       // seed_2
    std::uint32_t carry;     // seed_3
};

/**
 * KISS family: a 32-bit congruential word, a 3-shift xorshift word and a
 * multiply-with-carry word, summed mod 2^32.
 *
 * The MWC product t = a * mwc + carry is formed in 64 bits; the carry takes
 * the high word and the MWC word takes the low word.
 */
class Kiss {
public:
    Kiss(KissState state, const KissConstants& k = kiss_constants) : k_(k), s_(state) {
        if (s_.xorshift == 0) {
            throw error(errc::invalid_parameter, "KISS xorshift word (seed_1) must be nonzero");
        }
        if (s_.mwc == 0 && s_.carry == 0) {
            throw error(errc::invalid_parameter, "KISS multiply-with-carry pair must not be (0, 0)");
        }
    }

    /**
     * State from the high halves of expand_seed(seed, 4). The carry is reduced
     * below the MWC multiplier; a zero xorshift word becomes 362436069.
     */
    explicit Kiss(std::uint64_t seed, const KissConstants& k = kiss_constants) : Kiss(seeded(seed, k), k) {}

    std::uint64_t next() noexcept {
        s_.lcg = k_.lcg_multiplier * s_.lcg + k_.lcg_increment;
        s_.xorshift ^= s_.xorshift << k_.shift_left_1;
        s_.xorshift ^= s_.xorshift >> k_.shift_right;
        s_.xorshift ^= s_.xorshift << k_.shift_left_2;
        const std::uint64_t t = k_.mwc_multiplier * s_.mwc + s_.carry;
        s_.carry = static_cast<std::uint32_t>(t >> 32);
        s_.mwc = static_cast<std::uint32_t>(t);
        return static_cast<std::uint32_t>(s_.lcg + s_.xorshift + s_.mwc);
    }

    [[nodiscard]] const KissState& state() const noexcept { return s_; }
    [[nodiscard]] static Modulus modulus() noexcept { return Modulus::bits(32); }

private:
    static KissState seeded(std::uint64_t seed, const KissConstants& k) {
        const auto w = expand_seed(seed, 4);
        KissState s{static_cast<std::uint32_t>(w[0] >> 32), static_cast<std::uint32_t>(w[1] >> 32),
                    static_cast<std::uint32_t>(w[2] >> 32),
                    static_cast<std::uint32_t>((w[3] >> 32) % k.mwc_multiplier)};
        if (s.xorshift == 0) {
            s.xorshift = 362436069u;
        }
        if (s.mwc == 0 && s.carry == 0) {
            s.mwc = 1;
        }
        return s;
    }

    KissConstants k_;
    KissState s_;
};

inline Kiss make_jkiss(KissState state) { return Kiss(state, jkiss_constants); }
inline Kiss make_jkiss(std::uint64_t seed) { return Kiss(seed, jkiss_constants); }

} // namespace stochastik

#endif // STOCHASTIK_PRNG_KISS_HPP
