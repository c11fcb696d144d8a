#ifndef STOCHASTIK_MODMATH_HPP
#define STOCHASTIK_MODMATH_HPP

#include <cstdint>
#include <string>

#include "stochastik/error.hpp"

namespace stochastik {

using u128 = unsigned __int128;
using i128 = __int128;

/**
 * Modulus of a congruential recurrence.
 *
 * Either an explicit value m >= 1 or the native 64-bit word width (m = 2^64),
 * which is represented internally by a stored zero and means "let unsigned
 * arithmetic wrap".
 */
class Modulus {
public:
    constexpr explicit Modulus(std::uint64_t m) : m_(m) {
        if (m == 0) {
            throw error(errc::invalid_parameter, "modulus must be >= 1 (use Modulus::word() for 2^64)");
        }
    }

    static constexpr Modulus word() noexcept { return Modulus(); }
    static constexpr Modulus bits(unsigned e) {
        if (e == 0 || e > 64) {
            throw error(errc::invalid_parameter, "modulus width must be in [1, 64] bits");
        }
        return e == 64 ? word() : Modulus(std::uint64_t{1} << e);
    }

    [[nodiscard]] constexpr bool is_word() const noexcept { return m_ == 0; }

    /// Exact value as a 128-bit integer (2^64 for the word modulus).
    [[nodiscard]] constexpr u128 wide() const noexcept { return is_word() ? (u128{1} << 64) : u128{m_}; }

    /// Value as a 64-bit integer; only meaningful when !is_word().
    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return m_; }

    [[nodiscard]] constexpr bool contains(std::uint64_t x) const noexcept { return is_word() || x < m_; }

    [[nodiscard]] constexpr std::uint64_t reduce(u128 x) const noexcept {
        return is_word() ? static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x % m_);
    }

    [[nodiscard]] std::string to_string() const { return is_word() ? std::string("2^64") : std::to_string(m_); }

    friend constexpr bool operator==(Modulus, Modulus) = default;

private:
    constexpr Modulus() noexcept : m_(0) {}
    std::uint64_t m_;
};

/// Exact a*b mod m through a 128-bit intermediate.
constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, Modulus m) noexcept {
    return m.reduce(u128{a} * b);
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return mulmod(a, b, Modulus(m));
}

constexpr std::uint64_t addmod(std::uint64_t a, std::uint64_t b, Modulus m) noexcept {
    return m.reduce(u128{a} + b);
}

/// Least nonnegative residue of a signed value.
constexpr std::uint64_t signed_mod(std::int64_t a, std::uint64_t m) {
    if (m == 0) {
        throw error(errc::invalid_parameter, "signed_mod: modulus must be >= 1");
    }
    i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint64_t>(r);
}

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/**
 * Inverse of x modulo m by the extended Euclidean algorithm.
 *
 * Works for any m >= 2 (prime or composite) as long as gcd(x, m) = 1.
 * The Bezout coefficients are carried in signed 128-bit integers so moduli
 * close to 2^64 do not wrap.
 */
constexpr std::uint64_t modinv(std::uint64_t x, std::uint64_t m) {
    if (m < 2) {
        throw error(errc::invalid_parameter, "modinv: modulus must be >= 2");
    }
    i128 old_r = x % m;
    i128 r = m;
    i128 old_s = 1;
    i128 s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        const i128 next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        const i128 next_s = old_s - q * s;
        old_s = s;
        s = next_s;
    }
    // old_r = gcd(x, m); old_s is the coefficient of x.
    if (old_r != 1) {
        throw error(errc::not_coprime, "gcd(" + std::to_string(x) + ", " + std::to_string(m) + ") != 1");
    }
    i128 y = old_s % static_cast<i128>(m);
    if (y < 0) {
        y += m;
    }
    return static_cast<std::uint64_t>(y);
}

/// Residue class value mod m with exact arithmetic.
class ModInt {
public:
    constexpr ModInt(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
        if (modulus == 0) {
            throw error(errc::invalid_parameter, "ModInt: modulus must be >= 1");
        }
        value_ = value % modulus;
    }

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr std::uint64_t modulus() const noexcept { return modulus_; }

    [[nodiscard]] constexpr ModInt inverse() const { return {modinv(value_, modulus_), modulus_}; }

    friend constexpr ModInt operator+(ModInt a, ModInt b) {
        check_same(a, b);
        return {addmod(a.value_, b.value_, Modulus(a.modulus_)), a.modulus_};
    }
    friend constexpr ModInt operator-(ModInt a, ModInt b) {
        check_same(a, b);
        return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.modulus_ - (b.value_ - a.value_), a.modulus_};
    }
    friend constexpr ModInt operator*(ModInt a, ModInt b) {
        check_same(a, b);
        return {mulmod(a.value_, b.value_, Modulus(a.modulus_)), a.modulus_};
    }
    friend constexpr bool operator==(ModInt, ModInt) = default;

private:
    static constexpr void check_same(ModInt a, ModInt b) {
        if (a.modulus_ != b.modulus_) {
            throw error(errc::invalid_parameter, "ModInt: mismatched moduli");
        }
    }

    std::uint64_t value_;
    std::uint64_t modulus_;
};

} // namespace stochastik

#endif // STOCHASTIK_MODMATH_HPP
