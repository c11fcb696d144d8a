#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "oracle/bignum.hpp"
#include "stochastik/modmath.hpp"

using namespace stochastik;

namespace {

TEST(ModInverse, SmallExamples) {
    EXPECT_EQ(modinv(3, 7), 5u);
    EXPECT_EQ(modinv(1, 2), 1u);
    EXPECT_EQ(modinv(1, 1000003), 1u);
    EXPECT_EQ(modinv(1, ~std::uint64_t{0}), 1u);
}

TEST(ModInverse, RejectsNonCoprime) {
    try {
        modinv(2, 4);
        FAIL() << "expected NotCoprime";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_coprime);
    }
    EXPECT_THROW(modinv(0, 7), error);
    EXPECT_THROW(modinv(3, 1), error);
}

TEST(ModInverse, ExhaustiveUpTo257) {
    for (std::uint64_t m = 2; m <= 257; ++m) {
        for (std::uint64_t x = 0; x < m; ++x) {
            if (gcd(x, m) == 1) {
                const auto y = modinv(x, m);
                ASSERT_LT(y, m);
                ASSERT_EQ((x * y) % m, 1u % m) << x << " mod " << m;
            } else {
                ASSERT_THROW(modinv(x, m), error) << x << " mod " << m;
            }
        }
    }
}

TEST(ModInverse, LargeModuliNearWordWidth) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t m = rng() | (std::uint64_t{1} << 63);
        const std::uint64_t x = rng() % m;
        if (gcd(x, m) != 1) {
            continue;
        }
        const auto y = modinv(x, m);
        ASSERT_EQ(oracle::mod(oracle::big(x) * y, m), 1);
    }
}

TEST(ModInverse, InvolutionForPrimeModulus) {
    constexpr std::uint64_t m = 65521;
    for (std::uint64_t x = 1; x < m; ++x) {
        ASSERT_EQ(modinv(modinv(x, m), m), x);
    }
}

TEST(MulMod, Examples) {
    const std::uint64_t two32 = std::uint64_t{1} << 32;
    EXPECT_EQ(mulmod(two32, two32, ~std::uint64_t{0}), 1u);
    EXPECT_EQ(mulmod(12345, 1, 1000), 345u);
    EXPECT_EQ(mulmod(two32, two32, Modulus::word()), 0u);
}

TEST(MulMod, MatchesBigIntegerOracle) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t m = rng() | 1;
        const std::uint64_t a = rng() % m;
        const std::uint64_t b = rng() % m;
        ASSERT_EQ(mulmod(a, b, m), oracle::u64(oracle::mod(oracle::big(a) * b, m)));
        ASSERT_EQ(mulmod(a, b, Modulus::word()), oracle::u64(oracle::mod(oracle::big(a) * b, oracle::two64)));
    }
}

TEST(SignedMod, Examples) {
    EXPECT_EQ(signed_mod(-1, 7), 6u);
    EXPECT_EQ(signed_mod(-183326, 2147483647), 2147300321u);
    EXPECT_EQ(signed_mod(14, 7), 0u);
    EXPECT_EQ(signed_mod(INT64_MIN, 3), oracle::u64(oracle::mod(oracle::big(INT64_MIN), 3)));
    EXPECT_THROW(signed_mod(5, 0), error);
}

TEST(SignedMod, InvariantUnderMultiplesOfModulus) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t m = 1 + rng() % 1000000;
        const auto a = static_cast<std::int64_t>(rng() % 2000000001) - 1000000000;
        const auto k = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto r = signed_mod(a, m);
        ASSERT_LT(r, m);
        ASSERT_EQ(r, signed_mod(a + k * static_cast<std::int64_t>(m), m));
    }
}

TEST(ModIntTest, ArithmeticAndInverse) {
    const ModInt a(5, 7);
    const ModInt b(4, 7);
    EXPECT_EQ((a + b).value(), 2u);
    EXPECT_EQ((b - a).value(), 6u);
    EXPECT_EQ((a * b).value(), 6u);
    EXPECT_EQ(a.inverse().value(), 3u);
    EXPECT_EQ(ModInt(9, 7).value(), 2u);
    EXPECT_THROW(a + ModInt(1, 5), error);
    EXPECT_THROW(ModInt(1, 0), error);
}

TEST(ModulusTest, WordAndExplicit) {
    EXPECT_TRUE(Modulus::word().is_word());
    EXPECT_EQ(Modulus::bits(64), Modulus::word());
    EXPECT_EQ(Modulus::bits(4).value(), 16u);
    EXPECT_TRUE(Modulus::word().contains(~std::uint64_t{0}));
    EXPECT_FALSE(Modulus(16).contains(16));
    EXPECT_THROW(Modulus(0), error);
    EXPECT_THROW(Modulus::bits(65), error);
}

} // namespace
