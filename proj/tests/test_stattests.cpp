#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "stochastik/distributions.hpp"
#include "stochastik/prng/registry.hpp"
#include "stochastik/stattests.hpp"

using namespace stochastik;

namespace {

struct SfTable {
    double df;
    std::vector<std::pair<double, double>> points;
};

// scipy.stats.chi2.sf at 20 evenly spaced points.
const std::vector<SfTable> chi2_reference{
    {9, {{0.5, 0.9999695662588389}, {1.894736842105263, 0.9930248348494608}, {3.289473684210526, 0.9517046408270823}, {4.684210526315789, 0.8609221701669533}, {6.078947368421052, 0.73199163456604}, {7.473684210526315, 0.5879266767675181}, {8.868421052631579, 0.449507797434644}, {10.26315789473684, 0.32960427861075653}, {11.657894736842104, 0.23328968876513786}, {13.052631578947368, 0.16023916609753677}, {14.44736842105263, 0.10727768955979923}, {15.842105263157894, 0.07025295586551536}, {17.236842105263158, 0.04513368175405578}, {18.63157894736842, 0.028514246407608707}, {20.02631578947368, 0.01775069297909492}, {21.421052631578945, 0.010906548157579708}, {22.81578947368421, 0.006623552688616856}, {24.210526315789473, 0.003980592746991271}, {25.605263157894736, 0.0023697592152846785}, {27.0, 0.001398767679796457}}},
    {99, {{20.0, 1.0}, {29.473684210526315, 0.9999999999991049}, {38.94736842105263, 0.9999999911630493}, {48.421052631578945, 0.9999956525628361}, {57.89473684210526, 0.9996821394981257}, {67.36842105263158, 0.993726087752999}, {76.84210526315789, 0.9517480188682015}, {86.3157894736842, 0.8146492711776011}, {95.78947368421052, 0.5726584624694683}, {105.26315789473684, 0.3144750816020821}, {114.73684210526315, 0.1333128593652678}, {124.21052631578947, 0.044073275165452015}, {133.68421052631578, 0.011583269207043244}, {143.15789473684208, 0.0024724178832974237}, {152.6315789473684, 0.00043751853459330123}, {162.10526315789474, 6.540386972796461e-05}, {171.57894736842104, 8.39808757538193e-06}, {181.05263157894734, 9.399146949568392e-07}, {190.52631578947367, 9.287499001122518e-08}, {200.0, 8.19391189142209e-09}}},
};

TEST(ChiSquareTail, MatchesReferenceTable) {
    for (const auto& table : chi2_reference) {
        for (auto [x, sf] : table.points) {
            const double got = chi_square_sf(x, table.df);
            EXPECT_NEAR(got, sf, 1e-8) << "df " << table.df << " x " << x;
            EXPECT_NEAR(got, sf, 1e-9 * sf + 1e-300) << "relative, df " << table.df << " x " << x;
        }
    }
}

TEST(ChiSquareTail, EdgeValues) {
    EXPECT_EQ(chi_square_sf(0.0, 5), 1.0);
    EXPECT_NEAR(chi_square_sf(2.0, 2), std::exp(-1.0), 1e-14);
    for (double x : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
        const double p = chi_square_sf(x, 99);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
}

TEST(VerdictMapping, Thresholds) {
    EXPECT_EQ(verdict_for(1.0), Verdict::pass);
    EXPECT_EQ(verdict_for(0.5), Verdict::pass);
    EXPECT_EQ(verdict_for(0.005), Verdict::pass);
    EXPECT_EQ(verdict_for(0.0049), Verdict::weak);
    EXPECT_EQ(verdict_for(1e-6), Verdict::weak);
    EXPECT_EQ(verdict_for(9.9e-7), Verdict::fail);
    EXPECT_EQ(verdict_for(0.0), Verdict::fail);
}

std::vector<double> uniforms(std::string_view name, std::uint64_t seed, std::size_t n) {
    auto g = make_generator(name, seed);
    std::vector<double> u(n);
    for (auto& x : u) x = uniform01(g);
    return u;
}

TEST(ChiSquareUniform, PerfectEquidistribution) {
    constexpr std::size_t n = 10000;
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (static_cast<double>(i) + 0.5) / n;
    const auto r = chi_square_uniform(u, 100);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.p_value, 1.0);
    EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(ChiSquareUniform, ConstantInputFails) {
    const std::vector<double> u(10000, 0.5);
    EXPECT_EQ(chi_square_uniform(u, 100).verdict, Verdict::fail);
}

TEST(ChiSquareUniform, TooFewSamples) {
    const std::vector<double> u(999, 0.5);
    try {
        chi_square_uniform(u, 100);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::too_few_samples);
    }
}

TEST(ChiSquareUniform, XorshiftStarMillion) {
    const auto r = chi_square_uniform(uniforms("xorshift-star", 20170401, 1000000), 100);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_GE(r.p_value, 0.0001);
    EXPECT_LE(r.p_value, 0.9999);
}

TEST(SerialCorrelation, AlternatingFails) {
    std::vector<double> u(10000);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<double>(i % 2);
    const auto r = serial_correlation(u, 1);
    EXPECT_NEAR(r.statistic, -1.0, 1e-3);
    EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(SerialCorrelation, WhiteSequenceWithinCltBound) {
    auto g = make_generator("mt64", 8);
    NormalSampler normal;
    std::vector<double> z(200000);
    for (auto& v : z) v = normal(g);
    for (std::size_t lag : {1u, 2u, 5u}) {
        const auto r = serial_correlation(z, lag);
        EXPECT_LE(std::fabs(r.statistic), 5.0 / std::sqrt(static_cast<double>(z.size())));
    }
}

TEST(SerialCorrelation, XorshiftPlusLagOnePasses) {
    EXPECT_EQ(serial_correlation(uniforms("xorshift-plus", 99, 1000000), 1).verdict, Verdict::pass);
}

TEST(SerialCorrelation, ConstantAndTooFew) {
    const std::vector<double> flat(2000, 0.25);
    EXPECT_EQ(serial_correlation(flat, 1).verdict, Verdict::fail);
    const std::vector<double> few(999, 0.1);
    EXPECT_THROW(serial_correlation(few, 1), error);
}

struct ConstantGen {
    std::uint64_t next() { return 6; }
    [[nodiscard]] Modulus modulus() const { return Modulus::word(); }
};

TEST(LowBitPeriod, Examples) {
    auto lcg = make_generator("lcg", 1);
    auto r = low_bit_period(lcg, 1000);
    EXPECT_EQ(r.statistic, 2.0);
    EXPECT_EQ(r.verdict, Verdict::fail);

    auto xs = make_generator("xorshift-star", 1);
    r = low_bit_period(xs, 4096);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.verdict, Verdict::pass);

    ConstantGen c;
    r = low_bit_period(c, 100);
    EXPECT_EQ(r.statistic, 1.0);
    EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(LowBitPeriod, AgreesWithBruteForce) {
    // Period 3 pattern 1,1,0 and period 100 (too long to fail).
    for (std::size_t period : {3u, 100u}) {
        std::vector<std::uint64_t> words(4096);
        for (std::size_t i = 0; i < words.size(); ++i) words[i] = (i % period == 0) ? 1 : 0;
        SequenceGenerator g(words, Modulus::word());
        const auto r = low_bit_period(g, 4096);
        EXPECT_EQ(r.statistic, static_cast<double>(period));
        EXPECT_EQ(r.verdict, period <= 64 ? Verdict::fail : Verdict::pass);
    }
}

TEST(MomentsTest, ExactSequencePasses) {
    // +-1 alternating has mean 0 and population variance 1 exactly.
    std::vector<double> v(10000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i % 2 == 0 ? 1.0 : -1.0;
    const auto r = moments_test(v, 0.0, 1.0, 5.0);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(MomentsTest, ShiftedNormalFails) {
    auto g = make_generator("xorshift-star", 3);
    NormalSampler normal;
    std::vector<double> z(1000000);
    for (auto& v : z) v = normal(g, {1.0, 1.0});
    const auto r = moments_test(z, 0.0, 1.0, 5.0);
    EXPECT_GT(r.statistic, 900.0);
    EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(MomentsTest, PoissonFourPasses) {
    auto g = make_generator("mt64", 12);
    std::vector<double> k(1000000);
    for (auto& v : k) v = static_cast<double>(poisson_sample(uniform_source(g), 4.0));
    EXPECT_EQ(moments_test(k, 4.0, 4.0, 5.0).verdict, Verdict::pass);
}

TEST(MomentsTest, TooFew) {
    const std::vector<double> v(999, 0.0);
    EXPECT_THROW(moments_test(v, 0, 1, 5), error);
}

TEST(Battery, LcgFailsOnLowBit) {
    const auto r = run_battery("lcg", 1, 1000000);
    EXPECT_GE(r.fails(), 1u);
    EXPECT_EQ(r.outcomes.back().name, "low-bit-period");
    EXPECT_EQ(r.outcomes.back().verdict, Verdict::fail);
}

TEST(Battery, SoundGeneratorsHaveNoFails) {
    for (auto name : {"lfg", "icg", "cmrg", "kiss", "jkiss", "xorshift-star", "xorshift-plus", "mt64"}) {
        const auto r = run_battery(name, 20170401, 1000000);
        EXPECT_EQ(r.outcomes.size(), battery_test_count);
        EXPECT_EQ(r.fails(), 0u) << name << "\n" << format_report(r);
        EXPECT_EQ(r.fails() + r.weaks() + r.passes(), battery_test_count);
    }
}

TEST(Battery, DeterministicReport) {
    const auto a = run_battery("kiss", 5, 100000);
    const auto b = run_battery("kiss", 5, 100000);
    EXPECT_EQ(a, b);
    EXPECT_EQ(format_report(a), format_report(b));
    EXPECT_EQ(format_report_csv(a), format_report_csv(b));
}

TEST(Battery, CsvShape) {
    const auto csv = format_report_csv(run_battery("mt64", 1, 100000));
    EXPECT_EQ(csv.rfind("test,statistic,p_value,verdict\n", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), battery_test_count + 1);
}

TEST(Battery, MinimumSampleCount) {
    EXPECT_THROW(run_battery("mt64", 1, 99999), error);
}

} // namespace
