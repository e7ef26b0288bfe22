#include <gtest/gtest.h>

#include <vector>

#include "sincasym/power_series.hpp"
#include "sincasym/random_series.hpp"

using namespace sincasym;

namespace {

PowerSeries S(std::vector<Rational> c, Parity p = Parity::none) { return PowerSeries(std::move(c), p); }

/// sin x through x^N.
PowerSeries sin_series(int N) {
    std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
    BigInt fact = 1;
    for (int k = 1; k <= N; ++k) {
        fact *= k;
        if (k % 2 == 1) v[static_cast<std::size_t>(k)] = Rational(BigInt((k / 2) % 2 == 0 ? 1 : -1), fact);
    }
    return PowerSeries(std::move(v), Parity::odd);
}

/// e^x - 1 through x^N.
PowerSeries expm1_series(int N) {
    std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
    BigInt fact = 1;
    for (int k = 1; k <= N; ++k) {
        fact *= k;
        v[static_cast<std::size_t>(k)] = Rational(BigInt(1), fact);
    }
    return PowerSeries(std::move(v));
}

std::vector<BigInt> catalan(int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    return c;
}

}  // namespace

TEST(PowerSeries, ConstructionChecksParity) {
    EXPECT_NO_THROW(S({1, 0, 2}, Parity::even));
    EXPECT_THROW(S({1, 1, 2}, Parity::even), std::invalid_argument);
    EXPECT_THROW(S({1, 1}, Parity::odd), std::invalid_argument);
    EXPECT_THROW(PowerSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST(PowerSeries, IndexBeyondOrderThrows) {
    const PowerSeries f = S({1, 2, 3});
    EXPECT_EQ(f[2], Rational(3));
    EXPECT_THROW((void)f[3], std::out_of_range);
    EXPECT_THROW((void)f[-1], std::out_of_range);
}

TEST(PowerSeries, MulExamples) {
    EXPECT_EQ(series_mul(S({1, 1, 0}), S({1, -1, 0})), S({1, 0, -1}));
    const PowerSeries f = S({1, 2, 3, 4});
    EXPECT_EQ(series_mul(f, PowerSeries::constant(1, 3)), f);
    const PowerSeries t = S({0, 0, Rational(1, 6), 0, Rational(1, 180), 0, 0, 0, 0}, Parity::even);
    const PowerSeries sq = series_mul(t, t);
    EXPECT_EQ(sq[4], Rational(1, 36));
    EXPECT_EQ(sq[6], Rational(1, 540));
    EXPECT_EQ(sq[8], Rational(1, 32400));
}

TEST(PowerSeries, MulTruncatesAtMinOrder) {
    EXPECT_EQ(series_mul(S({1, 1, 1, 1}), S({1, 1})).order(), 1);
}

TEST(PowerSeries, MulParity) {
    const PowerSeries e = S({1, 0, 1}, Parity::even);
    const PowerSeries o = S({0, 1, 0}, Parity::odd);
    EXPECT_EQ(series_mul(e, e).parity(), Parity::even);
    EXPECT_EQ(series_mul(o, o).parity(), Parity::even);
    EXPECT_EQ(series_mul(e, o).parity(), Parity::odd);
    EXPECT_EQ(series_mul(e, S({1, 1, 1})).parity(), Parity::none);
}

TEST(PowerSeries, DivExamples) {
    const PowerSeries q = series_div(PowerSeries::identity(9), sin_series(9));
    EXPECT_EQ(q.order(), 8);
    EXPECT_EQ(q[0], Rational(1));
    EXPECT_EQ(q[2], Rational(1, 6));
    EXPECT_EQ(q[4], Rational(7, 360));
    EXPECT_EQ(q.parity(), Parity::even);

    const PowerSeries f = S({2, 3, 5, 7});
    EXPECT_EQ(series_div(f, f), PowerSeries::constant(1, 3).truncated(3));
    EXPECT_EQ(series_div(PowerSeries::constant(1, 4), S({1, -1, 0, 0, 0})), S({1, 1, 1, 1, 1}));
}

TEST(PowerSeries, DivDegenerate) {
    EXPECT_THROW(series_div(S({1, 1}), S({0, 0})), degenerate_divisor);
    EXPECT_THROW(series_div(S({1, 1, 1}), S({0, 1, 1})), degenerate_divisor);
}

TEST(PowerSeries, DivRoundTrip) {
    RandomSeries gen(5);
    for (int i = 0; i < 200; ++i) {
        const PowerSeries f = gen.series(10);
        const PowerSeries g = gen.unit_series(10);
        EXPECT_EQ(series_mul(series_div(f, g), g), f);
    }
}

TEST(PowerSeries, LogExamples) {
    const PowerSeries l = series_log(S({1, 1, 0, 0, 0}));
    EXPECT_EQ(l, S({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)}));
    // log(x / sin x)
    const PowerSeries ratio = series_div(PowerSeries::identity(11), sin_series(11));
    const PowerSeries psi = series_log(ratio);
    EXPECT_EQ(psi[2], Rational(1, 6));
    EXPECT_EQ(psi[4], Rational(1, 180));
    EXPECT_EQ(psi[6], Rational(1, 2835));
    EXPECT_EQ(psi[8], Rational(1, 37800));
    EXPECT_EQ(psi[10], Rational(1, 467775));
    EXPECT_EQ(psi.parity(), Parity::even);
    const PowerSeries f = S({1, 1, 0, 0, 0, 0}), g = S({1, 0, 1, 0, 0, 0});
    EXPECT_EQ(series_log(series_mul(f, g)), series_log(f) + series_log(g));
}

TEST(PowerSeries, LogPrecondition) {
    EXPECT_THROW(series_log(S({2, 1})), precondition_error);
    EXPECT_THROW(series_log(S({0, 1})), precondition_error);
}

TEST(PowerSeries, ExpInvertsLog) {
    RandomSeries gen(17);
    for (int i = 0; i < 100; ++i) {
        const PowerSeries f = gen.unit_series(9);
        EXPECT_EQ(series_exp(series_log(f)), f);
    }
    EXPECT_THROW(series_exp(S({1, 1})), precondition_error);
}

TEST(PowerSeries, SqrtExamples) {
    EXPECT_EQ(series_sqrt(S({1, 1, 0, 0})), S({1, Rational(1, 2), Rational(-1, 8), Rational(1, 16)}));
    const PowerSeries f = S({1, 1, 1, 0, 0, 0, 0});
    EXPECT_EQ(series_sqrt(series_mul(f, f)), f);
    const PowerSeries s = series_sqrt(S({1, 0, Rational(1, 10), 0, 0}, Parity::even));
    EXPECT_EQ(s[2], Rational(1, 20));
    EXPECT_EQ(s[4], Rational(-1, 800));
    EXPECT_EQ(s.parity(), Parity::even);
    EXPECT_THROW(series_sqrt(S({4, 1})), precondition_error);
}

TEST(PowerSeries, PowMatchesRepeatedProductAndSqrt) {
    RandomSeries gen(23);
    for (int i = 0; i < 50; ++i) {
        const PowerSeries f = gen.unit_series(8);
        EXPECT_EQ(series_pow(f, Rational(3)), series_mul(f, series_mul(f, f)));
        EXPECT_EQ(series_pow(f, Rational(1, 2)), series_sqrt(f));
        EXPECT_EQ(series_pow(f, Rational(-1)), series_div(PowerSeries::constant(1, 8), f));
    }
}

TEST(PowerSeries, ComposeExamples) {
    const PowerSeries f = S({0, 0, 1, 0, 0});
    const PowerSeries g = S({0, 1, 1, 0, 0});
    EXPECT_EQ(series_compose(f, g), S({0, 0, 1, 2, 1}));
    const PowerSeries h = S({3, 1, 4, 1, 5});
    EXPECT_EQ(series_compose(h, PowerSeries::identity(4)), h);
    const PowerSeries log1p = series_log(S({1, 1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(series_compose(log1p, expm1_series(7)), PowerSeries::identity(7));
}

TEST(PowerSeries, ComposeOrderWithHighValuation) {
    // f known through x^2, g = x^2 + ...: f(g) known through x^5.
    const PowerSeries r = series_compose(S({1, 1, 1}), S({0, 0, 1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(r.order(), 5);
    EXPECT_EQ(r, S({1, 0, 1, 0, 1, 0}));
}

TEST(PowerSeries, ComposePrecondition) {
    EXPECT_THROW(series_compose(S({1, 1}), S({1, 1})), precondition_error);
}

TEST(PowerSeries, RevertExamples) {
    EXPECT_EQ(series_revert(PowerSeries::identity(6)), PowerSeries::identity(6));
    const int N = 12;
    std::vector<Rational> v(N + 1);
    v[1] = 1;
    v[2] = -1;
    const PowerSeries g = series_revert(PowerSeries(v));
    const std::vector<BigInt> c = catalan(N);
    for (int k = 1; k <= N; ++k) EXPECT_EQ(g[k], Rational(c[static_cast<std::size_t>(k - 1)])) << "k=" << k;
}

TEST(PowerSeries, RevertErrors) {
    EXPECT_THROW(series_revert(S({0, 0, 1})), not_invertible);
    EXPECT_THROW(series_revert(S({1, 1, 1})), precondition_error);
}

TEST(PowerSeries, RevertMethodsAgree) {
    RandomSeries gen(31);
    for (int i = 0; i < 100; ++i) {
        const PowerSeries f = gen.invertible_series(gen.integer(1, 12));
        EXPECT_EQ(series_revert(f, ReversionMethod::lagrange), series_revert(f, ReversionMethod::substitution));
    }
}

TEST(PowerSeries, RevertKeepsOddParity) {
    const PowerSeries s = sin_series(11);
    const PowerSeries a = series_revert(s);
    EXPECT_EQ(a.parity(), Parity::odd);
    EXPECT_EQ(a[3], Rational(1, 6));
    EXPECT_EQ(a[5], Rational(3, 40));
}

TEST(PowerSeries, DerivativeIntegralShift) {
    const PowerSeries f = S({1, 2, 3, 4});
    EXPECT_EQ(f.derivative(), S({2, 6, 12}));
    EXPECT_EQ(f.integral(), S({0, 1, 1, 1, 1}));
    EXPECT_EQ(f.shifted(2), S({0, 0, 1, 2, 3, 4}));
    EXPECT_EQ(S({0, 0, 5, 6}).shifted(-2), S({5, 6}));
    EXPECT_THROW(f.shifted(-1), precondition_error);
}

// ---------------------------------------------------------------------------
// Randomized laws at a fixed seed

class SeriesLaws : public ::testing::Test {
protected:
    RandomSeries gen{20240601};
    static constexpr int cases = 1000;
};

TEST_F(SeriesLaws, RingLaws) {
    for (int i = 0; i < cases; ++i) {
        const PowerSeries f = gen.series(gen.integer(0, 20));
        const PowerSeries g = gen.series(gen.integer(0, 20));
        const PowerSeries h = gen.series(gen.integer(0, 20));
        ASSERT_EQ(series_mul(series_mul(f, g), h), series_mul(f, series_mul(g, h)));
        ASSERT_EQ(series_mul(f, g), series_mul(g, f));
        ASSERT_EQ(f + g, g + f);
        ASSERT_EQ((f + g) + h, f + (g + h));
        ASSERT_EQ(series_mul(f, g + h), series_mul(f, g) + series_mul(f, h));
    }
}

TEST_F(SeriesLaws, RevertComposeRoundTrip) {
    for (int i = 0; i < cases; ++i) {
        const PowerSeries f = gen.invertible_series(gen.integer(1, 15));
        const PowerSeries g = series_revert(f);
        ASSERT_EQ(series_compose(f, g), PowerSeries::identity(f.order()));
        ASSERT_EQ(series_compose(g, f), PowerSeries::identity(f.order()));
    }
}

TEST_F(SeriesLaws, LogAndSqrtOfSquares) {
    for (int i = 0; i < cases; ++i) {
        const PowerSeries f = gen.unit_series(gen.integer(0, 12));
        const PowerSeries ff = series_mul(f, f);
        ASSERT_EQ(series_log(ff), series_log(f).scaled(2));
        ASSERT_EQ(series_sqrt(ff), f);
    }
}

TEST_F(SeriesLaws, TruncationStability) {
    for (int i = 0; i < cases / 4; ++i) {
        const int N = gen.integer(1, 10);
        const PowerSeries hi = gen.unit_series(N + 5);
        const PowerSeries lo = hi.truncated(N);
        ASSERT_EQ(series_log(hi).truncated(N), series_log(lo));
        ASSERT_EQ(series_sqrt(hi).truncated(N), series_sqrt(lo));
        ASSERT_EQ(series_mul(hi, hi).truncated(N), series_mul(lo, lo));
        const PowerSeries inv = gen.invertible_series(N + 5);
        ASSERT_EQ(series_revert(inv).truncated(N), series_revert(inv.truncated(N)));
    }
}

TEST_F(SeriesLaws, ParityNeverViolated) {
    for (int i = 0; i < cases / 4; ++i) {
        const int N = gen.integer(2, 14);
        const PowerSeries e = gen.even_series(N), o = gen.odd_series(N);
        // Construction re-validates parity, so producing the value is the check.
        EXPECT_EQ(series_mul(e, o).parity(), Parity::odd);
        EXPECT_EQ(series_mul(o, o).parity(), Parity::even);
        std::vector<Rational> ev = e.coeffs();
        ev[0] = 1;
        const PowerSeries u(ev, Parity::even);
        EXPECT_EQ(series_log(u).parity(), Parity::even);
        EXPECT_EQ(series_sqrt(u).parity(), Parity::even);
        if (!o[1].is_zero()) EXPECT_EQ(series_revert(o).parity(), Parity::odd);
    }
}

TEST_F(SeriesLaws, CoefficientsStayCanonical) {
    for (int i = 0; i < cases / 4; ++i) {
        const PowerSeries f = gen.unit_series(10);
        for (const PowerSeries& s : {series_log(f), series_sqrt(f), series_div(gen.series(10), f)})
            for (const Rational& c : s.coeffs()) ASSERT_TRUE(c.is_canonical());
    }
}
