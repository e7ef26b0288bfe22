#include <gtest/gtest.h>

#include <numeric>

#include "sincasym/closed_forms.hpp"
#include "sincasym/coeffgen.hpp"
#include "sincasym/random_series.hpp"
#include "sincasym/reference.hpp"

using namespace sincasym;

namespace {

Rational R(std::string_view s) { return Rational::parse(s); }

/// tau^2 for x / sin x computed independently: sum over Bernoulli-type
/// coefficients log(x/sin x) = sum_{k>=1} (-1)^(k+1) 2^(2k-1) B_2k x^(2k) / (k (2k)!).
Rational log_x_over_sin(int k) {
    // Bernoulli numbers B_2..B_10
    const Rational B[] = {R("1/6"), R("-1/30"), R("1/42"), R("-1/30"), R("5/66")};
    Rational fact(1);
    for (int i = 1; i <= 2 * k; ++i) fact *= Rational(i);
    const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
    return sign * closed_form::power(Rational(2), 2 * k - 1) * B[k - 1] / (Rational(k) * fact);
}

}  // namespace

TEST(Coeffgen, SincTau2Series) {
    const PowerSeries t = sinc_tau2_series(6);
    EXPECT_EQ(t.parity(), Parity::even);
    EXPECT_TRUE(t[0].is_zero());
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(t[2 * k], log_x_over_sin(k)) << "k=" << k;
}

TEST(Coeffgen, BallTau2Series) {
    const PowerSeries t = ball_tau2_series(Rational(1), 4);
    EXPECT_EQ(t[2], R("1/8"));
    EXPECT_EQ(t[4], R("1/384"));
    // leading coefficient is 1 / (4 (1 + nu)) for every nu
    for (const Rational nu : {R("1/2"), R("4/3"), R("7")}) {
        EXPECT_EQ(ball_tau2_series(nu, 3)[2], Rational(1) / (Rational(4) * (Rational(1) + nu)));
    }
    // nu = 1/2: sigma = sin x / x
    EXPECT_EQ(ball_tau2_series(R("1/2"), 5), sinc_tau2_series(5));
}

TEST(Coeffgen, SincCoefficientsMatchKnownValues) {
    const CoeffTable t = coeffs_In(12);
    ASSERT_EQ(t.c.size(), 13u);
    EXPECT_EQ(t.order, 12);
    EXPECT_EQ(t.family, Family::sinc);
    EXPECT_EQ(t.scale_sq, Rational(6));
    EXPECT_EQ(t.b[0], Rational(1));
    EXPECT_EQ(t.b[1], R("-3/10"));
    EXPECT_EQ(t.b[2], R("-13/840"));
    EXPECT_EQ(t.b[6], R("-124996631/1629936000000"));
    EXPECT_EQ(t.c[0], Rational(1));
    EXPECT_EQ(t.c[1], R("-3/20"));
    EXPECT_EQ(t.c[2], R("-13/1120"));
    EXPECT_EQ(t.c[3], R("27/3200"));
    EXPECT_EQ(t.c[4], R("52791/3942400"));
    for (int k = 0; k <= 12; ++k) EXPECT_EQ(t.c[static_cast<std::size_t>(k)], R(reference::sinc_c[static_cast<std::size_t>(k)]));
    for (int k = 0; k <= 12; ++k)
        EXPECT_EQ(t.c[static_cast<std::size_t>(k)], t.b[static_cast<std::size_t>(k)] * pochhammer(R("1/2"), k));
    EXPECT_FALSE(t.radius_note.empty());
}

TEST(Coeffgen, SincB4AgreesWithInverseSeries) {
    // x / sqrt 6 = sum b_k tau^(2k+1) / (2k+1)
    const CoeffTable t = coeffs_In(5);
    for (int k = 0; k <= 5; ++k)
        EXPECT_EQ(t.b[static_cast<std::size_t>(k)] / Rational(2 * k + 1), R(reference::sinc_x_of_tau[static_cast<std::size_t>(k)]));
    EXPECT_EQ(t.b[4], R("17597/8624000"));
}

TEST(Coeffgen, ReversionMethodsGiveSameTable) {
    const PowerSeries tau2 = sinc_tau2_series(9);
    const std::vector<Rational> lag = revert_scaled(tau2, Rational(6), 8);
    EXPECT_EQ(lag, coeffs_In(8).b);
}

TEST(Coeffgen, OrderStability) {
    const CoeffTable lo = coeffs_In(6), hi = coeffs_In(12);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(lo.c[static_cast<std::size_t>(k)], hi.c[static_cast<std::size_t>(k)]);
    const CoeffTable blo = coeffs_ball(R("4/3"), 3), bhi = coeffs_ball(R("4/3"), 6);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(blo.c[static_cast<std::size_t>(k)], bhi.c[static_cast<std::size_t>(k)]);
}

TEST(Coeffgen, BallAtHalfIsSinc) {
    const CoeffTable ball = coeffs_ball(R("1/2"), 6);
    const CoeffTable sinc = coeffs_In(6);
    EXPECT_EQ(ball.scale_sq, Rational(6));
    for (int k = 0; k <= 6; ++k) {
        const auto i = static_cast<std::size_t>(k);
        EXPECT_EQ(ball.c[i].abs(), sinc.c[i].abs());
        EXPECT_EQ(k % 2 == 0 ? ball.c[i] : -ball.c[i], sinc.c[i]);
    }
}

TEST(Coeffgen, BallLowOrderForms) {
    for (const Rational nu : {R("1/2"), R("1"), R("4/3"), R("2"), R("5/7"), R("9")}) {
        const CoeffTable t = coeffs_ball(nu, 2);
        EXPECT_EQ(t.scale_sq, Rational(4) * (Rational(1) + nu));
        EXPECT_EQ(t.c[1], nu * (Rational(1) + nu) / (Rational(2) * (Rational(2) + nu))) << nu.str();
    }
    EXPECT_EQ(coeffs_ball(Rational(2), 2).c[2], R("11/80"));
}

TEST(Coeffgen, BallClosedFormsAtManyNu) {
    int points = 0;
    for (int p = 1; p <= 9; ++p)
        for (int q : {1, 2, 5}) {
            if (std::gcd(p, q) != 1) continue;
            const Rational nu(p, q);
            const CoeffTable t = coeffs_ball(nu, 6);
            for (int k = 0; k <= 6; ++k) EXPECT_EQ(t.c[static_cast<std::size_t>(k)], closed_form::ball_c(k, nu)) << nu.str() << " k=" << k;
            ++points;
        }
    EXPECT_GE(points, 14);
}

TEST(Coeffgen, BallGeneralLowOrderForms) {
    const std::pair<Rational, Rational> pairs[] = {{R("4/3"), R("8/3")}, {R("4/3"), R("2/3")}, {R("4/3"), R("10/3")},
                                                   {R("1/2"), R("1")},   {R("3"), R("1/5")},   {R("7/4"), R("9")}};
    for (const auto& [nu, a] : pairs) {
        const CoeffTable t = coeffs_ball_general(nu, a, 4);
        ASSERT_TRUE(t.a_exp.has_value());
        EXPECT_EQ(t.c[1], pochhammer(a / Rational(2), 2) / (Rational(2) * (Rational(2) + nu)));
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(t.c[static_cast<std::size_t>(k)], closed_form::ball_d(k, nu, a)) << k;
    }
}

TEST(Coeffgen, BallGeneralAtTwoNuIsBall) {
    RandomSeries gen(99);
    for (int i = 0; i < 5; ++i) {
        const Rational nu = gen.positive_rational(8);
        EXPECT_EQ(coeffs_ball_general(nu, Rational(2) * nu, 4).c, coeffs_ball(nu, 4).c) << nu.str();
    }
}

TEST(Coeffgen, ScalingMismatch) {
    EXPECT_THROW(revert_scaled(sinc_tau2_series(5), Rational(4), 4), scaling_mismatch);
    EXPECT_NO_THROW(revert_scaled(sinc_tau2_series(5), Rational(6), 4));
}

TEST(Coeffgen, Preconditions) {
    EXPECT_THROW(coeffs_In(-1), precondition_error);
    EXPECT_THROW(coeffs_ball(Rational(0)), precondition_error);
    EXPECT_THROW(coeffs_ball(R("-1/2")), precondition_error);
    EXPECT_THROW(coeffs_ball_general(Rational(1), Rational(0)), precondition_error);
    EXPECT_THROW(revert_scaled(sinc_tau2_series(3), Rational(6), 4), precondition_error);
    EXPECT_THROW(parse_family("bessel"), std::invalid_argument);
    EXPECT_EQ(parse_family("ball_general"), Family::ball_general);
}
