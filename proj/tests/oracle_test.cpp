#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sincasym/oracle.hpp"
#include "sincasym/reference.hpp"

using namespace sincasym;

namespace {

constexpr double pi_d = std::numbers::pi;

OracleOptions<double> tol(double t) {
    OracleOptions<double> o;
    o.tol = t;
    return o;
}

}  // namespace

TEST(OracleIn, ClosedFormValues) {
    const auto o = tol(1e-13);
    EXPECT_NEAR(integrate_In<double>(2.0, o).value, pi_d / 2, 1e-12);
    EXPECT_NEAR(integrate_In<double>(3.0, o).value, 3 * pi_d / 8, 1e-12);
    EXPECT_NEAR(integrate_In<double>(4.0, o).value, pi_d / 3, 1e-12);
    EXPECT_NEAR(integrate_In<double>(5.0, o).value, 115 * pi_d / 384, 1e-12);
    EXPECT_NEAR(integrate_In<double>(6.0, o).value, 11 * pi_d / 40, 1e-12);
}

TEST(OracleIn, ToleranceIsHonest) {
    for (int n : {2, 3, 7, 12}) {
        const double exact_guess = integrate_In<double>(double(n), tol(1e-14)).value;
        for (double t : {1e-6, 1e-9}) {
            const auto r = integrate_In<double>(double(n), tol(t));
            EXPECT_TRUE(r.converged);
            EXPECT_LE(std::abs(r.value - exact_guess), r.total_error() + 1e-14) << n << " " << t;
            EXPECT_LE(r.total_error(), t * std::abs(r.value) * 1.0000001);
        }
    }
}

TEST(OracleIn, RuleOrderDoesNotMatter) {
    OracleOptions<double> a = tol(1e-13), b = tol(1e-13);
    a.gauss_order = 15;
    b.gauss_order = 30;
    for (double n : {10.0, 37.0, 200.0}) EXPECT_NEAR(integrate_In(n, a).value / integrate_In(n, b).value, 1.0, 1e-12);
}

TEST(OracleIn, TailIsSmallerThanBound) {
    OracleOptions<quad> o;
    o.tol = quad(1e-20);
    for (int n : {4, 8, 20}) {
        const quad tail = integrate_In<quad>(quad(n), o, pi<quad>()).value;
        EXPECT_LE(abs(tail), pow(pi<quad>(), quad(1 - n)) / (n - 1)) << n;
    }
}

TEST(OracleIn, LowerLimitIsAdditive) {
    OracleOptions<quad> o;
    o.tol = quad(1e-25);
    const quad whole = integrate_In<quad>(quad(9), o).value;
    const quad tail = integrate_In<quad>(quad(9), o, quad(2.5)).value;
    QuadOptions<quad> qo;
    qo.rel_tol = quad(1e-28);
    const quad head = integrate_adaptive<quad>(SincPowerIntegrand<quad>{quad(9)}, quad(0), quad(2.5), qo).value;
    EXPECT_LT(abs(whole - head - tail) / whole, quad(1e-14));
}

TEST(OracleIn, NonIntegerPowerNeedsAbs) {
    EXPECT_THROW(integrate_In<double>(5.5, tol(1e-10)), oracle_error);
    OracleOptions<double> o = tol(1e-8);
    o.abs_power = true;
    const auto r = integrate_In<double>(5.5, o);
    EXPECT_TRUE(r.converged);
    EXPECT_GT(r.value, integrate_In<double>(6.0, tol(1e-10)).value);
    EXPECT_LT(r.value, integrate_In<double>(5.0, tol(1e-10)).value);
    // the X^(1-n) envelope cannot certify n = 2.5 below the x cap
    EXPECT_FALSE(integrate_In<double>(2.5, o).converged);
}

TEST(OracleIn, Preconditions) {
    EXPECT_THROW(integrate_In<double>(1.0, tol(1e-10)), oracle_error);
    EXPECT_THROW(integrate_In<double>(4.0, tol(1e-16)), oracle_error);
}

TEST(OracleJn, IsTwiceI2n) {
    const auto o = tol(1e-13);
    for (double n : {2.0, 5.0, 30.0}) EXPECT_NEAR(integrate_Jn(n, o).value / (2 * integrate_In(2 * n, o).value), 1.0, 1e-12);
}

TEST(OracleKn, PrintedQuadratureColumn) {
    const auto o = tol(1e-11);
    int matched = 0;
    for (const auto& row : reference::kn_table) {
        const auto r = integrate_Kn<double>(row.n, row.a, o);
        EXPECT_TRUE(r.converged);
        // one printed cell carries a typo in its last digits
        if (std::abs(r.value - row.quadrature) < 5e-9) ++matched;
        EXPECT_NEAR(r.value, row.quadrature, 2e-7) << row.n << " " << row.a;
    }
    EXPECT_GE(matched, 23);
}

TEST(OracleKn, IndependentQuadPrecisionCheck) {
    OracleOptions<quad> oq;
    oq.tol = quad(1e-25);
    const double q = static_cast<double>(integrate_Kn<quad>(quad(1000), quad(0.5), oq).value);
    EXPECT_NEAR(q, integrate_Kn<double>(1000.0, 0.5, tol(1e-12)).value, 1e-12);
    EXPECT_NEAR(q, 0.05878343327345815, 1e-14);
}

TEST(OracleKhat, MonotoneInAAndN) {
    const auto o = tol(1e-10);
    double prev = 1e300;
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
        const double v = integrate_Khat(500.0, a, o).value;
        EXPECT_LT(v, prev);
        prev = v;
    }
    prev = 1e300;
    for (double n : {100.0, 400.0, 1600.0}) {
        const double v = integrate_Khat(n, 1.0, o).value;
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(OracleKhat, LowerLimitInsensitiveForLargeN) {
    const auto o = tol(1e-12);
    const double base = integrate_Khat(2000.0, 1.0, o).value;
    EXPECT_NEAR(integrate_Khat(2000.0, 1.0, o, 0.8).value / base, 1.0, 1e-10);
    EXPECT_NEAR(integrate_Khat(2000.0, 1.0, o, 1.2).value / base, 1.0, 1e-10);
    EXPECT_THROW(integrate_Khat(2000.0, 1.0, o, 0.5), oracle_error);
}

TEST(OracleBall, HalfOrderIsSinc) {
    OracleOptions<quad> o;
    o.tol = quad(1e-24);
    for (int n : {20, 40}) {
        const quad ball = integrate_ball<quad>(quad(0.5), quad(1), quad(n), o).value;
        const quad sinc = integrate_In<quad>(quad(n), o).value;
        EXPECT_LT(abs(ball / sinc - 1), quad(1e-20)) << n;
    }
}

TEST(OracleBall, TailMajorantDominatesAndDecays) {
    const double X = 30;
    const double m1 = ball_tail_majorant(1.0, 2.0, 20.0, X);
    const double m2 = ball_tail_majorant(1.0, 2.0, 20.0, 2 * X);
    EXPECT_GT(m1, 0);
    EXPECT_LT(m2, m1);
    QuadOptions<double> qo;
    qo.rel_tol = 1e-10;
    const double piece = integrate_adaptive<double>(BallIntegrand<double>{1.0, 2.0, 20.0}, X, 2 * X, qo).value;
    EXPECT_LE(piece, m1);
}

TEST(OracleBall, Determinism) {
    OracleOptions<quad> o;
    o.tol = quad(1e-20);
    const auto a = integrate_ball<quad>(quad(4) / 3, quad(2) / 3, quad(100), o);
    const auto b = integrate_ball<quad>(quad(4) / 3, quad(2) / 3, quad(100), o);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.panels, b.panels);
}
