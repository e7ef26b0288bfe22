#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sincasym/power_series.hpp"
#include "sincasym/rational.hpp"

namespace sincasym {

/// Leading coefficient of the phase series does not match the declared scale: p1 * s^2 != 1.
struct scaling_mismatch : series_error {
    using series_error::series_error;
};

enum class Family { sinc, ball, ball_general };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::sinc: return "sinc";
        case Family::ball: return "ball";
        default: return "ball_general";
    }
}

inline Family parse_family(const std::string& s) {
    if (s == "sinc") return Family::sinc;
    if (s == "ball") return Family::ball;
    if (s == "ball_general") return Family::ball_general;
    throw std::invalid_argument("unknown family '" + s + "' (expected sinc, ball or ball_general)");
}

/// Exact coefficients of one asymptotic expansion plus the parameters they belong to.
///
/// sinc:          I_n ~ sqrt(3 pi / 2n) * sum c_k n^-k,                   c_k = b_k (1/2)_k
/// ball:          L(nu;n) ~ 2^(2nu-1)(1+nu)^nu Gamma(nu) sum (-1)^k c_k n^-(k+nu),   c_k = b_k (nu)_k
/// ball_general:  L(nu,a;n) ~ 2^(a-1)(1+nu)^(a/2) Gamma(a/2) sum (-1)^k d_k n^-(k+a/2), d_k = b_k (a/2)_k
///
/// For the ball families the alternating sign is carried by the evaluator,
/// so b and c here hold the sign-stripped values.
struct CoeffTable {
    Family family = Family::sinc;
    std::optional<Rational> nu;
    std::optional<Rational> a_exp;
    Rational scale_sq{6};
    std::vector<Rational> b;
    std::vector<Rational> c;
    int order = 0;
    std::string radius_note;
};

namespace detail {

inline void require_order(int K, int min, const char* what) {
    if (K < min) throw precondition_error(std::string(what) + ": order must be at least " + std::to_string(min));
}

inline void require_positive(const Rational& r, const char* what) {
    if (r.sign() <= 0) throw precondition_error(std::string(what) + " must be positive");
}

/// sigma(x) = sum_k (-x^2/4)^k / (k! (nu+1)_k) through x^(2K).
inline PowerSeries bessel_ratio_series(const Rational& nu, int K) {
    std::vector<Rational> v(static_cast<std::size_t>(2 * K) + 1);
    Rational term(1);
    v[0] = term;
    for (int k = 1; k <= K; ++k) {
        term *= Rational(-1, 4);
        term /= Rational(k) * (nu + Rational(k));
        v[static_cast<std::size_t>(2 * k)] = term;
    }
    return PowerSeries(std::move(v), Parity::even);
}

/// Given tau^2 as an even series in x and x = s*u with s^2 = scale_sq, returns
/// v(tau) = u(tau)/tau as an even series in tau through tau^(2K).
inline PowerSeries normalized_inverse(const PowerSeries& tau2, const Rational& scale_sq, int K) {
    if (tau2.parity() != Parity::even) throw precondition_error("phase series must be declared even");
    if (!tau2[0].is_zero()) throw precondition_error("phase series must vanish at the origin");
    if (tau2.order() < 2 * K + 2)
        throw precondition_error("phase series order " + std::to_string(tau2.order()) + " too low for K = " +
                                 std::to_string(K) + " (needs " + std::to_string(2 * K + 2) + ")");
    if (tau2[2] * scale_sq != Rational(1))
        throw scaling_mismatch("leading phase coefficient " + tau2[2].str() + " times scale " + scale_sq.str() +
                               " is not 1");
    const int n = 2 * K + 2;
    std::vector<Rational> su(static_cast<std::size_t>(n) + 1);
    Rational s_pow(1);
    for (int j = 0; 2 * j <= n; ++j) {
        su[static_cast<std::size_t>(2 * j)] = tau2[2 * j] * s_pow;
        s_pow *= scale_sq;
    }
    const PowerSeries tau2_u(std::move(su), Parity::even);
    const PowerSeries w = series_sqrt(tau2_u.shifted(-2));  // tau/u, order 2K
    const PowerSeries tau_u = w.shifted(1);                  // odd, order 2K+1
    const PowerSeries u_tau = series_revert(tau_u);
    return u_tau.shifted(-1);                                // even, order 2K
}

/// beta_k with x^(a-1) dx/dtau = s^a tau^(a-1) sum beta_k tau^(2k).
///
/// From x = s*tau*v(tau): x^(a-1) dx/dtau = (s^a/a) d/dtau (tau^a v^a)
///                                        = s^a tau^(a-1) (W + (tau/a) W'),  W = v^a,
/// so beta_k = W_(2k) (1 + 2k/a).
inline std::vector<Rational> weighted_amplitude(const PowerSeries& tau2, const Rational& scale_sq,
                                                const Rational& a_exp, int K) {
    require_positive(a_exp, "exponent a");
    const PowerSeries v = normalized_inverse(tau2, scale_sq, K);
    const PowerSeries W = a_exp == Rational(1) ? v : series_pow(v, a_exp);
    std::vector<Rational> beta(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k)
        beta[static_cast<std::size_t>(k)] = W[2 * k] * (Rational(1) + Rational(2 * k) / a_exp);
    return beta;
}

}  // namespace detail

/// log(x / sin x) as an exact even series through x^(2K).
inline PowerSeries sinc_tau2_series(int K) {
    detail::require_order(K, 2, "sinc_tau2_series");
    const int n = 2 * K + 1;
    std::vector<Rational> sin_coeffs(static_cast<std::size_t>(n) + 1);
    Rational term(1);
    for (int k = 1; k <= n; k += 2) {
        if (k > 1) term /= Rational(-(k - 1) * k);
        sin_coeffs[static_cast<std::size_t>(k)] = term;
    }
    const PowerSeries sin_x(std::move(sin_coeffs), Parity::odd);
    const PowerSeries x_over_sin = series_div(PowerSeries::identity(n), sin_x);
    return series_log(x_over_sin);
}

/// -log sigma(x) with sigma(x) = Gamma(1+nu) J_nu(x) / (x/2)^nu, exact through x^(2K).
inline PowerSeries ball_tau2_series(const Rational& nu, int K) {
    detail::require_order(K, 2, "ball_tau2_series");
    detail::require_positive(nu, "nu");
    return -series_log(detail::bessel_ratio_series(nu, K));
}

/// b_k with dx/dtau = s * sum b_k tau^(2k), where tau^2 = phase(x) and s^2 = scale_sq.
inline std::vector<Rational> revert_scaled(const PowerSeries& tau2, const Rational& scale_sq, int K) {
    return detail::weighted_amplitude(tau2, scale_sq, Rational(1), K);
}

inline CoeffTable coeffs_In(int K = 12) {
    detail::require_order(K, 0, "coeffs_In");
    CoeffTable t;
    t.family = Family::sinc;
    t.scale_sq = Rational(6);
    t.order = K;
    t.b = revert_scaled(sinc_tau2_series(std::max(K + 1, 2)), t.scale_sq, K);
    t.c.resize(t.b.size());
    for (int k = 0; k <= K; ++k)
        t.c[static_cast<std::size_t>(k)] = t.b[static_cast<std::size_t>(k)] * pochhammer(Rational(1, 2), k);
    t.radius_note =
        "dx/dtau converges for |tau| < tau0 = |log(3*pi/2) + i*pi|^(1/2) ~ 1.8717 (image of x = 3*pi/2); "
        "the asymptotic series in 1/n is divergent";
    return t;
}

namespace detail {

inline CoeffTable ball_table(Family family, const Rational& nu, const Rational& a_exp, int K) {
    require_order(K, 0, "ball coefficients");
    require_positive(nu, "nu");
    CoeffTable t;
    t.family = family;
    t.nu = nu;
    if (family == Family::ball_general) t.a_exp = a_exp;
    t.scale_sq = Rational(4) * (Rational(1) + nu);
    t.order = K;
    const std::vector<Rational> beta = weighted_amplitude(ball_tau2_series(nu, std::max(K + 1, 2)), t.scale_sq, a_exp, K);
    const Rational shift = family == Family::ball ? nu : a_exp / Rational(2);
    t.b.resize(beta.size());
    t.c.resize(beta.size());
    for (int k = 0; k <= K; ++k) {
        const auto i = static_cast<std::size_t>(k);
        t.b[i] = k % 2 == 0 ? beta[i] : -beta[i];
        t.c[i] = t.b[i] * pochhammer(shift, static_cast<unsigned>(k));
    }
    t.radius_note =
        "x^(a-1) dx/dtau converges for tau < tau0 with tau0^2 = log(1/sigma(j'_{nu,2})) "
        "(image of the second zero of J_nu'); the asymptotic series in 1/n is divergent";
    return t;
}

}  // namespace detail

inline CoeffTable coeffs_ball(const Rational& nu, int K = 6) {
    return detail::ball_table(Family::ball, nu, Rational(2) * nu, K);
}

inline CoeffTable coeffs_ball_general(const Rational& nu, const Rational& a_exp, int K = 6) {
    detail::require_positive(a_exp, "exponent a");
    return detail::ball_table(Family::ball_general, nu, a_exp, K);
}

}  // namespace sincasym
