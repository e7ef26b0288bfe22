#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "sincasym/bessel.hpp"
#include "sincasym/coeffgen.hpp"
#include "sincasym/rational.hpp"
#include "sincasym/real.hpp"

namespace sincasym {

struct eval_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A truncated asymptotic series evaluated at one n.
template <class Real>
struct AsymValue {
    Real value{0};
    int k_used = 0;
    /// prefactor * |c_{k_used+1}| n^-(k_used+1). When the table stops at
    /// k_used, the last included term is reported instead and omitted_known is false.
    Real first_omitted{0};
    bool omitted_known = true;
    Real prefactor{0};
    bool validity_warning = false;
};

/// Asymptotic-term magnitudes are compared as |c_k| n^-k.
inline constexpr std::optional<int> auto_truncation = std::nullopt;

/// Smallest k minimizing |c_k| n^-k over the table; ties go to the smaller k.
template <class Real = double>
int optimal_truncation(const CoeffTable& table, const Real& n) {
    using std::abs;
    using std::pow;
    if (!(n > 0)) throw eval_error("optimal_truncation needs n > 0");
    int best = 0;
    Real best_mag = abs(to_real<Real>(table.c.at(0)));
    Real npow(1);
    for (int k = 1; k <= table.order; ++k) {
        npow /= n;
        const Real mag = abs(to_real<Real>(table.c[static_cast<std::size_t>(k)])) * npow;
        if (mag < best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    return best;
}

namespace detail {

template <class Real>
int resolve_k(const CoeffTable& table, const Real& n, std::optional<int> k_max) {
    if (!k_max) return optimal_truncation<Real>(table, n);
    if (*k_max < 0) throw eval_error("k_max must be nonnegative");
    if (*k_max > table.order)
        throw eval_error("k_max " + std::to_string(*k_max) + " exceeds table order " + std::to_string(table.order));
    return *k_max;
}

/// prefactor * sum_{k<=K} s_k c_k n^-k with s_k = 1 or (-1)^k.
template <class Real>
AsymValue<Real> sum_series(const CoeffTable& table, const Real& n, const Real& prefactor, bool alternating, int K) {
    using std::abs;
    AsymValue<Real> out;
    out.k_used = K;
    out.prefactor = prefactor;
    Real sum(0), npow(1), last(0);
    for (int k = 0; k <= K; ++k) {
        Real term = to_real<Real>(table.c[static_cast<std::size_t>(k)]) * npow;
        if (alternating && k % 2 == 1) term = -term;
        sum += term;
        last = term;
        npow /= n;
    }
    out.value = prefactor * sum;
    if (K < table.order) {
        out.first_omitted = abs(prefactor * to_real<Real>(table.c[static_cast<std::size_t>(K + 1)]) * npow);
    } else {
        out.first_omitted = abs(prefactor * last);
        out.omitted_known = false;
    }
    return out;
}

}  // namespace detail

/// I_n ~ sqrt(3 pi / 2n) sum_k c_k n^-k.
template <class Real = double>
AsymValue<Real> eval_In(const Real& n, const CoeffTable& table, std::optional<int> k_max) {
    using std::sqrt;
    if (table.family != Family::sinc) throw eval_error("eval_In needs a sinc coefficient table");
    if (!(n > 0)) throw eval_error("eval_In needs n > 0");
    const int K = detail::resolve_k(table, n, k_max);
    const Real prefactor = sqrt(3 * pi<Real>() / (2 * n));
    return detail::sum_series(table, n, prefactor, false, K);
}

/// J_n = 2 I_{2n}.
template <class Real = double>
AsymValue<Real> eval_Jn(const Real& n, const CoeffTable& table, std::optional<int> k_max) {
    AsymValue<Real> v = eval_In<Real>(2 * n, table, k_max);
    v.value *= 2;
    v.first_omitted *= 2;
    v.prefactor *= 2;
    return v;
}

/// sum_{k>=1} k^m e^{-k pi a} in closed form, m = 1, 2, 3.
template <class Real = double>
Real sigma_closed(int m, const Real& a) {
    using std::cosh;
    using std::sinh;
    if (!(a > 0)) throw eval_error("sigma_closed needs a > 0");
    const Real h = pi<Real>() * a / 2;
    const Real sh = sinh(h);
    switch (m) {
        case 1: return 1 / (4 * sh * sh);
        case 2: return cosh(h) / (4 * sh * sh * sh);
        case 3: return (2 + cosh(2 * h)) / (8 * sh * sh * sh * sh);
        default: throw eval_error("sigma_closed supports m = 1, 2, 3");
    }
}

/// Derivatives of psi(x) = -log(1 - sin^2 x / x^2) at the peak x = k pi:
/// psi'' = 2/X^2, psi''' = -12/X^3, psi'''' = 84/X^4 - 8/X^2 with X = k pi.
/// The constant 84 is the one the closed form of peak_c2 requires.
template <class Real>
struct PeakPhase {
    Real d2, d3, d4;
};

template <class Real = double>
PeakPhase<Real> peak_phase_derivatives(int k) {
    if (k < 1) throw eval_error("peak index must be >= 1");
    const Real x = pi<Real>() * Real(k);
    const Real x2 = x * x;
    return {2 / x2, -12 / (x2 * x), 84 / (x2 * x2) - 8 / x2};
}

/// Two-term saddle correction for int e^{-n psi} f at an interior minimum of psi:
/// c2 = (1/(2 psi'')) {2 f''/f - 2 (psi'''/psi'')(f'/f) + 5 psi'''^2 / (6 psi''^2) - psi''''/(2 psi'')}.
template <class Real = double>
Real saddle_c2(const Real& psi2, const Real& psi3, const Real& psi4, const Real& f, const Real& f1, const Real& f2) {
    return (2 * f2 / f - 2 * (psi3 / psi2) * (f1 / f) + 5 * psi3 * psi3 / (6 * psi2 * psi2) - psi4 / (2 * psi2)) /
           (2 * psi2);
}

/// c2 at the k-th peak of K_n with f = e^{-ax}: (2(1+a^2)(k pi)^2 - 12 a k pi + 9) / 4.
template <class Real = double>
Real peak_c2(int k, const Real& a) {
    if (k < 1) throw eval_error("peak index must be >= 1");
    if (!(a > 0)) throw eval_error("peak_c2 needs a > 0");
    const Real kp = pi<Real>() * Real(k);
    return (2 * (1 + a * a) * kp * kp - 12 * a * kp + 9) / 4;
}

template <class Real>
struct PeakEstimate {
    int k;
    Real contribution;
    Real c2;
};

/// Per-peak two-term contributions k pi sqrt(pi/n) (1 + c2/n) e^{-k pi a}, k = 1..count.
template <class Real = double>
std::vector<PeakEstimate<Real>> peak_estimates(const Real& n, const Real& a, int count) {
    using std::exp;
    using std::sqrt;
    if (!(n > 0) || !(a > 0)) throw eval_error("peak_estimates needs n > 0 and a > 0");
    std::vector<PeakEstimate<Real>> out;
    for (int k = 1; k <= count; ++k) {
        const Real kp = pi<Real>() * Real(k);
        const Real c2 = peak_c2<Real>(k, a);
        out.push_back({k, kp * sqrt(pi<Real>() / n) * (1 + c2 / n) * exp(-kp * a), c2});
    }
    return out;
}

enum class T1Variant { derived, printed };

/// T_1 = 9 - 12 pi a coth(pi a/2) + pi^2 (1+a^2) (2 + cosh X) / sinh^2(pi a/2)
/// with X = pi a (derived, consistent with the sigma_3 closed form) or X = pi a/2 (printed).
template <class Real = double>
Real kn_T1(const Real& a, T1Variant variant) {
    using std::cosh;
    using std::sinh;
    using std::tanh;
    const Real p = pi<Real>();
    const Real h = p * a / 2;
    const Real sh = sinh(h);
    const Real ch_arg = variant == T1Variant::derived ? p * a : h;
    return 9 - 12 * p * a / tanh(h) + p * p * (1 + a * a) * (2 + cosh(ch_arg)) / (sh * sh);
}

/// K_n ~ pi^(3/2) / (4 sqrt n) (1 + T_1/(8n)) cosech^2(pi a/2).
template <class Real = double>
AsymValue<Real> eval_Kn(const Real& n, const Real& a, T1Variant variant = T1Variant::derived) {
    using std::abs;
    using std::sinh;
    using std::sqrt;
    if (!(n > 0) || !(a > 0)) throw eval_error("eval_Kn needs n > 0 and a > 0");
    const Real p = pi<Real>();
    const Real sh = sinh(p * a / 2);
    AsymValue<Real> out;
    out.prefactor = p * sqrt(p) / (4 * sqrt(n) * sh * sh);
    const Real corr = kn_T1<Real>(a, variant) / (8 * n);
    out.value = out.prefactor * (1 + corr);
    out.k_used = 1;
    out.first_omitted = abs(out.prefactor * corr);
    out.omitted_known = false;
    out.validity_warning = !(a > 1 / sqrt(2 * n));
    return out;
}

/// Leading-order K-hat_n ~ pi^(3/2) cosh(pi a/2) / (4 sqrt n sinh^2(pi a/2)).
template <class Real = double>
Real eval_Khat(const Real& n, const Real& a) {
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    if (!(n > 0) || !(a > 0)) throw eval_error("eval_Khat needs n > 0 and a > 0");
    const Real p = pi<Real>();
    const Real h = p * a / 2;
    const Real sh = sinh(h);
    return p * sqrt(p) * cosh(h) / (4 * sqrt(n) * sh * sh);
}

/// L(nu;n) ~ 2^(2nu-1) (1+nu)^nu Gamma(nu) sum_k (-1)^k c_k n^-(k+nu).
template <class Real = double>
AsymValue<Real> eval_ball(const Rational& nu, const Real& n, const CoeffTable& table, std::optional<int> k_max) {
    using std::pow;
    if (table.family != Family::ball || !table.nu || *table.nu != nu)
        throw eval_error("eval_ball needs a ball coefficient table for nu = " + nu.str());
    if (!(n > 0)) throw eval_error("eval_ball needs n > 0");
    const Real v = to_real<Real>(nu);
    const int K = detail::resolve_k(table, n, k_max);
    const Real prefactor = pow(Real(2), 2 * v - 1) * pow(1 + v, v) * boost::math::tgamma(v) * pow(n, -v);
    return detail::sum_series(table, n, prefactor, true, K);
}

/// L(nu,a;n) ~ 2^(a-1) (1+nu)^(a/2) Gamma(a/2) sum_k (-1)^k d_k n^-(k+a/2).
template <class Real = double>
AsymValue<Real> eval_ball_general(const Rational& nu, const Rational& a_exp, const Real& n, const CoeffTable& table,
                                  std::optional<int> k_max) {
    using std::pow;
    if (table.family != Family::ball_general || !table.nu || *table.nu != nu || !table.a_exp ||
        *table.a_exp != a_exp)
        throw eval_error("eval_ball_general needs a ball_general table for nu = " + nu.str() + ", a = " + a_exp.str());
    const Real v = to_real<Real>(nu);
    const Real a = to_real<Real>(a_exp);
    if (!(n * (v + Real(0.5)) > a)) throw eval_error("eval_ball_general needs n (nu + 1/2) > a");
    const int K = detail::resolve_k(table, n, k_max);
    const Real prefactor = pow(Real(2), a - 1) * pow(1 + v, a / 2) * boost::math::tgamma(a / 2) * pow(n, -a / 2);
    return detail::sum_series(table, n, prefactor, true, K);
}

/// xi(nu) = 2^nu Gamma(1+nu) / j_{nu,1}^nu.
template <class Real = double>
Real xi(const Real& nu) {
    using std::pow;
    if (!(nu > 0)) throw eval_error("xi needs nu > 0");
    const Real j = first_bessel_zero<Real>(nu);
    return pow(Real(2), nu) * boost::math::tgamma(1 + nu) / pow(j, nu);
}

/// pi^(1-n) / (n-1): bound on |int_pi^inf (sin x/x)^n dx|.
template <class Real = double>
Real tail_bound_sinc(const Real& n) {
    using std::pow;
    if (!(n > 1)) throw eval_error("sinc tail bound needs n > 1");
    return pow(pi<Real>(), 1 - n) / (n - 1);
}

/// xi(nu)^n j_{nu,1}^2 / ((n-2) nu): bound on the Ball-integral tail beyond j_{nu,1}.
template <class Real = double>
Real tail_bound_ball(const Real& nu, const Real& n) {
    using std::pow;
    if (!(n > 2)) throw eval_error("ball tail bound needs n > 2");
    if (!(nu > 0)) throw eval_error("ball tail bound needs nu > 0");
    const Real j = first_bessel_zero<Real>(nu);
    return pow(xi<Real>(nu), n) * j * j / ((n - 2) * nu);
}

}  // namespace sincasym
