#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "sincasym/bessel.hpp"
#include "sincasym/quadrature.hpp"
#include "sincasym/real.hpp"

// Independent numerical evaluation of the sinc-power, K_n, K-hat_n and Ball
// integrals. Nothing here uses the asymptotic coefficients.

namespace sincasym {

struct oracle_error : std::domain_error {
    using std::domain_error::domain_error;
};

template <class Real>
struct OracleOptions {
    Real tol = Real(1e-12);        // relative tolerance on quadrature error + tail certificate
    int gauss_order = 20;
    std::size_t max_panels = 400000;
    Real x_cap = Real(4000);       // integration never extends past this point
    bool abs_power = false;        // integrate |sin x / x|^n (needed for non-integer n)
};

// ---------------------------------------------------------------------------
// Integrands

template <class Real>
struct SincPowerIntegrand {
    Real n;
    bool abs_power = false;
    Real operator()(const Real& x) const {
        using std::abs;
        using std::pow;
        using std::sin;
        const Real s = x == 0 ? Real(1) : sin(x) / x;
        return pow(abs_power ? Real(abs(s)) : s, n);
    }
};

/// ((1 - cos x) / (x^2/2))^n, with 1 - cos x evaluated as 2 sin^2(x/2).
template <class Real>
struct CosinePowerIntegrand {
    Real n;
    Real operator()(const Real& x) const {
        using std::pow;
        using std::sin;
        if (x == 0) return Real(1);
        const Real h = sin(x / 2);
        return pow(2 * h * h / (x * x / 2), n);
    }
};

/// e^{-ax} (1 - w(x)^2 / x^2)^n with w = sin (K_n) or w = cos (K-hat_n).
template <class Real, bool UseCos>
struct PeakedIntegrand {
    Real n;
    Real a;
    Real operator()(const Real& x) const {
        using std::cos;
        using std::exp;
        using std::sin;
        if (x == 0) return Real(0);
        const Real w = (UseCos ? cos(x) : sin(x)) / x;
        const Real w2 = w * w;
        if (w2 >= 1) return Real(0);
        return exp(-a * x + n * boost::math::log1p(-w2));
    }
};

template <class Real>
struct BallIntegrand {
    Real nu;
    Real a_exp;
    Real n;
    Real operator()(const Real& x) const {
        using std::abs;
        using std::pow;
        const Real s = abs(bessel_sigma(nu, x));
        return pow(s, n) * pow(x, a_exp - 1);
    }
};

// ---------------------------------------------------------------------------
// Tails

template <class Real>
struct TailEstimate {
    Real correction{0};  // analytic value added for the range beyond X (often zero)
    Real cert{0};        // bound on |true tail - correction|
};

namespace detail {

/// Int_X^inf sin(x)^n / x^n dx for integer n >= 2, by expanding sin^n into
/// exponentials and summing the integration-by-parts series of each
/// Int_X^inf e^{i w x} x^-n dx. The certificate bounds the dropped remainder
/// (n)_M |w|^-M X^(1-n-M) / (n+M-1) of each frequency.
template <class Real>
TailEstimate<Real> sinc_oscillatory_tail(int n, const Real& X) {
    using std::abs;
    using std::cos;
    using std::pow;
    using std::sin;
    TailEstimate<Real> out;
    const Real scale = pow(Real(2), -n);
    // (2i)^-n = 2^-n (-i)^n
    Real pre_re(1), pre_im(0);
    for (int j = 0; j < n; ++j) {
        const Real re = pre_im;
        const Real im = -pre_re;
        pre_re = re;
        pre_im = im;
    }
    Real sum_re(0), sum_im(0);
    for (int k = 0; k <= n; ++k) {
        const Real binom = boost::math::binomial_coefficient<Real>(static_cast<unsigned>(n), static_cast<unsigned>(k));
        const Real sign = k % 2 == 0 ? Real(1) : Real(-1);
        const int omega_i = n - 2 * k;
        Real e_re(0), e_im(0), rem(0);
        if (omega_i == 0) {
            e_re = pow(X, Real(1 - n)) / Real(n - 1);
        } else {
            const Real w(omega_i);
            const Real aw = abs(w);
            // Series sum_m (n)_m (-i/(wX))^m, stopped at its smallest term.
            Real t_re(1), t_im(0), s_re(0), s_im(0);
            Real poch(1);  // (n)_m
            int m = 0;
            Real mag(1);
            for (; m < 200; ++m) {
                const Real next_mag = mag * Real(n + m) / (aw * X);
                s_re += t_re;
                s_im += t_im;
                if (next_mag >= mag || next_mag < epsilon<Real>() * epsilon<Real>()) {
                    ++m;
                    poch *= Real(n + m - 1);
                    break;
                }
                // multiply by (n+m) * (-i/(wX))
                const Real f = Real(n + m) / (w * X);
                const Real re = t_im * f;
                const Real im = -t_re * f;
                t_re = re;
                t_im = im;
                poch *= Real(n + m);
                mag = next_mag;
            }
            // prefactor i e^{iwX} / (w X^n)
            const Real c = cos(w * X), s = sin(w * X);
            const Real px = pow(X, Real(-n)) / w;
            const Real p_re = -s * px, p_im = c * px;
            e_re = p_re * s_re - p_im * s_im;
            e_im = p_re * s_im + p_im * s_re;
            rem = poch / pow(aw, Real(m)) * pow(X, Real(1 - n - m)) / Real(n + m - 1);
        }
        const Real coef = scale * binom * sign;
        sum_re += coef * e_re;
        sum_im += coef * e_im;
        out.cert += abs(coef) * rem;
    }
    out.correction = pre_re * sum_re - pre_im * sum_im;
    return out;
}

/// Integrates f over [lower, X] where X is the first breakpoint whose tail
/// certificate is below a quarter of the tolerance budget.
///
/// breakpoint(k), k = 0, 1, ..., is an increasing sequence starting at lower;
/// tail(X) returns the analytic correction and certificate for [X, inf).
template <class Real, class F, class Breakpoint, class Tail>
QuadResult<Real> integrate_with_tail(F f, Breakpoint breakpoint, Tail tail, const OracleOptions<Real>& opts) {
    using std::abs;
    if (!(opts.tol >= 32 * epsilon<Real>())) throw oracle_error("tolerance below working precision");
    QuadOptions<Real> qo;
    qo.gauss_order = opts.gauss_order;
    qo.max_panels = opts.max_panels;
    const GaussLegendre<Real> rule(opts.gauss_order);

    std::vector<Real> pts;
    for (int k = 0; k <= 8; ++k) {
        const Real b = breakpoint(k);
        if (b > opts.x_cap) break;
        pts.push_back(b);
    }
    if (pts.size() < 2) throw oracle_error("no integration panel below x_cap");
    qo.rel_tol = Real(1e-6);
    const Real rough = abs(integrate_adaptive<Real>(f, std::span<const Real>(pts), qo, rule).value);

    // Extend to the first breakpoint whose tail is small enough.
    const Real tail_target = opts.tol * rough / 4;
    TailEstimate<Real> te = tail(pts.back());
    int k = static_cast<int>(pts.size());
    bool capped = false;
    while (!(te.cert <= tail_target)) {
        const Real b = breakpoint(k++);
        if (b > opts.x_cap) {
            capped = true;
            break;
        }
        pts.push_back(b);
        te = tail(b);
    }
    // Shrink back if the tail already passed at an earlier point (rough pass used 8 panels).
    while (pts.size() > 2) {
        const TailEstimate<Real> prev = tail(pts[pts.size() - 2]);
        if (!(prev.cert <= tail_target)) break;
        pts.pop_back();
        te = prev;
    }

    qo.rel_tol = opts.tol / 2;
    QuadResult<Real> out = integrate_adaptive<Real>(f, std::span<const Real>(pts), qo, rule);
    out.value += te.correction;
    out.tail_cert = te.cert;
    out.converged = out.total_error() <= opts.tol * abs(out.value);
    if (!out.converged) {
        out.message = capped ? "tail certificate above tolerance at x_cap" : "quadrature tolerance not reached";
    }
    return out;
}

inline bool is_integer_valued(double n) { return std::floor(n) == n; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Integrals

/// I_n = int_0^inf (sin x / x)^n dx, or from `lower` when given.
///
/// Panels are [k pi, (k+1) pi]. The tail beyond X is bounded by
/// X^(1-n)/(n-1); when that bound is too weak and n is an integer the tail
/// is added analytically (see sinc_oscillatory_tail).
template <class Real>
QuadResult<Real> integrate_In(const Real& n, const OracleOptions<Real>& opts = {}, const Real& lower = Real(0)) {
    using std::ceil;
    using std::pow;
    if (!(n > 1)) throw oracle_error("integrate_In needs n > 1");
    const bool integral = detail::is_integer_valued(static_cast<double>(n)) && n == Real(static_cast<long long>(n));
    if (!integral && !opts.abs_power) throw oracle_error("integrate_In: non-integer n requires abs_power");
    const SincPowerIntegrand<Real> f{n, opts.abs_power};
    const Real p = pi<Real>();
    Real first = ceil(lower / p);  // first multiple of pi strictly above lower
    if (first * p <= lower) first += 1;
    auto bp = [&](int k) -> Real { return k == 0 ? lower : (first + Real(k - 1)) * p; };
    const bool use_oscillatory = integral && !opts.abs_power && n <= Real(400);
    auto tail = [&](const Real& X) {
        TailEstimate<Real> env{Real(0), pow(X, 1 - n) / (n - 1)};
        if (!use_oscillatory || X < Real(20)) return env;
        TailEstimate<Real> osc = detail::sinc_oscillatory_tail<Real>(static_cast<int>(n), X);
        return osc.cert < env.cert ? osc : env;
    };
    return detail::integrate_with_tail<Real>(f, bp, tail, opts);
}

/// J_n = int_0^inf ((1 - cos x) / (x^2/2))^n dx, panels [2k pi, 2(k+1) pi].
/// For integer 2n <= 400 the tail beyond X >= 40 is added analytically.
template <class Real>
QuadResult<Real> integrate_Jn(const Real& n, const OracleOptions<Real>& opts = {}) {
    using std::pow;
    if (!(n > Real(0.5))) throw oracle_error("integrate_Jn needs n > 1/2");
    const CosinePowerIntegrand<Real> f{n};
    const Real p = pi<Real>();
    auto bp = [&](int k) { return 2 * p * Real(k); };
    // (1 - cos x) / (x^2/2) = (sin u / u)^2 with u = x/2, so the sinc tail applies.
    const Real m = 2 * n;
    const bool use_oscillatory = detail::is_integer_valued(static_cast<double>(m)) &&
                                 m == Real(static_cast<long long>(m)) && m <= Real(400);
    auto tail = [&](const Real& X) {
        TailEstimate<Real> env{Real(0), pow(Real(4), n) * pow(X, 1 - 2 * n) / (2 * n - 1)};
        if (!use_oscillatory || X < Real(40)) return env;
        TailEstimate<Real> osc = detail::sinc_oscillatory_tail<Real>(static_cast<int>(m), X / 2);
        osc.correction *= 2;
        osc.cert *= 2;
        return osc.cert < env.cert ? osc : env;
    };
    return detail::integrate_with_tail<Real>(f, bp, tail, opts);
}

/// K_n = int_0^inf e^{-ax} (1 - sin^2 x / x^2)^n dx, panels between the peaks at k pi,
/// tail bounded by e^{-aX}/a.
template <class Real>
QuadResult<Real> integrate_Kn(const Real& n, const Real& a, const OracleOptions<Real>& opts = {}) {
    using std::exp;
    if (!(n > 0) || !(a > 0)) throw oracle_error("integrate_Kn needs n > 0 and a > 0");
    const PeakedIntegrand<Real, false> f{n, a};
    const Real p = pi<Real>();
    auto bp = [&](int k) { return p * Real(k); };
    auto tail = [&](const Real& X) { return TailEstimate<Real>{Real(0), exp(-a * X) / a}; };
    return detail::integrate_with_tail<Real>(f, bp, tail, opts);
}

/// K-hat_n = int_lower^inf e^{-ax} (1 - cos^2 x / x^2)^n dx (lower = 1 by default),
/// panels between the peaks at (k + 1/2) pi.
template <class Real>
QuadResult<Real> integrate_Khat(const Real& n, const Real& a, const OracleOptions<Real>& opts = {},
                                const Real& lower = Real(1)) {
    using std::ceil;
    using std::exp;
    if (!(n > 0) || !(a > 0)) throw oracle_error("integrate_Khat needs n > 0 and a > 0");
    // 1 - cos^2 x / x^2 is negative below the root of cos x = x.
    if (!(lower > Real(0.7390851332151607))) throw oracle_error("integrate_Khat needs lower > 0.739085 (root of cos x = x)");
    const PeakedIntegrand<Real, true> f{n, a};
    const Real p = pi<Real>();
    // first peak strictly above lower
    Real first = ceil(lower / p - Real(0.5));
    if ((first + Real(0.5)) * p <= lower) first += 1;
    auto bp = [&](int k) -> Real { return k == 0 ? lower : (first + Real(k - 1) + Real(0.5)) * p; };
    auto tail = [&](const Real& X) { return TailEstimate<Real>{Real(0), exp(-a * X) / a}; };
    return detail::integrate_with_tail<Real>(f, bp, tail, opts);
}

/// Majorant of int_X^inf |sigma(x)|^n x^(a-1) dx.
///
/// With C = 2^nu Gamma(1+nu), |sigma(x)| <= C |J_nu(x)| x^-nu and either
/// |J_nu(x)| <= 1 or Landau's |J_nu(x)| <= 0.6749 x^(-1/3); the smaller of the
/// two resulting power-law integrals is returned (infinity if neither converges).
template <class Real>
Real ball_tail_majorant(const Real& nu, const Real& a_exp, const Real& n, const Real& X) {
    using std::pow;
    const Real C = pow(Real(2), nu) * boost::math::tgamma(1 + nu);
    Real best = std::numeric_limits<Real>::infinity();
    const Real e1 = n * nu - a_exp;
    if (e1 > 0) best = pow(C, n) * pow(X, -e1) / e1;
    const Real e2 = n * (nu + Real(1) / 3) - a_exp;
    if (e2 > 0) {
        const Real landau = pow(C * Real(0.6749), n) * pow(X, -e2) / e2;
        if (landau < best) best = landau;
    }
    return best;
}

/// L(nu, a; n) = int_0^inf |sigma(x)|^n x^(a-1) dx with panels split at the zeros of sigma.
template <class Real>
QuadResult<Real> integrate_ball(const Real& nu, const Real& a_exp, const Real& n, const OracleOptions<Real>& opts = {}) {
    if (!(nu > 0)) throw oracle_error("integrate_ball needs nu > 0");
    if (!(a_exp > 0)) throw oracle_error("integrate_ball needs a > 0");
    if (!(n * (nu + Real(0.5)) > a_exp)) throw oracle_error("integrate_ball needs n (nu + 1/2) > a for convergence");
    const BallIntegrand<Real> f{nu, a_exp, n};
    const Real cap = std::min(opts.x_cap, Real(bessel_sigma_x_cap));
    std::vector<Real> zeros;
    Real scanned(0);
    auto bp = [&](int k) -> Real {
        if (k == 0) return Real(0);
        while (static_cast<int>(zeros.size()) < k && scanned < cap) {
            const Real upto = std::min(cap, scanned + Real(8));
            for (const Real& z : bessel_sigma_zeros(nu, upto))
                if (z > scanned) zeros.push_back(z);
            scanned = upto;
        }
        if (k <= static_cast<int>(zeros.size())) return zeros[static_cast<std::size_t>(k - 1)];
        return cap + Real(k);  // beyond the cap: signals the driver to stop
    };
    auto tail = [&](const Real& X) { return TailEstimate<Real>{Real(0), ball_tail_majorant(nu, a_exp, n, X)}; };
    OracleOptions<Real> o = opts;
    o.x_cap = cap;
    return detail::integrate_with_tail<Real>(f, bp, tail, o);
}

}  // namespace sincasym
