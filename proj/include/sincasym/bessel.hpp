#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sincasym/real.hpp"

namespace sincasym {

struct bessel_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest |x| accepted by bessel_sigma. The alternating series loses about
/// 0.87 |x| / ln 10 digits to cancellation near this cap.
inline constexpr double bessel_sigma_x_cap = 60.0;

/// Above this |x| built-in floating types use Boost's J_nu instead of the series.
inline constexpr double bessel_sigma_series_limit = 12.0;

template <class Real>
struct SigmaValue {
    Real value;
    Real error_bound;  // rounding allowance: a few ulp of the largest partial term magnitude
};

/// sigma(x) = Gamma(1+nu) J_nu(x) / (x/2)^nu = sum_k (-x^2/4)^k / (k! (nu+1)_k).
///
/// Summed in Real. The returned bound grows with max|term| / |sigma|, which is
/// the cancellation the alternating series suffers for large x. Built-in
/// floating types switch to Boost's J_nu above bessel_sigma_series_limit.
template <class Real>
SigmaValue<Real> bessel_sigma_bounded(const Real& nu, const Real& x) {
    using std::abs;
    if (!(abs(x) <= Real(bessel_sigma_x_cap)))
        throw bessel_error("bessel_sigma: |x| exceeds the series cap of 60");
    if (!(nu > Real(-1))) throw bessel_error("bessel_sigma: nu must exceed -1");
    if constexpr (std::is_floating_point_v<Real>) {
        using std::pow;
        using std::sqrt;
        const Real ax = abs(x);
        if (ax > Real(bessel_sigma_series_limit)) {
            const Real scale = boost::math::tgamma(1 + nu) / pow(ax / 2, nu);
            const Real j = boost::math::cyl_bessel_j(nu, ax);
            const Real envelope = sqrt(2 / (pi<Real>() * ax));
            return {scale * j, 16 * epsilon<Real>() * scale * std::max(abs(j), envelope)};
        }
    }
    const Real q = -(x * x) / 4;
    Real term(1), sum(1), largest(1);
    for (int k = 1; k < 10000; ++k) {
        term *= q / (Real(k) * (nu + Real(k)));
        sum += term;
        const Real at = abs(term);
        if (at > largest) largest = at;
        if (at <= epsilon<Real>() * abs(sum) / 8 && Real(k) * Real(k) > abs(q)) break;
    }
    return {sum, 8 * epsilon<Real>() * largest};
}

template <class Real>
Real bessel_sigma(const Real& nu, const Real& x) {
    return bessel_sigma_bounded(nu, x).value;
}

namespace detail {

/// Root of sigma(nu, .) in [lo, hi] with sigma(lo) > 0 > sigma(hi) or the reverse.
/// Bisection interleaved with secant steps; stops at relative width 4 eps.
template <class Real>
Real refine_sigma_root(const Real& nu, Real lo, Real hi) {
    using std::abs;
    Real flo = bessel_sigma(nu, lo);
    Real fhi = bessel_sigma(nu, hi);
    if ((flo > 0) == (fhi > 0)) throw bessel_error("refine_sigma_root: interval does not bracket a root");
    for (int iter = 0; iter < 400; ++iter) {
        if (hi - lo <= 4 * epsilon<Real>() * abs(hi)) break;
        Real mid = (lo + hi) / 2;
        if (iter % 2 == 1 && fhi != flo) {
            const Real sec = lo - flo * (hi - lo) / (fhi - flo);
            if (sec > lo && sec < hi) mid = sec;
        }
        const Real fm = bessel_sigma(nu, mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace detail

/// First positive zero j_{nu,1} of J_nu.
///
/// sigma is positive on [0, j_{nu,1}) and j_{nu,1} > nu, so the search marches
/// from max(nu, 0) in steps of 1/2 until sigma changes sign, then refines.
template <class Real>
Real first_bessel_zero(const Real& nu) {
    if (nu < 0) throw bessel_error("first_bessel_zero: nu must be nonnegative");
    Real lo = nu;
    if (bessel_sigma(nu, lo) <= 0) throw bessel_error("first_bessel_zero: sigma(nu) is not positive");
    const Real step(0.5);
    while (lo + step <= Real(bessel_sigma_x_cap)) {
        const Real hi = lo + step;
        if (bessel_sigma(nu, hi) <= 0) return detail::refine_sigma_root(nu, lo, hi);
        lo = hi;
    }
    throw bessel_error("first_bessel_zero: no sign change below the series cap");
}

/// All zeros of sigma(nu, .) in (0, x_max], in increasing order.
template <class Real>
std::vector<Real> bessel_sigma_zeros(const Real& nu, const Real& x_max) {
    if (x_max > Real(bessel_sigma_x_cap)) throw bessel_error("bessel_sigma_zeros: x_max exceeds the series cap");
    std::vector<Real> zeros;
    const Real step(0.25);
    Real lo(0);
    Real flo(1);
    while (lo < x_max) {
        Real hi = lo + step;
        if (hi > x_max) hi = x_max;
        const Real fhi = bessel_sigma(nu, hi);
        if (fhi == 0) {
            zeros.push_back(hi);
        } else if ((fhi > 0) != (flo > 0) && flo != 0) {
            zeros.push_back(detail::refine_sigma_root(nu, lo, hi));
        }
        lo = hi;
        flo = fhi;
    }
    return zeros;
}

}  // namespace sincasym
