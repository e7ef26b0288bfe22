#pragma once

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

namespace sincasym {

/// IEEE binary128 (113-bit significand) used for the quadrature oracle and
/// any comparison that must resolve residuals below double precision.
using quad = boost::multiprecision::float128;

template <class Real>
inline Real pi() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
inline Real epsilon() {
    return std::numeric_limits<Real>::epsilon();
}

}  // namespace sincasym
