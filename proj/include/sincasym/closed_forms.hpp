#pragma once

#include <initializer_list>
#include <stdexcept>

#include "sincasym/rational.hpp"

// Closed-form Ball-integral coefficients as published, evaluated exactly at a
// rational nu (and a). Independent of the series pipeline in coeffgen.hpp.

namespace sincasym::closed_form {

/// Horner evaluation; coefficients from the highest degree down.
inline Rational horner(std::initializer_list<long long> coeffs, const Rational& x) {
    Rational acc(0);
    for (long long c : coeffs) acc = acc * x + Rational(c);
    return acc;
}

inline Rational power(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

/// The polynomials p_k(nu), k = 1..6.
inline Rational wp(int k, const Rational& v) {
    switch (k) {
        case 1: return Rational(1);
        case 2: return horner({3, 2, -5}, v);
        case 3: return (Rational(1) + v) * horner({1, -1, -4, -8}, v);
        case 4: return horner({15, 15, -220, -918, 763, 15055, 26898, 13688}, v);
        case 5: return horner({3, -7, -66, -246, 2307, 6825, -43668, -118508, -89904, -19392}, v);
        case 6:
            return horner({63, 0, -3276, -16856, 131726, 781856, -4685840, -14835768, 104879595, 322760624,
                           -328990364, -1748824256, -1801386304, -590749440},
                          v);
        default: throw std::out_of_range("p_k known for 1 <= k <= 6");
    }
}

/// c_k(nu) = nu (1 + nu) p_k(nu) / D_k(nu), k = 0..6.
inline Rational ball_c(int k, const Rational& v) {
    if (k == 0) return Rational(1);
    const Rational two = Rational(2) + v, three = Rational(3) + v;
    Rational den;
    switch (k) {
        case 1: den = Rational(2) * two; break;
        case 2: den = Rational(24) * two * three; break;
        case 3: den = Rational(48) * power(two, 2) * (Rational(4) + v); break;
        case 4: den = Rational(5760) * power(two, 3) * three * (Rational(5) + v); break;
        case 5: den = Rational(11520) * power(two, 4) * three * (Rational(6) + v); break;
        case 6:
            den = Rational(2903040) * power(two, 5) * power(three, 2) * (Rational(4) + v) * (Rational(7) + v);
            break;
        default: throw std::out_of_range("c_k(nu) known for 0 <= k <= 6");
    }
    return v * (Rational(1) + v) * wp(k, v) / den;
}

/// d_k(nu, a), k = 0..4.
inline Rational ball_d(int k, const Rational& v, const Rational& a) {
    const Rational h = a / Rational(2);
    const Rational two = Rational(2) + v, three = Rational(3) + v;
    switch (k) {
        case 0: return Rational(1);
        case 1: return pochhammer(h, 2) / (Rational(2) * two);
        case 2:
            return pochhammer(h, 3) * ((Rational(3) * a - Rational(14)) * v + Rational(9) * a - Rational(10)) /
                   (Rational(48) * power(two, 2) * three);
        case 3: {
            const Rational poly = (a * a - Rational(14) * a + Rational(64)) * v * v +
                                  (Rational(7) * a * a - Rational(66) * a + Rational(32)) * v +
                                  Rational(4) * (a - Rational(4)) * (Rational(3) * a + Rational(2));
            return pochhammer(h, 4) * poly / (Rational(192) * power(two, 3) * three * (Rational(4) + v));
        }
        case 4: {
            auto cubic = [&](long long c3, long long c2, long long c1, long long c0) { return horner({c3, c2, c1, c0}, a); };
            const Rational poly = cubic(15, -420, 4820, -23824) * power(v, 4) +
                                  cubic(225, -5340, 42860, -65776) * power(v, 3) +
                                  cubic(1245, -23340, 103740, 100560) * power(v, 2) +
                                  cubic(3015, -39300, 45940, 252784) * v + cubic(2700, -18000, -18800, 109504);
            return pochhammer(h, 5) * poly /
                   (Rational(46080) * power(two, 4) * power(three, 2) * (Rational(4) + v) * (Rational(5) + v));
        }
        default: throw std::out_of_range("d_k known for 0 <= k <= 4");
    }
}

}  // namespace sincasym::closed_form
