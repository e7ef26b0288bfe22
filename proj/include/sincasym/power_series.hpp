#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sincasym/rational.hpp"

namespace sincasym {

enum class Parity { none, even, odd };

inline const char* to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "none";
    }
}

/// Base class for the series-algebra failures below.
struct series_error : std::domain_error {
    using std::domain_error::domain_error;
};
/// Divisor whose relevant leading coefficient is zero.
struct degenerate_divisor : series_error {
    using series_error::series_error;
};
/// Input violates an operation's precondition (e.g. log of a series with constant term != 1).
struct precondition_error : series_error {
    using series_error::series_error;
};
/// Reversion of a series with zero linear coefficient.
struct not_invertible : series_error {
    using series_error::series_error;
};

/// Truncated formal power series over Rational.
///
/// Holds coefficients of x^0 .. x^N where N = order(). Coefficients above N are
/// unknown, not zero; every operation returns the largest order it can
/// determine exactly and never pads. A declared parity is checked on
/// construction, so a parity-tagged value always has exact zeros in the
/// excluded slots.
class PowerSeries {
public:
    PowerSeries() : coeffs_{Rational(0)} {}

    explicit PowerSeries(std::vector<Rational> coeffs, Parity parity = Parity::none)
        : coeffs_(std::move(coeffs)), parity_(parity) {
        if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const bool excluded = (parity_ == Parity::even && k % 2 == 1) ||
                                  (parity_ == Parity::odd && k % 2 == 0);
            if (excluded && !coeffs_[k].is_zero())
                throw std::invalid_argument("coefficient of x^" + std::to_string(k) + " violates declared " +
                                            to_string(parity_) + " parity");
        }
    }

    static PowerSeries constant(const Rational& c, int order) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
        v[0] = c;
        return PowerSeries(std::move(v), Parity::even);
    }
    static PowerSeries identity(int order) { return monomial(Rational(1), 1, order); }
    static PowerSeries monomial(const Rational& c, int degree, int order) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
        if (degree <= order) v[static_cast<std::size_t>(degree)] = c;
        return PowerSeries(std::move(v), degree % 2 == 0 ? Parity::even : Parity::odd);
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Parity parity() const noexcept { return parity_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](int k) const {
        if (k < 0 || k > order())
            throw std::out_of_range("coefficient x^" + std::to_string(k) + " beyond truncation order " +
                                    std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(k)];
    }

    /// Index of the first nonzero coefficient, or order()+1 if all known coefficients vanish.
    int valuation() const {
        for (int k = 0; k <= order(); ++k)
            if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
        return order() + 1;
    }

    PowerSeries truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise truncation order by truncating");
        return PowerSeries({coeffs_.begin(), coeffs_.begin() + order + 1}, parity_);
    }

    /// Termwise derivative; order drops by one.
    PowerSeries derivative() const {
        if (order() == 0) return PowerSeries();
        std::vector<Rational> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long long>(k));
        return PowerSeries(std::move(v), flip(parity_));
    }

    /// Termwise antiderivative with zero constant; order rises by one.
    PowerSeries integral() const {
        std::vector<Rational> v(coeffs_.size() + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            v[k + 1] = coeffs_[k] / Rational(static_cast<long long>(k + 1));
        return PowerSeries(std::move(v), flip(parity_));
    }

    /// Multiply by x^shift (shift > 0) or divide by x^-shift (shift < 0, low terms must vanish).
    PowerSeries shifted(int shift) const {
        if (shift >= 0) {
            std::vector<Rational> v(coeffs_.size() + static_cast<std::size_t>(shift));
            std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + shift);
            return PowerSeries(std::move(v), shift % 2 == 0 ? parity_ : flip(parity_));
        }
        const int drop = -shift;
        if (valuation() < drop) throw precondition_error("shift would discard nonzero low-order terms");
        if (drop > order()) throw precondition_error("shift exceeds truncation order");
        return PowerSeries({coeffs_.begin() + drop, coeffs_.end()}, drop % 2 == 0 ? parity_ : flip(parity_));
    }

    PowerSeries operator-() const {
        std::vector<Rational> v = coeffs_;
        for (auto& c : v) c = -c;
        return PowerSeries(std::move(v), parity_);
    }

    PowerSeries scaled(const Rational& s) const {
        std::vector<Rational> v = coeffs_;
        for (auto& c : v) c *= s;
        return PowerSeries(std::move(v), parity_);
    }

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
        const int n = std::min(f.order(), g.order());
        std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = f[k] + g[k];
        return PowerSeries(std::move(v), f.parity_ == g.parity_ ? f.parity_ : Parity::none);
    }
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) { return f.coeffs_ == g.coeffs_; }

    static Parity flip(Parity p) {
        if (p == Parity::even) return Parity::odd;
        if (p == Parity::odd) return Parity::even;
        return Parity::none;
    }

private:
    std::vector<Rational> coeffs_;
    Parity parity_ = Parity::none;
};

inline Parity product_parity(Parity a, Parity b) {
    if (a == Parity::none || b == Parity::none) return Parity::none;
    return a == b ? Parity::even : Parity::odd;
}

/// Cauchy product truncated at min(order(f), order(g)).
inline PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g[j].is_zero()) continue;
            v[static_cast<std::size_t>(i + j)] += f[i] * g[j];
        }
    }
    return PowerSeries(std::move(v), product_parity(f.parity(), g.parity()));
}

/// h with h*g = f. When g(0) = 0, the common factor x^d (d = valuation of g)
/// is cancelled first; f must then also vanish below degree d, and the
/// result order is min(order f, order g) - d.
inline PowerSeries series_div(const PowerSeries& f, const PowerSeries& g) {
    const int d = g.valuation();
    if (d > g.order()) throw degenerate_divisor("division by a series with no known nonzero coefficient");
    if (d > 0 && f.valuation() < d)
        throw degenerate_divisor("divisor vanishes to order " + std::to_string(d) + " but dividend does not");
    const PowerSeries num = d > 0 ? f.shifted(-d) : f;
    const PowerSeries den = d > 0 ? g.shifted(-d) : g;
    const int n = std::min(num.order(), den.order());
    const Rational lead_inv = den[0].reciprocal();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = num[k];
        for (int j = 1; j <= k; ++j) {
            if (den[j].is_zero()) continue;
            acc -= den[j] * h[static_cast<std::size_t>(k - j)];
        }
        h[static_cast<std::size_t>(k)] = acc * lead_inv;
    }
    Parity p = product_parity(num.parity(), den.parity());
    return PowerSeries(std::move(h), p);
}

/// log f for f(0) = 1, from h' = f'/f.
inline PowerSeries series_log(const PowerSeries& f) {
    if (f[0] != Rational(1)) throw precondition_error("series_log needs constant term exactly 1");
    const int n = f.order();
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Rational acc = f[k] * Rational(k);
        for (int j = 1; j < k; ++j) {
            if (f[k - j].is_zero()) continue;
            acc -= h[static_cast<std::size_t>(j)] * f[k - j] * Rational(j);
        }
        h[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return PowerSeries(std::move(h), f.parity() == Parity::even ? Parity::even : Parity::none);
}

/// exp g for g(0) = 0.
inline PowerSeries series_exp(const PowerSeries& g) {
    if (!g[0].is_zero()) throw precondition_error("series_exp needs zero constant term");
    const int n = g.order();
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            if (g[j].is_zero()) continue;
            acc += g[j] * e[static_cast<std::size_t>(k - j)] * Rational(j);
        }
        e[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return PowerSeries(std::move(e), g.parity() == Parity::even ? Parity::even : Parity::none);
}

/// f^a for f(0) = 1 and rational a (J.C.P. Miller recurrence).
inline PowerSeries series_pow(const PowerSeries& f, const Rational& a) {
    if (f[0] != Rational(1)) throw precondition_error("series_pow needs constant term exactly 1");
    const int n = f.order();
    std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
    p[0] = Rational(1);
    const Rational a1 = a + Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            if (f[j].is_zero()) continue;
            acc += (a1 * Rational(j) - Rational(k)) * f[j] * p[static_cast<std::size_t>(k - j)];
        }
        p[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return PowerSeries(std::move(p), f.parity() == Parity::even ? Parity::even : Parity::none);
}

/// sqrt f for f(0) = 1; result has constant term 1.
inline PowerSeries series_sqrt(const PowerSeries& f) {
    if (f[0] != Rational(1)) throw precondition_error("series_sqrt needs constant term exactly 1");
    const int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    g[0] = Rational(1);
    const Rational half(1, 2);
    for (int k = 1; k <= n; ++k) {
        Rational acc = f[k];
        for (int j = 1; j < k; ++j) acc -= g[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = acc * half;
    }
    return PowerSeries(std::move(g), f.parity() == Parity::even ? Parity::even : Parity::none);
}

/// f(g(x)) for g(0) = 0.
///
/// With v = valuation(g), unknown terms of f enter at degree v*(order f + 1)
/// and unknown terms of g at order g + 1, so the result order is the smaller
/// of order(g) and v*(order f + 1) - 1.
inline PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g[0].is_zero()) throw precondition_error("series_compose needs inner series with zero constant term");
    const int v = g.valuation();
    int n = g.order();
    if (v <= g.order()) n = std::min(n, v * (f.order() + 1) - 1);
    const PowerSeries inner = g.truncated(n);
    PowerSeries acc = PowerSeries::constant(f[f.order()], n);
    for (int i = f.order() - 1; i >= 0; --i) {
        acc = series_mul(acc, inner) + PowerSeries::constant(f[i], n);
    }
    Parity p = Parity::none;
    if (inner.parity() == Parity::even) p = Parity::even;
    else if (inner.parity() == Parity::odd) p = f.parity();
    return PowerSeries(acc.coeffs(), p);
}

enum class ReversionMethod { lagrange, substitution };

/// Compositional inverse g with f(g(x)) = x up to the truncation order.
///
/// lagrange: g_k = [w^(k-1)] (w / f(w))^k / k.
/// substitution: fix g term by term so that f(g) matches x through each degree.
inline PowerSeries series_revert(const PowerSeries& f, ReversionMethod method = ReversionMethod::lagrange) {
    if (!f[0].is_zero()) throw precondition_error("series_revert needs zero constant term");
    if (f.order() < 1 || f[1].is_zero()) throw not_invertible("series_revert needs a nonzero linear coefficient");
    const int n = f.order();
    const Parity out_parity = f.parity() == Parity::odd ? Parity::odd : Parity::none;
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);

    if (method == ReversionMethod::lagrange) {
        const PowerSeries phi = series_div(PowerSeries::constant(Rational(1), n - 1), f.shifted(-1));
        PowerSeries power = PowerSeries::constant(Rational(1), n - 1);
        for (int k = 1; k <= n; ++k) {
            power = series_mul(power, phi);
            g[static_cast<std::size_t>(k)] = power[k - 1] / Rational(k);
        }
        return PowerSeries(std::move(g), out_parity);
    }

    const Rational lin_inv = f[1].reciprocal();
    g[1] = lin_inv;
    for (int k = 2; k <= n; ++k) {
        std::vector<Rational> partial(g.begin(), g.begin() + k + 1);
        const PowerSeries comp = series_compose(f.truncated(k), PowerSeries(std::move(partial)));
        g[static_cast<std::size_t>(k)] = -comp[k] * lin_inv;
    }
    return PowerSeries(std::move(g), out_parity);
}

}  // namespace sincasym
