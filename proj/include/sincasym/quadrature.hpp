#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sincasym/real.hpp"

namespace sincasym {

/// n-point Gauss-Legendre rule on [-1, 1], nodes from Newton iteration on P_n in Real.
template <class Real>
class GaussLegendre {
public:
    explicit GaussLegendre(int n) : nodes_(static_cast<std::size_t>(n)), weights_(static_cast<std::size_t>(n)) {
        using std::abs;
        using std::cos;
        if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
        const Real tol = 4 * epsilon<Real>();
        for (int i = 0; i < (n + 1) / 2; ++i) {
            Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
            Real dp(0);
            for (int iter = 0; iter < 100; ++iter) {
                auto [p, d] = legendre(n, x);
                dp = d;
                const Real dx = p / d;
                x -= dx;
                if (abs(dx) <= tol * abs(x) || abs(dx) <= tol) {
                    dp = legendre(n, x).second;
                    break;
                }
            }
            const Real w = 2 / ((1 - x * x) * dp * dp);
            nodes_[static_cast<std::size_t>(i)] = -x;
            weights_[static_cast<std::size_t>(i)] = w;
            nodes_[static_cast<std::size_t>(n - 1 - i)] = x;
            weights_[static_cast<std::size_t>(n - 1 - i)] = w;
        }
        if (n % 2 == 1) nodes_[static_cast<std::size_t>(n / 2)] = Real(0);
    }

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const Real> nodes() const noexcept { return nodes_; }
    std::span<const Real> weights() const noexcept { return weights_; }

    template <class F>
    Real apply(F& f, const Real& a, const Real& b) const {
        const Real half = (b - a) / 2;
        const Real mid = (a + b) / 2;
        Real sum(0);
        for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
        return sum * half;
    }

private:
    static std::pair<Real, Real> legendre(int n, const Real& x) {
        Real p0(1), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 0) return {Real(1), Real(0)};
        const Real d = n * (x * p1 - p0) / (x * x - 1);
        return {p1, d};
    }

    std::vector<Real> nodes_;
    std::vector<Real> weights_;
};

template <class Real>
struct QuadOptions {
    Real rel_tol = Real(1e-12);
    Real abs_tol = Real(0);
    int gauss_order = 20;
    std::size_t max_panels = 200000;
};

/// Integral value with its error budget: abs_err_est covers the quadrature,
/// tail_cert bounds whatever part of an infinite range was not integrated.
template <class Real>
struct QuadResult {
    Real value{0};
    Real abs_err_est{0};
    std::size_t panels = 0;
    Real tail_cert{0};
    bool converged = false;
    std::string message;

    Real total_error() const { return abs_err_est + tail_cert; }
};

/// Globally adaptive Gauss-Legendre quadrature over consecutive panels.
///
/// Each panel is estimated by the rule on the whole panel and on its two
/// halves; the halves are kept and |whole - halves| is the panel's error
/// estimate, floored at 8 eps of the panel value. The panel with the largest
/// estimate is bisected until the sum of estimates drops below
/// max(abs_tol, rel_tol * |value|).
template <class Real, class F>
QuadResult<Real> integrate_adaptive(F&& f, std::span<const Real> breakpoints, const QuadOptions<Real>& opts,
                                    const GaussLegendre<Real>& rule) {
    using std::abs;
    if (breakpoints.size() < 2) throw std::invalid_argument("need at least two breakpoints");

    struct Panel {
        Real a, b, value, err;
        bool at_floor;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    auto eval_panel = [&](const Real& a, const Real& b) {
        const Real m = (a + b) / 2;
        const Real whole = rule.apply(f, a, b);
        const Real halves = rule.apply(f, a, m) + rule.apply(f, m, b);
        Real err = abs(whole - halves);
        // Floor at the rounding level of the panel sum.
        const Real floor = 8 * epsilon<Real>() * abs(halves);
        const bool at_floor = err <= floor;
        if (at_floor) err = floor;
        return Panel{a, b, halves, err, at_floor};
    };

    std::priority_queue<Panel> heap;
    std::vector<Panel> frozen;  // too narrow to bisect further
    Real total(0), err_total(0);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) throw std::invalid_argument("breakpoints must increase");
        Panel p = eval_panel(breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        err_total += p.err;
        heap.push(p);
    }

    QuadResult<Real> out;
    std::size_t count = heap.size();
    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * abs(total)); };
    while (err_total > target() && !heap.empty()) {
        if (count >= opts.max_panels) break;
        Panel p = heap.top();
        heap.pop();
        const Real m = (p.a + p.b) / 2;
        // Bisecting a panel already at rounding level cannot lower its estimate.
        if (p.at_floor || !(p.a < m && m < p.b) || (p.b - p.a) <= 8 * epsilon<Real>() * std::max(abs(p.a), abs(p.b))) {
            frozen.push_back(p);
            continue;
        }
        Panel left = eval_panel(p.a, m);
        Panel right = eval_panel(m, p.b);
        total += left.value + right.value - p.value;
        err_total += left.err + right.err - p.err;
        heap.push(left);
        heap.push(right);
        ++count;
    }

    // Re-sum in a fixed order so the result does not depend on heap history.
    std::vector<Panel> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    out.value = Real(0);
    out.abs_err_est = Real(0);
    for (const auto& p : all) {
        out.value += p.value;
        out.abs_err_est += p.err;
    }
    out.panels = all.size();
    out.converged = out.abs_err_est <= std::max(opts.abs_tol, opts.rel_tol * abs(out.value));
    if (!out.converged) out.message = "quadrature tolerance not reached within panel budget or working precision";
    return out;
}

template <class Real, class F>
QuadResult<Real> integrate_adaptive(F&& f, std::span<const Real> breakpoints, const QuadOptions<Real>& opts) {
    const GaussLegendre<Real> rule(opts.gauss_order);
    return integrate_adaptive<Real>(std::forward<F>(f), breakpoints, opts, rule);
}

template <class Real, class F>
QuadResult<Real> integrate_adaptive(F&& f, const Real& a, const Real& b, const QuadOptions<Real>& opts) {
    const Real pts[2] = {a, b};
    return integrate_adaptive<Real>(std::forward<F>(f), std::span<const Real>(pts, 2), opts);
}

}  // namespace sincasym
