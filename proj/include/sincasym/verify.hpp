#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fmt/format.h>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "sincasym/asymeval.hpp"
#include "sincasym/closed_forms.hpp"
#include "sincasym/coeffgen.hpp"
#include "sincasym/oracle.hpp"
#include "sincasym/random_series.hpp"
#include "sincasym/reference.hpp"

namespace sincasym::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

class Report {
public:
    void add(std::string id, bool pass, std::string detail = {}) {
        checks_.push_back({std::move(id), pass, std::move(detail)});
    }
    const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.pass; }));
    }

private:
    std::vector<CheckResult> checks_;
};

inline std::string fixed8(double x) { return fmt::format("{:.8f}", x); }
inline std::string sci(double x) { return fmt::format("{:.3e}", x); }

// ---------------------------------------------------------------------------
// Exact coefficient lists

inline void check_table1(Report& r) {
    const CoeffTable t = coeffs_In(12);
    for (int k = 0; k <= 12; ++k) {
        const Rational printed = Rational::parse(reference::sinc_c[static_cast<std::size_t>(k)]);
        const Rational& got = t.c[static_cast<std::size_t>(k)];
        r.add(fmt::format("table1.c{}", k), got == printed, got.str());
    }
}

inline void check_series_lists(Report& r) {
    const PowerSeries tau2 = sinc_tau2_series(5);
    for (int j = 1; j <= 5; ++j) {
        const Rational printed = Rational::parse(reference::sinc_tau2[static_cast<std::size_t>(j - 1)]);
        r.add(fmt::format("series.tau2.x{}", 2 * j), tau2[2 * j] == printed, tau2[2 * j].str());
    }
    const CoeffTable t = coeffs_In(7);
    for (int k = 0; k <= 5; ++k) {
        // x / sqrt(6) = sum b_k tau^(2k+1) / (2k+1)
        const Rational got = t.b[static_cast<std::size_t>(k)] / Rational(2 * k + 1);
        const Rational printed = Rational::parse(reference::sinc_x_of_tau[static_cast<std::size_t>(k)]);
        r.add(fmt::format("series.x_of_tau.tau{}", 2 * k + 1), got == printed, got.str());
    }
    for (int k = 0; k <= 7; ++k) {
        const Rational printed = Rational::parse(reference::sinc_b[static_cast<std::size_t>(k)]);
        const Rational& got = t.b[static_cast<std::size_t>(k)];
        std::string detail = got.str();
        if (got != printed) detail += " (printed " + printed.str() + ")";
        r.add(fmt::format("series.b{}", k), got == printed, detail);
    }
}

// ---------------------------------------------------------------------------
// K_n table

struct KnCell {
    reference::KnRow row;
    double oracle = 0;
    double oracle_err = 0;
    bool oracle_ok = false;
    double derived = 0;
    double printed_variant = 0;
    bool validity_warning = false;
};

inline std::vector<KnCell> compute_kn_table(double tol) {
    std::vector<KnCell> out;
    OracleOptions<double> opts;
    opts.tol = tol;
    for (const auto& row : reference::kn_table) {
        KnCell c{row};
        const QuadResult<double> q = integrate_Kn<double>(row.n, row.a, opts);
        c.oracle = q.value;
        c.oracle_err = q.total_error();
        c.oracle_ok = q.converged;
        const AsymValue<double> d = eval_Kn<double>(row.n, row.a, T1Variant::derived);
        c.derived = d.value;
        c.validity_warning = d.validity_warning;
        c.printed_variant = eval_Kn<double>(row.n, row.a, T1Variant::printed).value;
        out.push_back(c);
    }
    return out;
}

inline void check_table2(Report& r, const std::vector<KnCell>& cells) {
    for (const auto& c : cells) {
        const std::string where = fmt::format("n={},a={}", c.row.n, c.row.a);
        r.add("table2.oracle." + where, c.oracle_ok && fixed8(c.oracle) == fixed8(c.row.quadrature),
              fmt::format("{:.10f} printed {:.8f}", c.oracle, c.row.quadrature));
        r.add("table2.asymptotic." + where, fixed8(c.derived) == fixed8(c.row.asymptotic),
              fmt::format("{:.10f} printed {:.8f}", c.derived, c.row.asymptotic));
    }
}

/// Which T1 reproduces the printed asymptotic column.
inline void check_t1_record(Report& r, const std::vector<KnCell>& cells) {
    double derived_max = 0, printed_max = 0, printed_at_100_1 = 0;
    for (const auto& c : cells) {
        derived_max = std::max(derived_max, std::abs(c.derived - c.row.asymptotic));
        const double dp = std::abs(c.printed_variant - c.row.asymptotic);
        printed_max = std::max(printed_max, dp);
        if (c.row.n == 100 && c.row.a == 1.0) printed_at_100_1 = dp;
    }
    r.add("t1.derived_max_deviation", derived_max < 5e-9, fmt::format("max |derived - printed column| = {:.2e}", derived_max));
    r.add("t1.printed_variant_deviation", printed_at_100_1 > 1e-4,
          fmt::format("|printed variant - printed column| at n=100,a=1 = {:.2e} (max {:.2e})", printed_at_100_1,
                      printed_max));
}

// ---------------------------------------------------------------------------
// L(nu, a; n) relative-error table

struct BallErrorCell {
    std::string a;
    int k = 0;
    double computed = 0;
    double printed = 0;
    bool oracle_ok = false;
};

inline std::vector<BallErrorCell> compute_ball_error_table(const quad& tol) {
    const Rational nu = Rational::parse(reference::ball_error_nu);
    const quad n(reference::ball_error_n);
    OracleOptions<quad> opts;
    opts.tol = tol;
    std::vector<BallErrorCell> out;
    for (const auto& col : reference::ball_error_table) {
        const Rational a = Rational::parse(col.a);
        const QuadResult<quad> q = integrate_ball<quad>(to_real<quad>(nu), to_real<quad>(a), n, opts);
        const CoeffTable t = coeffs_ball_general(nu, a, 4);
        for (int k = 0; k <= 4; ++k) {
            const quad v = eval_ball_general<quad>(nu, a, n, t, k).value;
            out.push_back({std::string(col.a), k, static_cast<double>(abs((v - q.value) / q.value)),
                           col.rel_err[static_cast<std::size_t>(k)], q.converged});
        }
    }
    return out;
}

inline void check_table3(Report& r, const std::vector<BallErrorCell>& cells) {
    for (const auto& c : cells) {
        const double factor = c.printed >= 1e-10 ? 2.0 : 5.0;
        const double ratio = c.computed / c.printed;
        r.add(fmt::format("table3.a={}.k={}", c.a, c.k), c.oracle_ok && ratio <= factor && ratio >= 1 / factor,
              fmt::format("{} printed {} (ratio {:.3f}, allowed x{})", sci(c.computed), sci(c.printed), ratio, factor));
    }
}

// ---------------------------------------------------------------------------
// c_10: does including it reduce the residual against the oracle?

struct C10Row {
    int n = 0;
    double residual_k9 = 0;
    double residual_k10 = 0;
};

inline std::vector<C10Row> compute_c10_record() {
    const CoeffTable t = coeffs_In(12);
    OracleOptions<quad> opts;
    opts.tol = quad(1e-31);
    std::vector<C10Row> rows;
    for (int n : {200, 500, 1000}) {
        const QuadResult<quad> q = integrate_In<quad>(quad(n), opts);
        const quad r9 = abs(eval_In<quad>(quad(n), t, 9).value - q.value) / q.value;
        const quad r10 = abs(eval_In<quad>(quad(n), t, 10).value - q.value) / q.value;
        rows.push_back({n, static_cast<double>(r9), static_cast<double>(r10)});
    }
    return rows;
}

inline void check_c10_record(Report& r) {
    for (const auto& row : compute_c10_record()) {
        r.add(fmt::format("c10.n={}", row.n), row.residual_k10 < row.residual_k9,
              fmt::format("relative residual k<=9 {} , k<=10 {}", sci(row.residual_k9), sci(row.residual_k10)));
    }
}

// ---------------------------------------------------------------------------
// Convergence of the sinc expansion against the oracle

inline void check_convergence(Report& r) {
    const CoeffTable t = coeffs_In(12);
    OracleOptions<quad> opts;
    opts.tol = quad(1e-28);
    for (int n : {50, 100, 500}) {
        const quad exact = integrate_In<quad>(quad(n), opts).value;
        std::vector<quad> res;
        for (int k = 0; k <= 5; ++k) res.push_back(abs(eval_In<quad>(quad(n), t, k).value - exact) / exact);
        bool decreasing = true;
        for (std::size_t i = 1; i < res.size(); ++i) decreasing = decreasing && res[i] < res[i - 1];
        std::string detail;
        for (const auto& x : res) detail += sci(static_cast<double>(x)) + " ";
        r.add(fmt::format("convergence.n={}.decreasing", n), decreasing, detail);
        if (n == 100) r.add("convergence.n=100.k=5", res[5] < quad(1e-8), sci(static_cast<double>(res[5])));
    }
}

// ---------------------------------------------------------------------------
// Peak sums and the two-term saddle correction

inline quad phase_psi(const quad& x) {
    const quad s = sin(x) / x;
    return -boost::math::log1p(-s * s);
}

inline void check_sigma_saddle(Report& r) {
    double worst_sigma = 0;
    for (int i = 0; i <= 37; ++i) {
        const double a = 0.3 + 0.1 * i;
        for (int m = 1; m <= 3; ++m) {
            long double direct = 0;
            for (int k = 1; k < 4000; ++k) {
                const long double term = std::pow(static_cast<long double>(k), m) * std::exp(-k * std::acos(-1.0L) * a);
                direct += term;
                if (term < 1e-30L * direct) break;
            }
            const double closed = sigma_closed<double>(m, a);
            worst_sigma = std::max(worst_sigma, static_cast<double>(std::abs((closed - direct) / direct)));
        }
    }
    r.add("sigma_m.closed_vs_direct", worst_sigma <= 1e-13, fmt::format("max relative difference {:.2e}", worst_sigma));

    double worst_c2 = 0;
    for (int k = 1; k <= 10; ++k) {
        for (int i = 0; i <= 37; ++i) {
            const double a = 0.3 + 0.1 * i;
            const PeakPhase<double> ph = peak_phase_derivatives<double>(k);
            const double f = std::exp(-a * k * std::numbers::pi);
            const double generic = saddle_c2<double>(ph.d2, ph.d3, ph.d4, f, -a * f, a * a * f);
            const double printed = peak_c2<double>(k, a);
            worst_c2 = std::max(worst_c2, std::abs((generic - printed) / printed));
        }
    }
    r.add("peak_c2.printed_vs_generic", worst_c2 <= 1e-12, fmt::format("max relative difference {:.2e}", worst_c2));

    double worst_fd = 0;
    for (int k = 1; k <= 5; ++k) {
        const quad x = pi<quad>() * k;
        const quad h("1e-4");
        const quad p0 = phase_psi(x), p1 = phase_psi(x + h), m1 = phase_psi(x - h);
        const quad p2 = phase_psi(x + 2 * h), m2 = phase_psi(x - 2 * h);
        const quad d2 = (p1 - 2 * p0 + m1) / (h * h);
        const quad d3 = (p2 - 2 * p1 + 2 * m1 - m2) / (2 * h * h * h);
        const quad d4 = (p2 - 4 * p1 + 6 * p0 - 4 * m1 + m2) / (h * h * h * h);
        const PeakPhase<quad> ph = peak_phase_derivatives<quad>(k);
        for (auto [fd, exact] : {std::pair{d2, ph.d2}, std::pair{d3, ph.d3}, std::pair{d4, ph.d4}})
            worst_fd = std::max(worst_fd, static_cast<double>(abs((fd - exact) / exact)));
    }
    r.add("psi_derivatives.finite_difference", worst_fd <= 1e-6, fmt::format("max relative difference {:.2e}", worst_fd));
}

// ---------------------------------------------------------------------------
// Tail certificates

inline void check_tail_bounds(Report& r) {
    OracleOptions<quad> opts;
    opts.tol = quad(1e-20);
    for (int n : {4, 8, 16, 20}) {
        const QuadResult<quad> tail = integrate_In<quad>(quad(n), opts, pi<quad>());
        const quad bound = tail_bound_sinc<quad>(quad(n));
        r.add(fmt::format("tail.sinc.n={}", n), tail.converged && abs(tail.value) <= bound,
              fmt::format("|tail| {} bound {}", sci(static_cast<double>(abs(tail.value))), sci(static_cast<double>(bound))));
    }
    for (auto [nu_s, n] : {std::pair{"1/2", 20}, std::pair{"1/2", 40}, std::pair{"1", 20}, std::pair{"4/3", 20},
                           std::pair{"2", 30}}) {
        const quad nu = to_real<quad>(Rational::parse(nu_s));
        const quad a = 2 * nu;
        const QuadResult<quad> full = integrate_ball<quad>(nu, a, quad(n), opts);
        const quad j = first_bessel_zero<quad>(nu);
        QuadOptions<quad> qo;
        qo.rel_tol = quad(1e-24);
        const QuadResult<quad> head = integrate_adaptive<quad>(BallIntegrand<quad>{nu, a, quad(n)}, quad(0), j, qo);
        const quad tail = full.value - head.value;
        const quad bound = tail_bound_ball<quad>(nu, quad(n));
        r.add(fmt::format("tail.ball.nu={}.n={}", nu_s, n), full.converged && abs(tail) <= bound,
              fmt::format("tail {} bound {}", sci(static_cast<double>(tail)), sci(static_cast<double>(bound))));
    }
}

// ---------------------------------------------------------------------------
// Exact reductions between the coefficient families

inline void check_reductions(Report& r, std::uint64_t seed) {
    RandomSeries gen(seed);
    {
        const CoeffTable ball = coeffs_ball(Rational(1, 2), 6);
        const CoeffTable sinc = coeffs_In(6);
        bool ok = true;
        for (int k = 0; k <= 6; ++k) {
            const auto i = static_cast<std::size_t>(k);
            ok = ok && ball.c[i].abs() == sinc.c[i].abs();
            // effective signed term (-1)^k c_k equals the sinc coefficient
            ok = ok && (k % 2 == 0 ? ball.c[i] : -ball.c[i]) == sinc.c[i];
        }
        r.add("reduction.ball_half_vs_sinc", ok, "k <= 6");
    }
    {
        bool ok = true;
        std::string nus;
        for (int i = 0; i < 5; ++i) {
            const Rational nu = gen.positive_rational(8);
            nus += nu.str() + " ";
            const CoeffTable c = coeffs_ball(nu, 4);
            const CoeffTable d = coeffs_ball_general(nu, Rational(2) * nu, 4);
            ok = ok && c.c == d.c;
        }
        r.add("reduction.d_at_a_eq_2nu", ok, "nu = " + nus);
    }
    {
        bool ok = true;
        int points = 0;
        for (int p = 1; p <= 7; ++p)
            for (int q : {1, 2, 3}) {
                if (std::gcd(p, q) != 1) continue;
                const Rational nu(p, q);
                const CoeffTable t = coeffs_ball(nu, 6);
                for (int k = 0; k <= 6; ++k) ok = ok && t.c[static_cast<std::size_t>(k)] == closed_form::ball_c(k, nu);
                ++points;
            }
        r.add("reduction.wp_closed_forms", ok && points >= 14, fmt::format("{} nu points, k <= 6", points));
    }
    {
        bool ok = true;
        const std::pair<Rational, Rational> pairs[] = {{Rational(4, 3), Rational(8, 3)}, {Rational(4, 3), Rational(2, 3)},
                                                       {Rational(4, 3), Rational(10, 3)}, {Rational(1, 2), Rational(5, 2)},
                                                       {Rational(3), Rational(1, 5)},     {Rational(7, 4), Rational(9)}};
        for (const auto& [nu, a] : pairs) {
            const CoeffTable t = coeffs_ball_general(nu, a, 4);
            for (int k = 0; k <= 4; ++k) ok = ok && t.c[static_cast<std::size_t>(k)] == closed_form::ball_d(k, nu, a);
        }
        r.add("reduction.d_closed_forms", ok, "6 (nu, a) pairs, k <= 4");
    }
}

// ---------------------------------------------------------------------------
// Series algebra laws over random inputs

inline void check_ratseries_laws(Report& r, std::uint64_t seed, int cases) {
    RandomSeries gen(seed);
    int assoc = 0, comm = 0, distrib = 0, roundtrip = 0, logsq = 0, sqrtsq = 0, stable = 0, parity = 0, canon = 0;
    for (int i = 0; i < cases; ++i) {
        const int N = gen.integer(1, 20);
        const PowerSeries f = gen.series(N), g = gen.series(gen.integer(1, 20)), h = gen.series(gen.integer(1, 20));
        assoc += series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h));
        comm += series_mul(f, g) == series_mul(g, f) && f + g == g + f;
        distrib += series_mul(f, g + h) == series_mul(f, g) + series_mul(f, h);

        const PowerSeries inv = gen.invertible_series(gen.integer(1, 15));
        roundtrip += series_compose(inv, series_revert(inv)) == PowerSeries::identity(inv.order());

        const PowerSeries u = gen.unit_series(gen.integer(1, 12));
        const PowerSeries uu = series_mul(u, u);
        logsq += series_log(uu) == series_log(u).scaled(Rational(2));
        sqrtsq += series_sqrt(uu) == u;

        const PowerSeries hi = gen.unit_series(N + 4);
        const PowerSeries lo = hi.truncated(N);
        stable += series_log(hi).truncated(N) == series_log(lo) && series_mul(hi, hi).truncated(N) == series_mul(lo, lo);

        const PowerSeries e = gen.even_series(N), o = gen.odd_series(N);
        const PowerSeries eo = series_mul(e, o), oo = series_mul(o, o);
        parity += eo.parity() == Parity::odd && oo.parity() == Parity::even;

        bool all_canonical = true;
        for (const auto* s : {&eo, &uu, &inv})
            for (const auto& c : s->coeffs()) all_canonical = all_canonical && c.is_canonical();
        canon += all_canonical;
    }
    auto add = [&](const char* id, int passed) {
        r.add(std::string("ratseries.") + id, passed == cases, fmt::format("{}/{} cases", passed, cases));
    };
    add("mul_associative", assoc);
    add("commutative", comm);
    add("distributive", distrib);
    add("revert_compose_roundtrip", roundtrip);
    add("log_of_square", logsq);
    add("sqrt_of_square", sqrtsq);
    add("truncation_stability", stable);
    add("parity_propagation", parity);
    add("canonical_form", canon);
}

}  // namespace sincasym::verify
