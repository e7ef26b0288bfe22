// sincasym: coefficient tables, asymptotic evaluation, quadrature oracle,
// reference-table reproduction and the verification report.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "sincasym/asymeval.hpp"
#include "sincasym/coeff_io.hpp"
#include "sincasym/coeffgen.hpp"
#include "sincasym/oracle.hpp"
#include "sincasym/reference.hpp"
#include "sincasym/verify.hpp"

using namespace sincasym;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string family = "sinc";
    int K = -1;  // -1: family default
    std::string kmax = "auto";
    std::string nu;
    std::string a;
    std::string n;
    double tol = 1e-12;
    std::string format = "text";
    std::uint64_t seed = 20240601;
    int cases = 1000;
    std::string variant = "derived";
    std::string id;
    std::string precision = "double";
    bool abs_power = false;
};

bool structured(const RunConfig& c) { return c.format == "structured"; }

std::string g17(double x) { return fmt::format("{:.17g}", x); }

std::string quad_str(const quad& x) { return x.str(34, std::ios_base::scientific); }

/// Exact rational from "p/q" or an integer; decimals are refused.
Rational exact_param(const std::string& text, const char* name) {
    if (text.empty()) throw usage_error(std::string("--") + name + " is required");
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw usage_error(std::string("--") + name + " must be an exact rational p/q, got '" + text + "'");
    }
}

/// Real from "p/q" or a decimal literal.
double real_param(const std::string& text, const char* name) {
    if (text.empty()) throw usage_error(std::string("--") + name + " is required");
    if (text.find('/') != std::string::npos) return to_real<double>(exact_param(text, name));
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(v)) throw usage_error(std::string("--") + name + ": not a number '" + text + "'");
    return v;
}

std::optional<int> kmax_param(const std::string& text) {
    if (text == "auto") return auto_truncation;
    std::size_t used = 0;
    int k = -1;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || k < 0) throw usage_error("--kmax must be a nonnegative integer or 'auto'");
    return k;
}

json envelope(const char* kind) {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    return j;
}

// ---------------------------------------------------------------------------

CoeffTable build_table(const RunConfig& c) {
    Family fam;
    try {
        fam = parse_family(c.family);
    } catch (const std::exception&) {
        throw usage_error("unknown family '" + c.family + "' (sinc, ball, ball_general)");
    }
    if (c.K < -1) throw usage_error("--K must be nonnegative");
    switch (fam) {
        case Family::sinc: return coeffs_In(c.K < 0 ? 12 : c.K);
        case Family::ball: return coeffs_ball(exact_param(c.nu, "nu"), c.K < 0 ? 6 : c.K);
        case Family::ball_general:
            return coeffs_ball_general(exact_param(c.nu, "nu"), exact_param(c.a, "a"), c.K < 0 ? 6 : c.K);
    }
    throw usage_error("unknown family");
}

int cmd_coeffs(const RunConfig& c) {
    const CoeffTable t = build_table(c);
    if (structured(c)) {
        std::cout << to_json(t).dump(2) << '\n';
    } else {
        std::cout << to_text(t);
    }
    return exit_ok;
}

template <class Real>
json asym_json(const AsymValue<Real>& v) {
    json j;
    j["value"] = static_cast<double>(v.value);
    j["k_used"] = v.k_used;
    j["first_omitted"] = v.omitted_known ? json(static_cast<double>(v.first_omitted)) : json(nullptr);
    j["prefactor"] = static_cast<double>(v.prefactor);
    j["validity_warning"] = v.validity_warning;
    return j;
}

void print_asym(const RunConfig& c, const json& params, const AsymValue<double>& v) {
    if (structured(c)) {
        json j = envelope("asym_value");
        j["params"] = params;
        j["result"] = asym_json(v);
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "value: " << g17(v.value) << '\n';
    std::cout << "k_used: " << v.k_used << '\n';
    if (v.omitted_known) std::cout << "first_omitted: " << g17(v.first_omitted) << '\n';
    std::cout << "prefactor: " << g17(v.prefactor) << '\n';
    if (v.validity_warning) std::cout << "warning: a <= (2n)^(-1/2), outside the validity regime\n";
}

int cmd_eval(const RunConfig& c) {
    const double n = real_param(c.n, "n");
    const std::optional<int> k = kmax_param(c.kmax);
    json params{{"family", c.family}, {"n", n}, {"kmax", c.kmax}};
    if (c.family == "sinc" || c.family == "jn") {
        RunConfig cc = c;
        cc.family = "sinc";
        const CoeffTable t = build_table(cc);
        print_asym(c, params, c.family == "sinc" ? eval_In<double>(n, t, k) : eval_Jn<double>(n, t, k));
        return exit_ok;
    }
    if (c.family == "kn" || c.family == "khat") {
        const double a = real_param(c.a, "a");
        params["a"] = a;
        if (c.family == "khat") {
            const double v = eval_Khat<double>(n, a);
            if (structured(c)) {
                json j = envelope("asym_value");
                j["params"] = params;
                j["result"] = {{"value", v}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "value: " << g17(v) << '\n';
            }
            return exit_ok;
        }
        if (c.variant != "derived" && c.variant != "printed") throw usage_error("--variant must be derived or printed");
        params["variant"] = c.variant;
        print_asym(c, params, eval_Kn<double>(n, a, c.variant == "derived" ? T1Variant::derived : T1Variant::printed));
        return exit_ok;
    }
    if (c.family == "ball" || c.family == "ball_general") {
        const CoeffTable t = build_table(c);
        params["nu"] = c.nu;
        if (c.family == "ball") {
            print_asym(c, params, eval_ball<double>(*t.nu, n, t, k));
        } else {
            params["a"] = c.a;
            print_asym(c, params, eval_ball_general<double>(*t.nu, *t.a_exp, n, t, k));
        }
        return exit_ok;
    }
    throw usage_error("unknown eval family '" + c.family + "' (sinc, jn, kn, khat, ball, ball_general)");
}

template <class Real>
QuadResult<Real> run_oracle(const RunConfig& c) {
    OracleOptions<Real> o;
    o.tol = Real(c.tol);
    o.abs_power = c.abs_power;
    const Real n(real_param(c.n, "n"));
    if (c.family == "sinc") return integrate_In<Real>(n, o);
    if (c.family == "jn") return integrate_Jn<Real>(n, o);
    if (c.family == "kn") return integrate_Kn<Real>(n, Real(real_param(c.a, "a")), o);
    if (c.family == "khat") return integrate_Khat<Real>(n, Real(real_param(c.a, "a")), o);
    if (c.family == "ball" || c.family == "ball_general") {
        const Real nu(real_param(c.nu, "nu"));
        const Real a = c.family == "ball" ? 2 * nu : Real(real_param(c.a, "a"));
        return integrate_ball<Real>(nu, a, n, o);
    }
    throw usage_error("unknown oracle family '" + c.family + "' (sinc, jn, kn, khat, ball, ball_general)");
}

template <class Real>
int print_quad(const RunConfig& c, const QuadResult<Real>& q, const std::string& value_text) {
    if (structured(c)) {
        json j = envelope("quad_result");
        j["params"] = {{"family", c.family}, {"n", c.n}, {"a", c.a}, {"nu", c.nu}, {"tol", c.tol},
                       {"precision", c.precision}};
        j["result"] = {{"value", static_cast<double>(q.value)},
                       {"value_decimal", value_text},
                       {"abs_err_est", static_cast<double>(q.abs_err_est)},
                       {"tail_cert", static_cast<double>(q.tail_cert)},
                       {"panels", q.panels},
                       {"converged", q.converged}};
        if (!q.converged) j["result"]["message"] = q.message;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "value: " << value_text << '\n';
        std::cout << "abs_err_est: " << fmt::format("{:.3e}", static_cast<double>(q.abs_err_est)) << '\n';
        std::cout << "tail_cert: " << fmt::format("{:.3e}", static_cast<double>(q.tail_cert)) << '\n';
        std::cout << "panels: " << q.panels << '\n';
        std::cout << "converged: " << (q.converged ? "yes" : "no") << '\n';
        if (!q.converged) std::cout << "message: " << q.message << '\n';
    }
    return q.converged ? exit_ok : exit_check_failed;
}

int cmd_oracle(const RunConfig& c) {
    if (c.precision == "quad") {
        const QuadResult<quad> q = run_oracle<quad>(c);
        return print_quad(c, q, quad_str(q.value));
    }
    if (c.precision != "double") throw usage_error("--precision must be double or quad");
    const QuadResult<double> q = run_oracle<double>(c);
    return print_quad(c, q, g17(q.value));
}

// ---------------------------------------------------------------------------
// Tables

int table1(const RunConfig& c) {
    const CoeffTable t = coeffs_In(12);
    bool ok = true;
    json rows = json::array();
    for (int k = 0; k <= 12; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Rational printed = Rational::parse(reference::sinc_c[i]);
        const bool eq = t.c[i] == printed;
        ok = ok && eq;
        if (structured(c)) {
            rows.push_back({{"k", k}, {"computed", t.c[i].str()}, {"printed", printed.str()}, {"match", eq}});
        } else {
            std::cout << fmt::format("{:>2}  {:<48} {}\n", k, t.c[i].str(), eq ? "match" : "MISMATCH " + printed.str());
        }
    }
    if (structured(c)) {
        json j = envelope("table");
        j["id"] = "1";
        j["rows"] = rows;
        j["all_match"] = ok;
        std::cout << j.dump(2) << '\n';
    }
    return ok ? exit_ok : exit_check_failed;
}

int table2(const RunConfig& c) {
    const std::vector<verify::KnCell> cells = verify::compute_kn_table(c.tol);
    bool ok = true;
    json rows = json::array();
    if (!structured(c))
        std::cout << fmt::format("{:>5} {:>4}  {:>12} {:>12} {:>10}  {:>12} {:>12} {:>10}\n", "n", "a", "K_n", "printed",
                                 "delta", "asymptotic", "printed", "delta");
    for (const auto& cell : cells) {
        const bool qm = cell.oracle_ok && verify::fixed8(cell.oracle) == verify::fixed8(cell.row.quadrature);
        const bool am = verify::fixed8(cell.derived) == verify::fixed8(cell.row.asymptotic);
        ok = ok && qm && am;
        if (structured(c)) {
            rows.push_back({{"n", cell.row.n},
                            {"a", cell.row.a},
                            {"oracle", cell.oracle},
                            {"oracle_err", cell.oracle_err},
                            {"printed_oracle", cell.row.quadrature},
                            {"oracle_match", qm},
                            {"asymptotic", cell.derived},
                            {"printed_asymptotic", cell.row.asymptotic},
                            {"asymptotic_match", am},
                            {"asymptotic_printed_T1", cell.printed_variant}});
        } else {
            std::cout << fmt::format("{:>5} {:>4}  {:>12.8f} {:>12.8f} {:>10.1e}{} {:>12.8f} {:>12.8f} {:>10.1e}{}\n",
                                     cell.row.n, cell.row.a, cell.oracle, cell.row.quadrature,
                                     cell.oracle - cell.row.quadrature, qm ? ' ' : '*', cell.derived,
                                     cell.row.asymptotic, cell.derived - cell.row.asymptotic, am ? ' ' : '*');
        }
    }
    if (structured(c)) {
        json j = envelope("table");
        j["id"] = "2";
        j["rows"] = rows;
        j["all_match"] = ok;
        std::cout << j.dump(2) << '\n';
    } else if (!ok) {
        std::cout << "* differs from the printed value in the 8th decimal\n";
    }
    return ok ? exit_ok : exit_check_failed;
}

int table3(const RunConfig& c) {
    const quad tol = c.tol < 1e-20 ? quad(c.tol) : quad(1e-25);
    const std::vector<verify::BallErrorCell> cells = verify::compute_ball_error_table(tol);
    bool ok = true;
    json rows = json::array();
    if (!structured(c))
        std::cout << fmt::format("nu = {}, n = {}\n{:>5} {:>2}  {:>10} {:>10} {:>7}\n", reference::ball_error_nu,
                                 reference::ball_error_n, "a", "k", "computed", "printed", "ratio");
    for (const auto& cell : cells) {
        const double factor = cell.printed >= 1e-10 ? 2.0 : 5.0;
        const double ratio = cell.computed / cell.printed;
        const bool pass = cell.oracle_ok && ratio <= factor && ratio >= 1 / factor;
        ok = ok && pass;
        if (structured(c)) {
            rows.push_back({{"a", cell.a},
                            {"k", cell.k},
                            {"computed", cell.computed},
                            {"printed", cell.printed},
                            {"ratio", ratio},
                            {"within_factor", factor},
                            {"match", pass}});
        } else {
            std::cout << fmt::format("{:>5} {:>2}  {:>10.3e} {:>10.3e} {:>7.3f}{}\n", cell.a, cell.k, cell.computed,
                                     cell.printed, ratio, pass ? "" : " *");
        }
    }
    if (structured(c)) {
        json j = envelope("table");
        j["id"] = "3";
        j["rows"] = rows;
        j["all_match"] = ok;
        std::cout << j.dump(2) << '\n';
    }
    return ok ? exit_ok : exit_check_failed;
}

/// Samples of the K_n integrand at n = 5000, a = 1/6 against t = x / pi, with the e^{-pi a t} envelope.
int figure1(const RunConfig& c) {
    const PeakedIntegrand<double, false> f{5000.0, 1.0 / 6.0};
    json rows = json::array();
    if (!structured(c)) std::cout << "t integrand envelope\n";
    for (int i = 1; i <= 600; ++i) {
        const double t = i / 100.0;
        const double x = t * std::numbers::pi;
        const double env = std::exp(-x / 6.0);
        if (structured(c)) {
            rows.push_back({t, f(x), env});
        } else {
            std::cout << fmt::format("{:.2f} {:.10e} {:.10e}\n", t, f(x), env);
        }
    }
    if (structured(c)) {
        json j = envelope("figure");
        j["id"] = "fig1";
        j["columns"] = {"t", "integrand", "envelope"};
        j["rows"] = rows;
        std::cout << j.dump(2) << '\n';
    }
    return exit_ok;
}

/// xi(nu) on nu = 1/2, 3/4, ..., 10.
int figure2(const RunConfig& c) {
    json rows = json::array();
    if (!structured(c)) std::cout << "nu xi\n";
    for (int i = 2; i <= 40; ++i) {
        const double nu = i / 4.0;
        const double v = xi<double>(nu);
        if (structured(c)) {
            rows.push_back({nu, v});
        } else {
            std::cout << fmt::format("{:.2f} {:.15f}\n", nu, v);
        }
    }
    if (structured(c)) {
        json j = envelope("figure");
        j["id"] = "fig2";
        j["columns"] = {"nu", "xi"};
        j["rows"] = rows;
        std::cout << j.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_table(const RunConfig& c) {
    if (c.id == "1") return table1(c);
    if (c.id == "2") return table2(c);
    if (c.id == "3") return table3(c);
    if (c.id == "fig1") return figure1(c);
    if (c.id == "fig2") return figure2(c);
    throw usage_error("--id must be one of 1, 2, 3, fig1, fig2");
}

int cmd_verify(const RunConfig& c) {
    if (c.cases < 1) throw usage_error("--cases must be positive");
    verify::Report r;
    verify::check_table1(r);
    verify::check_series_lists(r);
    const auto kn = verify::compute_kn_table(1e-10);
    verify::check_table2(r, kn);
    verify::check_t1_record(r, kn);
    verify::check_table3(r, verify::compute_ball_error_table(quad(1e-25)));
    verify::check_c10_record(r);
    verify::check_convergence(r);
    verify::check_sigma_saddle(r);
    verify::check_tail_bounds(r);
    verify::check_reductions(r, c.seed);
    verify::check_ratseries_laws(r, c.seed, c.cases);
    if (structured(c)) {
        json j = envelope("verify_report");
        j["seed"] = c.seed;
        j["cases"] = c.cases;
        json items = json::array();
        for (const auto& item : r.checks()) items.push_back({{"id", item.id}, {"pass", item.pass}, {"detail", item.detail}});
        j["checks"] = items;
        j["failures"] = r.failures();
        j["all_pass"] = r.all_pass();
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& item : r.checks())
            std::cout << (item.pass ? "PASS  " : "FAIL  ") << item.id << "  " << item.detail << '\n';
        std::cout << fmt::format("{} checks, {} failed\n", r.checks().size(), r.failures());
    }
    return r.all_pass() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coefficients, asymptotic values and quadrature checks for sinc-power and Bessel-power integrals"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&c](CLI::App* sub) {
        sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--tol", c.tol, "relative tolerance");
        sub->add_option("--seed", c.seed, "seed for randomized suites");
    };
    auto params = [&c](CLI::App* sub) {
        sub->add_option("--family", c.family, "integral or coefficient family");
        sub->add_option("--K", c.K, "coefficient table order");
        sub->add_option("--kmax", c.kmax, "truncation index or 'auto'");
        sub->add_option("--nu", c.nu, "Bessel order as p/q");
        sub->add_option("--a", c.a, "exponent (p/q) or damping parameter");
        sub->add_option("--n", c.n, "large parameter n");
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "exact coefficient table");
    CLI::App* eval = app.add_subcommand("eval", "evaluate an asymptotic formula");
    CLI::App* oracle = app.add_subcommand("oracle", "integrate numerically");
    CLI::App* table = app.add_subcommand("table", "reproduce a reference table or figure data");
    CLI::App* verify = app.add_subcommand("verify", "run every check and report");
    for (CLI::App* sub : {coeffs, eval, oracle, table, verify}) common(sub);
    for (CLI::App* sub : {coeffs, eval, oracle}) params(sub);
    eval->add_option("--variant", c.variant, "T1 variant for kn: derived or printed");
    oracle->add_option("--precision", c.precision, "double or quad");
    oracle->add_flag("--abs-power", c.abs_power, "integrate |sin x / x|^n (non-integer n)");
    table->add_option("--id", c.id, "1, 2, 3, fig1 or fig2")->required();
    verify->add_option("--cases", c.cases, "random cases per algebra law");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*coeffs) return cmd_coeffs(c);
        if (*eval) return cmd_eval(c);
        if (*oracle) return cmd_oracle(c);
        if (*table) return cmd_table(c);
        if (*verify) return cmd_verify(c);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        // precondition violations from the library
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
