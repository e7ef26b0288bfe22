#pragma once

#include <array>
#include <string_view>

// Published reference values for the three integral families, transcribed
// as printed. Used by the CLI's table and verify commands.

namespace sincasym::reference {

/// c_0 .. c_12 of the sinc expansion I_n ~ sqrt(3 pi / 2n) sum c_k / n^k.
inline constexpr std::array<std::string_view, 13> sinc_c = {
    "1",
    "-3/20",
    "-13/1120",
    "27/3200",
    "52791/3942400",
    "482427/66560000",
    "-124996631/10035200000",
    "-5270328789/136478720000",
    "-7479063506161/268461670400000",
    "6921977624613/56518246400000",
    "10703530420192887741/23658537943040000000",
    "5097105795373974189/20572641689600000000",
    "-12397974207837236059539/3620784937369600000000",
};

/// b_0 .. b_7 as listed with dx/dtau = sqrt(6) sum b_k tau^(2k).
inline constexpr std::array<std::string_view, 8> sinc_b = {
    "1", "-3/10", "-13/840", "9/2000", "17597/862400", "53603/218400000", "-124996631/1629936000000",
    "-159706933/4366252800000",
};

/// Coefficients of tau, tau^3, ..., tau^11 inside x = sqrt(6) {tau - tau^3/10 - ...}.
inline constexpr std::array<std::string_view, 6> sinc_x_of_tau = {
    "1", "-1/10", "-13/4200", "9/14000", "17597/77616000", "4873/218400000",
};

/// Coefficients of x^2, x^4, ..., x^10 in log(x / sin x).
inline constexpr std::array<std::string_view, 5> sinc_tau2 = {"1/6", "1/180", "1/2835", "1/37800", "1/467775"};

struct KnRow {
    int n;
    double a;
    double quadrature;
    double asymptotic;
};

/// K_n = int_0^inf e^{-ax} (1 - sin^2 x / x^2)^n dx, printed to 8 decimals.
inline constexpr std::array<KnRow, 24> kn_table = {{
    {100, 1.0, 0.02707847, 0.02689533},  {200, 1.0, 0.01884203, 0.01880232},
    {500, 1.0, 0.01181371, 0.01180983},  {1000, 1.0, 0.00833214, 0.00833153},
    {2000, 1.0, 0.00588457, 0.00588447}, {4000, 1.0, 0.00415855, 0.00415854},
    {100, 1.5, 0.00523230, 0.00521489},  {200, 1.5, 0.00364706, 0.00364449},
    {500, 1.5, 0.00228888, 0.00228866},  {1000, 1.5, 0.00161452, 0.00161448},
    {2000, 1.5, 0.00114026, 0.00114025}, {4000, 1.5, 0.00080580, 0.00080580},
    {100, 0.5, 0.19606514, 0.19692975},  {200, 0.5, 0.13567443, 0.13484945},
    {500, 0.5, 0.08386120, 0.08361625},  {1000, 0.5, 0.05878333, 0.05873199},
    {2000, 0.5, 0.04139902, 0.04139062}, {4000, 0.5, 0.02921970, 0.02921838},
    {100, 2.0, 0.00108887, 0.00108697},  {200, 2.0, 0.00075359, 0.00075332},
    {500, 2.0, 0.00047067, 0.00047064},  {1000, 2.0, 0.00033143, 0.00033143},
    {2000, 2.0, 0.00023387, 0.00023387}, {4000, 2.0, 0.00016520, 0.00016520},
}};

struct BallErrorColumn {
    std::string_view a;  // exponent a as p/q
    std::array<double, 5> rel_err;  // k = 0 .. 4
};

/// |relative error| of the truncated L(nu, a; n) expansion at nu = 4/3, n = 100.
inline constexpr std::string_view ball_error_nu = "4/3";
inline constexpr int ball_error_n = 100;
inline constexpr std::array<BallErrorColumn, 3> ball_error_table = {{
    {"8/3", {4.664e-3, 2.738e-6, 3.307e-8, 4.006e-10, 2.914e-12}},
    {"2/3", {6.676e-4, 8.987e-7, 6.661e-10, 2.405e-11, 3.655e-13}},
    {"10/3", {6.565e-3, 1.047e-5, 6.041e-8, 5.961e-10, 2.743e-12}},
}};

}  // namespace sincasym::reference
