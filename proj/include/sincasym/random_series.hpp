#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sincasym/power_series.hpp"

namespace sincasym {

/// Deterministic generator of small-height rational series for property checks.
class RandomSeries {
public:
    explicit RandomSeries(std::uint64_t seed) : rng_(seed) {}

    Rational rational(int height = 9) {
        std::uniform_int_distribution<long long> num(-height, height);
        std::uniform_int_distribution<long long> den(1, height);
        return Rational(num(rng_), den(rng_));
    }

    Rational positive_rational(int height = 9) {
        std::uniform_int_distribution<long long> num(1, height);
        std::uniform_int_distribution<long long> den(1, height);
        return Rational(num(rng_), den(rng_));
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    PowerSeries series(int order) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
        for (auto& c : v) c = rational();
        return PowerSeries(std::move(v));
    }

    /// Constant term exactly 1.
    PowerSeries unit_series(int order) {
        PowerSeries s = series(order);
        std::vector<Rational> v = s.coeffs();
        v[0] = Rational(1);
        return PowerSeries(std::move(v));
    }

    /// Zero constant term and nonzero linear term.
    PowerSeries invertible_series(int order) {
        std::vector<Rational> v = series(order).coeffs();
        v[0] = Rational(0);
        if (order >= 1) v[1] = positive_rational();
        return PowerSeries(std::move(v));
    }

    PowerSeries even_series(int order) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
        for (std::size_t k = 0; k < v.size(); k += 2) v[k] = rational();
        return PowerSeries(std::move(v), Parity::even);
    }

    PowerSeries odd_series(int order) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
        for (std::size_t k = 1; k < v.size(); k += 2) v[k] = rational();
        return PowerSeries(std::move(v), Parity::odd);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace sincasym
