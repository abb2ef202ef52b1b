#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkgf/algebraic_equation.hpp"
#include "walkgf/rational.hpp"

namespace walkgf {

// Power series in t truncated at a fixed order, with exact coefficients.
// Just enough arithmetic for residual checks; no lazy tails.
class TruncatedSeries {
public:
    TruncatedSeries(int order, std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(order, {});
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = a;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = zero(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j < r.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

private:
    std::vector<Rational> coeffs_;
};

struct VerifyReport {
    bool pass = false;
    int checked_order = 0;
    std::optional<int> first_failing_order;
    std::optional<Rational> failing_coefficient;

    std::string to_text() const {
        if (pass)
            return "PASS: residual vanishes to O(t^" + std::to_string(checked_order + 1) + ")";
        return "FAIL: first nonzero residual at order " +
               std::to_string(*first_failing_order) + " (coefficient " +
               walkgf::to_string(*failing_coefficient) + ")";
    }
};

// Coefficients of Q(t, series) through t^N: Horner in X over truncated series.
inline std::vector<Rational> residual_series(const AlgebraicEquation& eq,
                                             std::span<const Rational> series, int N) {
    if (N < 0) throw UsageError("truncation order must be nonnegative");
    if (series.size() < static_cast<std::size_t>(N) + 1)
        throw UsageError("series too short for requested truncation order");
    TruncatedSeries x(N, {series.begin(), series.begin() + N + 1});
    unsigned dx = eq.degree_in_x();
    // layer k: coefficient of X^k as a series in t
    std::vector<TruncatedSeries> layers(dx + 1, TruncatedSeries::zero(N));
    for (const auto& term : eq.poly().terms()) {
        unsigned ex = term.mono.exponent(AlgebraicEquation::x_index);
        unsigned et = term.mono.exponent(AlgebraicEquation::t_index);
        if (et <= static_cast<unsigned>(N)) {
            std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
            c[et] = term.coef;
            layers[ex] = layers[ex] + TruncatedSeries(N, std::move(c));
        }
    }
    TruncatedSeries acc = layers[dx];
    for (unsigned k = dx; k-- > 0;) acc = acc * x + layers[k];
    return acc.coefficients();
}

// Substitutes the truncated series for X and requires every coefficient up to
// t^N to vanish. N must exceed the t-degree of the equation by at least 5 so
// the check has real discriminating power.
inline VerifyReport verify_series(const AlgebraicEquation& eq,
                                  std::span<const Rational> series, int N) {
    if (N < static_cast<int>(eq.degree_in_t()) + 5)
        throw UsageError("truncation order too small: need N >= deg_t + 5");
    auto residual = residual_series(eq, series, N);
    VerifyReport report;
    report.checked_order = N;
    report.pass = true;
    for (int k = 0; k <= N; ++k) {
        if (residual[static_cast<std::size_t>(k)] != 0) {
            report.pass = false;
            report.first_failing_order = k;
            report.failing_coefficient = residual[static_cast<std::size_t>(k)];
            break;
        }
    }
    return report;
}

} // namespace walkgf
