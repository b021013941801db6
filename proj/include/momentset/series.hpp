#pragma once

#include "momentset/polynomial.hpp"
#include "momentset/rational.hpp"

#include <span>
#include <vector>

namespace momentset {

/// Truncated formal power series with exact rational coefficients: a series
/// of order N stores the coefficients of x^0..x^N and knows nothing beyond.
/// Binary operations truncate to the smaller order and record it; they never
/// extrapolate.
class TruncatedSeries {
public:
    /// coeffs.size() must equal order + 1.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& coefficient(std::size_t k) const;

    TruncatedSeries truncated(std::size_t order) const; // order <= order()

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// First N+1 coefficients of the formal quotient P/Q by long division.
/// Throws std::domain_error when Q(0) = 0 (pole at the origin).
TruncatedSeries expand_rational(const Polynomial& P, const Polynomial& Q, std::size_t order);

/// Formal logarithm of a series with constant term 1, to the same order,
/// via the coefficient recursion g_n = f_n - (1/n) * sum_{k=1}^{n-1} k g_k f_{n-k}.
/// Throws std::invalid_argument when f(0) != 1.
TruncatedSeries series_log(const TruncatedSeries& f);

/// Formal exponential of a series with constant term 0, to the same order,
/// via f_n = (1/n) * sum_{k=1}^{n} k g_k f_{n-k} with f_0 = 1.
/// Throws std::invalid_argument when g(0) != 0.
TruncatedSeries series_exp(const TruncatedSeries& g);

} // namespace momentset
