#include "momentset/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace momentset {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1)
        throw std::invalid_argument("series coefficient count does not match order");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
    std::vector<Rational> v(order + 1);
    for (std::size_t k = 0; k <= order; ++k)
        v[k] = p.coefficient(k);
    return TruncatedSeries(order, std::move(v));
}

const Rational& TruncatedSeries::coefficient(std::size_t k) const {
    if (k >= coeffs_.size())
        throw std::out_of_range("series coefficient index beyond truncation order");
    return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order >= coeffs_.size())
        throw std::out_of_range("cannot extend a truncated series");
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1);
    return TruncatedSeries(order, std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        v[k] = f.coeffs_[k] + g.coeffs_[k];
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        v[k] = f.coeffs_[k] - g.coeffs_[k];
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            v[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries expand_rational(const Polynomial& P, const Polynomial& Q, std::size_t order) {
    const Rational& q0 = Q.coefficient(0);
    if (q0.is_zero())
        throw std::domain_error("rational expansion has a pole at the origin (Q(0) = 0)");
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = P.coefficient(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational& qk = Q.coefficient(k);
            if (!qk.is_zero())
                acc -= qk * c[n - k];
        }
        c[n] = acc / q0;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f.coefficient(0) != Rational(1))
        throw std::invalid_argument("series logarithm requires constant term 1");
    std::size_t n = f.order();
    std::vector<Rational> g(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = f.coefficient(m);
        for (std::size_t k = 1; k < m; ++k) {
            if (g[k].is_zero() || f.coefficient(m - k).is_zero())
                continue;
            acc -= Rational(BigInt(k), BigInt(m)) * g[k] * f.coefficient(m - k);
        }
        g[m] = acc;
    }
    return TruncatedSeries(n, std::move(g));
}

TruncatedSeries series_exp(const TruncatedSeries& g) {
    if (!g.coefficient(0).is_zero())
        throw std::invalid_argument("series exponential requires constant term 0");
    std::size_t n = g.order();
    std::vector<Rational> f(n + 1);
    f[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (g.coefficient(k).is_zero() || f[m - k].is_zero())
                continue;
            acc += Rational(BigInt(k), BigInt(m)) * g.coefficient(k) * f[m - k];
        }
        f[m] = acc;
    }
    return TruncatedSeries(n, std::move(f));
}

} // namespace momentset
