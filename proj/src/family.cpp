#include "momentset/family.hpp"

#include "momentset/series.hpp"

namespace momentset {

MixtureParams family_weights(const Rational& a, const Rational& b) {
    const Rational one(1);
    const Rational two(2);
    MixtureParams p;
    p.a = a;
    p.b = b;
    p.w0 = b;
    p.wminus = (one - a - b) / two;
    p.wplus = (one + a - b) / two;
    if (b.is_negative())
        throw ConstraintViolation("b >= 0", "mixture weight constraint violated: b >= 0 fails for b = " + b.str());
    if (p.wminus.is_negative())
        throw ConstraintViolation("1 - a - b >= 0",
                                  "mixture weight constraint violated: 1 - a - b >= 0 fails for a = " + a.str() +
                                      ", b = " + b.str());
    if (p.wplus.is_negative())
        throw ConstraintViolation("1 + a - b >= 0",
                                  "mixture weight constraint violated: 1 + a - b >= 0 fails for a = " + a.str() +
                                      ", b = " + b.str());
    return p;
}

RatioSequence::RatioSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty() || values_[0] != Rational(1))
        throw std::invalid_argument("ratio sequence must start with 1");
}

MomentSequence::MomentSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty() || values_[0] != Rational(1))
        throw std::invalid_argument("moment sequence must start with mu_0 = 1");
}

CumulantSequence::CumulantSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty() || !values_[0].is_zero())
        throw std::invalid_argument("cumulant sequence must start with kappa_0 = 0");
}

RatioSequence family_ratio_sequence(const Rational& a, const Rational& b, std::size_t n_terms) {
    family_weights(a, b);
    std::vector<Rational> r(n_terms + 1);
    r[0] = Rational(1);
    Rational even = Rational(1) - b;
    for (std::size_t k = 1; k <= n_terms; ++k)
        r[k] = (k % 2 == 1) ? a : even;
    return RatioSequence(std::move(r));
}

MomentSequence family_moments(const Rational& a, const Rational& b, std::size_t n_terms) {
    return ratios_to_moments(family_ratio_sequence(a, b, n_terms));
}

MomentSequence ratios_to_moments(const RatioSequence& r) {
    std::vector<Rational> m(r.size());
    BigInt fact(1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k > 0)
            fact *= k;
        m[k] = r[k] * Rational(fact);
    }
    return MomentSequence(std::move(m));
}

RatioSequence moments_to_ratios(const MomentSequence& m) {
    std::vector<Rational> r(m.size());
    BigInt fact(1);
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k > 0)
            fact *= k;
        r[k] = m[k] / Rational(fact);
    }
    return RatioSequence(std::move(r));
}

CumulantSequence moments_to_cumulants(const MomentSequence& m) {
    RatioSequence r = moments_to_ratios(m);
    std::vector<Rational> coeffs(r.values().begin(), r.values().end());
    const std::size_t order = coeffs.size() - 1;
    TruncatedSeries g = series_log(TruncatedSeries(order, std::move(coeffs)));
    std::vector<Rational> kappa(m.size());
    BigInt fact(1);
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k > 0)
            fact *= k;
        kappa[k] = g.coefficient(k) * Rational(fact);
    }
    return CumulantSequence(std::move(kappa));
}

MomentSequence cumulants_to_moments(const CumulantSequence& k) {
    std::vector<Rational> q(k.size());
    BigInt fact(1);
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j > 0)
            fact *= j;
        q[j] = k[j] / Rational(fact);
    }
    const std::size_t order = q.size() - 1;
    TruncatedSeries f = series_exp(TruncatedSeries(order, std::move(q)));
    std::vector<Rational> mu(k.size());
    fact = 1;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j > 0)
            fact *= j;
        mu[j] = f.coefficient(j) * Rational(fact);
    }
    return MomentSequence(std::move(mu));
}

std::complex<double> cf_eval(const Rational& a, const Rational& b, std::complex<double> t) {
    const std::complex<double> i(0.0, 1.0);
    if (t == i || t == -i)
        throw std::domain_error("characteristic function has poles at t = +-i");
    if (std::abs(t.imag()) >= 1.0)
        throw std::domain_error("characteristic function evaluated outside the strip |Im t| < 1");
    std::complex<double> t2 = t * t;
    return (1.0 + i * a.to_double() * t + b.to_double() * t2) / (1.0 + t2);
}

} // namespace momentset
