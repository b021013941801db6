#include "momentset/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace momentset {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& Polynomial::coefficient(std::size_t k) const {
    if (k >= coeffs_.size())
        return kZero;
    return coeffs_[k];
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = Rational(BigInt(k)) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        v[k] = -coeffs_[k];
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero())
        return Polynomial();
    std::vector<Rational> v(p.coeffs_.size());
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
        v[k] = c * p.coeffs_[k];
    return Polynomial(std::move(v));
}

std::string Polynomial::str(std::string_view var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational mag = abs(c);
        if (first) {
            if (c.is_negative())
                out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        bool unit = mag == Rational(1);
        if (k == 0 || !unit)
            out << mag.str();
        if (k > 0) {
            if (!unit)
                out << " ";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

PolyDivision divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero())
        throw std::domain_error("polynomial division by zero");
    Polynomial remainder = p;
    Polynomial quotient;
    const std::size_t dq = *q.degree();
    while (!remainder.is_zero() && *remainder.degree() >= dq) {
        std::size_t shift = *remainder.degree() - dq;
        Rational factor = remainder.leading_coefficient() / q.leading_coefficient();
        Polynomial term = Polynomial::monomial(factor, shift);
        quotient += term;
        remainder -= term * q;
    }
    return {std::move(quotient), std::move(remainder)};
}

Polynomial gcd(Polynomial p, Polynomial q) {
    while (!q.is_zero()) {
        Polynomial r = divmod(p, q).remainder;
        p = std::move(q);
        q = std::move(r);
    }
    if (p.is_zero())
        return p;
    return reciprocal(p.leading_coefficient()) * p;
}

} // namespace momentset
