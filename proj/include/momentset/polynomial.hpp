#pragma once

#include "momentset/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace momentset {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficient(k) is the coefficient of x^k. Trailing zeros are trimmed on
/// construction, so equality is coefficient-wise and the zero polynomial is
/// the unique empty one (its degree() is an empty optional, not a sentinel
/// number).
class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& coefficient(std::size_t k) const;
    const Rational& leading_coefficient() const; // pre: not zero

    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;

    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    bool operator==(const Polynomial&) const = default;

    /// Human-readable form in ascending powers, e.g. "1 + 1/3 t - 1/4 t^2".
    std::string str(std::string_view var = "t") const;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division p = q * quotient + remainder with deg(remainder) < deg(q).
/// Throws std::domain_error when q is zero.
PolyDivision divmod(const Polynomial& p, const Polynomial& q);

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
Polynomial gcd(Polynomial p, Polynomial q);

} // namespace momentset
