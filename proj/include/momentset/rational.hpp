#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace momentset {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. All arithmetic is exact; nothing ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    /// Parses "p", "p/q" and exact decimal literals ("5.1" -> 51/10).
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_.is_zero() ? 0 : (num_ < 0 ? -1 : 1); }

    /// Nearest double, computed by binary scaling so that values whose
    /// numerator or denominator exceeds the double range still convert.
    double to_double() const;

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Normalized representation makes member-wise equality correct.
    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    BigInt num_;
    BigInt den_; // > 0, coprime with num_

    void normalize();
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
Rational reciprocal(const Rational& r); // throws std::domain_error on 0

BigInt factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace momentset
