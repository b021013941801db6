#include "momentset/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace momentset {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

[[noreturn]] void parse_fail(std::string_view text) {
    throw std::invalid_argument("cannot parse rational from \"" + std::string(text) + "\"");
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    if (s.empty())
        parse_fail(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num_part = s.substr(0, slash);
        std::string_view den_part = s.substr(slash + 1);
        bool den_negative = false;
        if (!den_part.empty() && (den_part.front() == '+' || den_part.front() == '-')) {
            den_negative = den_part.front() == '-';
            den_part.remove_prefix(1);
        }
        if (!all_digits(num_part) || !all_digits(den_part))
            parse_fail(text);
        BigInt num{std::string(num_part)};
        BigInt den{std::string(den_part)};
        if (negative)
            num = -num;
        if (den_negative)
            den = -den;
        if (den.is_zero())
            parse_fail(text);
        return Rational(std::move(num), std::move(den));
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            parse_fail(text);
        if (!int_part.empty() && !all_digits(int_part))
            parse_fail(text);
        if (!frac_part.empty() && !all_digits(frac_part))
            parse_fail(text);
        BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
        BigInt num = int_part.empty() ? BigInt(0) : BigInt{std::string(int_part)};
        num *= scale;
        if (!frac_part.empty())
            num += BigInt{std::string(frac_part)};
        if (negative)
            num = -num;
        return Rational(std::move(num), std::move(scale));
    }

    if (!all_digits(s))
        parse_fail(text);
    BigInt num{std::string(s)};
    if (negative)
        num = -num;
    return Rational(std::move(num));
}

double Rational::to_double() const {
    if (num_.is_zero())
        return 0.0;
    // Scale so the integer quotient keeps ~64 guard bits, then undo with ldexp.
    long shift = 64 + static_cast<long>(mp::msb(den_)) - static_cast<long>(mp::msb(mp::abs(num_)));
    if (shift < 0)
        shift = 0;
    BigInt scaled = (num_ << static_cast<unsigned>(shift)) / den_;
    return std::ldexp(scaled.convert_to<double>(), -static_cast<int>(shift));
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero())
        throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational factor = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u)
            result *= factor;
        e >>= 1u;
        if (e > 0)
            factor *= factor;
    }
    return result;
}

Rational reciprocal(const Rational& r) {
    if (r.is_zero())
        throw std::domain_error("reciprocal of zero");
    return Rational(r.denominator(), r.numerator());
}

BigInt factorial(unsigned n) {
    BigInt result(1);
    for (unsigned k = 2; k <= n; ++k)
        result *= k;
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace momentset
