#include "doctest.h"

#include "momentset/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

using momentset::BigInt;
using momentset::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 5).numerator() == 0);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse accepts integers, fractions and exact decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK(Rational::parse("-10/-4") == Rational(5, 2));
    CHECK(Rational::parse("5.1") == Rational(51, 10));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("5.") == Rational(5));
    CHECK(Rational::parse(" 2/3 ") == Rational(2, 3));
    CHECK(Rational::parse("+4") == Rational(4));
}

TEST_CASE("rational parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    // Compound over many steps stays exact: sum of 1/k(k+1) telescopes.
    Rational sum(0);
    for (int k = 1; k <= 200; ++k)
        sum += Rational(1, BigInt(k) * (k + 1));
    CHECK(sum == Rational(200, 201));
}

TEST_CASE("rational ordering uses cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("rational string form is canonical") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(3, -4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));

    std::ostringstream out;
    out << Rational(1, 2);
    CHECK(out.str() == "1/2");
}

TEST_CASE("rational to_double is accurate") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-1, 4).to_double() == -0.25);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const double big = Rational(BigInt(momentset::factorial(25)), BigInt(3)).to_double();
    CHECK(big == doctest::Approx(1.551121004333098e25 / 3.0).epsilon(1e-12));
    CHECK(Rational(0).to_double() == 0.0);
}

TEST_CASE("rational helpers: abs, pow, reciprocal, factorial") {
    CHECK(momentset::abs(Rational(-2, 3)) == Rational(2, 3));
    CHECK(momentset::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(momentset::pow(Rational(5), 0) == Rational(1));
    CHECK(momentset::reciprocal(Rational(-2, 5)) == Rational(-5, 2));
    CHECK_THROWS_AS(momentset::reciprocal(Rational(0)), std::domain_error);
    CHECK(momentset::factorial(0) == 1);
    CHECK(momentset::factorial(5) == 120);
    CHECK(momentset::factorial(20) == BigInt("2432902008176640000"));
}
