#include "doctest.h"

#include "momentset/cumulant_lab.hpp"
#include "momentset/family.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

using momentset::BigInt;
using momentset::classify_cumulant_ratios;
using momentset::CumulantClassification;
using momentset::derivative_chain;
using momentset::DerivativeChain;
using momentset::GaussianLog;
using momentset::MonotonicityReport;
using momentset::NotFinitePrefix;
using momentset::Polynomial;
using momentset::Rational;
using momentset::RationalLog;
using momentset::TruncatedSeries;
using momentset::ViolatesTheoremShape;
using momentset::testing::shifted_h_taylor;

namespace {

std::vector<Rational> seq(std::vector<Rational> values) { return values; }

std::vector<Rational> normalized_cumulants(const momentset::CumulantSequence& kappa) {
    std::vector<Rational> q(kappa.size());
    for (std::size_t k = 0; k < kappa.size(); ++k)
        q[k] = kappa[k] / Rational(BigInt(momentset::factorial(static_cast<unsigned>(k))));
    return q;
}

} // namespace

TEST_CASE("mixing exponent series starts as expected") {
    const TruncatedSeries w = momentset::mixing_exponent_series(6);
    const std::vector<Rational> expected{Rational(0), Rational(-6), Rational(9, 10),
                                         Rational(-1), Rational(1),  Rational(-1),
                                         Rational(1)};
    for (std::size_t j = 0; j <= 6; ++j)
        CHECK(w.coefficient(j) == expected[j]);
}

TEST_CASE("reference log ratios take exactly four distinct values") {
    const std::vector<Rational> q = momentset::reference_log_ratios(10);
    const std::vector<Rational> expected{Rational(0), Rational(0),     Rational(6),
                                         Rational(0), Rational(9, 10), Rational(0),
                                         Rational(1), Rational(0),     Rational(1),
                                         Rational(0), Rational(1)};
    REQUIRE(q.size() == 11);
    for (std::size_t k = 0; k <= 10; ++k)
        CHECK(q[k] == expected[k]);

    const std::set<Rational> distinct = momentset::distinct_values(q);
    CHECK(distinct ==
          std::set<Rational>{Rational(0), Rational(6), Rational(9, 10), Rational(1)});

    CHECK_THROWS_AS(momentset::reference_log_ratios(5), std::invalid_argument);
}

TEST_CASE("derivative chain entries match hand-computed polynomials") {
    const DerivativeChain chain = derivative_chain(2);
    REQUIRE(chain.entries.size() == 3);
    CHECK(chain.entries[0] == Polynomial::constant(Rational(1)));

    const Polynomial p3{std::vector<Rational>{Rational(6), Rational(51, 5), Rational(27, 5),
                                              Rational(1, 5)}};
    CHECK(chain.entries[1] == p3);

    // P_3 = 1 + (5 + s/5)(1 + s)^2, an independent assembly.
    const Polynomial one_plus_s{std::vector<Rational>{Rational(1), Rational(1)}};
    const Polynomial assembled =
        Polynomial::constant(Rational(1)) +
        Polynomial({Rational(5), Rational(1, 5)}) * one_plus_s * one_plus_s;
    CHECK(chain.entries[1] == assembled);

    const Polynomial p6{std::vector<Rational>{Rational(189, 5), Rational(618, 5),
                                              Rational(4191, 25), Rational(2794, 25),
                                              Rational(826, 25), Rational(54, 25),
                                              Rational(1, 25)}};
    CHECK(chain.entries[2] == p6);
}

TEST_CASE("derivative chain keeps degree, leading coefficient and sign structure") {
    const DerivativeChain chain = derivative_chain(12);
    for (std::size_t k = 0; k <= 12; ++k) {
        const Polynomial& p = chain.entries[k];
        REQUIRE(p.degree() == 3 * k);
        CHECK(p.leading_coefficient() == momentset::pow(Rational(1, 5), static_cast<unsigned>(k)));
        for (const Rational& c : p.coefficients())
            CHECK(c >= Rational(0));
    }
}

TEST_CASE("derivative chain agrees with the Taylor expansion of h") {
    // k! (1+s0)^{2k} [x^k] h(s0+x)/h(s0) must equal (-1)^k P_{3k}(s0); the
    // left side never touches the recursion, so this certifies the chain.
    const std::size_t order = 12;
    const DerivativeChain chain = derivative_chain(order);
    const std::vector<Rational> spots{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                                      Rational(7, 3)};
    for (const Rational& s0 : spots) {
        const TruncatedSeries taylor = shifted_h_taylor(s0, order);
        const Rational c = Rational(1) + s0;
        Rational fact(1);
        Rational c_pow(1);
        for (std::size_t k = 0; k <= order; ++k) {
            if (k > 0) {
                fact = fact * Rational(static_cast<long long>(k));
                c_pow = c_pow * c * c;
            }
            const Rational lhs = fact * c_pow * taylor.coefficient(k);
            const Rational rhs =
                (k % 2 == 0) ? chain.entries[k](s0) : -chain.entries[k](s0);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("h evaluates and decays like a Laplace transform") {
    CHECK(momentset::h_eval(0.0) == 1.0);
    CHECK(momentset::h_eval(1.0) == doctest::Approx(std::exp(-5.6)).epsilon(1e-14));
    double previous = momentset::h_eval(0.0);
    for (double s : {0.5, 1.0, 2.0, 4.0}) {
        const double value = momentset::h_eval(s);
        CHECK(value > 0.0);
        CHECK(value < previous);
        previous = value;
    }
}

TEST_CASE("complete monotonicity report covers exact and spot checks") {
    const std::vector<Rational> spots{Rational(0), Rational(1), Rational(2)};
    const MonotonicityReport report = momentset::check_complete_monotonicity(8, spots);
    CHECK(report.all_ok);
    REQUIRE(report.entries.size() == 9);
    REQUIRE(report.spot_checks.size() == 24); // k = 1..8 at each of 3 points
    for (const auto& entry : report.entries) {
        CHECK(entry.degree_exact);
        CHECK(entry.leading_exact);
        CHECK(entry.coefficients_nonnegative);
    }
    for (const auto& spot : report.spot_checks) {
        CHECK(spot.sign_matches);
        const double sign = (spot.k % 2 == 0) ? 1.0 : -1.0;
        CHECK(sign * spot.derivative_value > 0.0);
    }
    CHECK_THROWS_AS(momentset::check_complete_monotonicity(0, spots), std::invalid_argument);
    CHECK_THROWS_AS(momentset::check_complete_monotonicity(3, seq({Rational(-1)})),
                    std::invalid_argument);
}

TEST_CASE("gaussian cumulant prefixes classify as gaussian") {
    const std::vector<Rational> normal_moments{Rational(1), Rational(0), Rational(1),
                                               Rational(0), Rational(3), Rational(0),
                                               Rational(15)};
    const std::vector<Rational> q = normalized_cumulants(
        momentset::moments_to_cumulants(momentset::MomentSequence(normal_moments)));
    const CumulantClassification c = classify_cumulant_ratios(q);
    const auto* gauss = std::get_if<GaussianLog>(&c);
    REQUIRE(gauss != nullptr);
    CHECK(gauss->shift == Rational(0));
    CHECK(gauss->variance == Rational(1));

    const std::vector<Rational> shifted{Rational(0), Rational(3, 2), Rational(5, 2),
                                        Rational(0), Rational(0),    Rational(0)};
    const CumulantClassification cs = classify_cumulant_ratios(shifted);
    const auto* shifted_gauss = std::get_if<GaussianLog>(&cs);
    REQUIRE(shifted_gauss != nullptr);
    CHECK(shifted_gauss->shift == Rational(3, 2));
    CHECK(shifted_gauss->variance == Rational(5));

    const std::vector<Rational> point{Rational(0), Rational(3), Rational(0), Rational(0),
                                      Rational(0)};
    const CumulantClassification cp = classify_cumulant_ratios(point);
    const auto* point_gauss = std::get_if<GaussianLog>(&cp);
    REQUIRE(point_gauss != nullptr);
    CHECK(point_gauss->shift == Rational(3));
    CHECK(point_gauss->variance == Rational(0));
}

TEST_CASE("the reference ratios classify as a sixth-degree rational log") {
    const std::vector<Rational> q = momentset::reference_log_ratios(12);
    const CumulantClassification c = classify_cumulant_ratios(q);
    const auto* log = std::get_if<RationalLog>(&c);
    REQUIRE(log != nullptr);
    CHECK(log->denominator_t == "1 + t^2");
    CHECK(log->form.reduced_denominator ==
          Polynomial({Rational(1), Rational(0), Rational(-1)}));
    CHECK(log->form.reduced_numerator ==
          Polynomial({Rational(0), Rational(0), Rational(6), Rational(0), Rational(-51, 10),
                      Rational(0), Rational(1, 10)}));
    REQUIRE(log->numerator_t.has_value());
    CHECK(*log->numerator_t ==
          Polynomial({Rational(0), Rational(0), Rational(-6), Rational(0), Rational(-51, 10),
                      Rational(0), Rational(-1, 10)}));
    CHECK(log->form.reduced_numerator.degree() == 6u);
}

TEST_CASE("cumulant prefixes outside the admissible shapes are reported") {
    // Exponential normalized cumulants 1/k never stabilize: no finite prefix
    // verdict is possible.
    std::vector<Rational> exponential(13, Rational(0));
    for (std::size_t k = 1; k < exponential.size(); ++k)
        exponential[k] = Rational(1, static_cast<long long>(k));
    CHECK(std::holds_alternative<NotFinitePrefix>(classify_cumulant_ratios(exponential)));

    // Period three forces a denominator dividing 1 - u^3, which is not an
    // admissible pole configuration. The prefix must end mid-cycle: a run of
    // equal values at the end would witness a period-1 tail instead.
    std::vector<Rational> period3(14, Rational(0));
    for (std::size_t k = 1; k < period3.size(); k += 3)
        period3[k] = Rational(1);
    const CumulantClassification c3 = classify_cumulant_ratios(period3);
    CHECK(std::holds_alternative<ViolatesTheoremShape>(c3));

    // One term shorter, the trailing zeros admit preperiod 11 with period 1,
    // so the whole prefix is consumed as a polynomial head: an admissible
    // shape, reported with denominator 1.
    period3.pop_back();
    const CumulantClassification c_short = classify_cumulant_ratios(period3);
    const auto* absorbed = std::get_if<RationalLog>(&c_short);
    REQUIRE(absorbed != nullptr);
    CHECK(absorbed->denominator_t == "1");
}

TEST_CASE("one-sided denominators map back to complex linear factors") {
    const std::vector<Rational> plus{Rational(0), Rational(1), Rational(1), Rational(1),
                                     Rational(1), Rational(1)};
    const CumulantClassification cp = classify_cumulant_ratios(plus);
    const auto* log_plus = std::get_if<RationalLog>(&cp);
    REQUIRE(log_plus != nullptr);
    CHECK(log_plus->denominator_t == "1 - i t");
    CHECK_FALSE(log_plus->numerator_t.has_value()); // odd powers of u appear

    const std::vector<Rational> minus{Rational(0), Rational(-1), Rational(1), Rational(-1),
                                      Rational(1), Rational(-1)};
    const CumulantClassification cm = classify_cumulant_ratios(minus);
    const auto* log_minus = std::get_if<RationalLog>(&cm);
    REQUIRE(log_minus != nullptr);
    CHECK(log_minus->denominator_t == "1 + i t");
    CHECK_FALSE(log_minus->numerator_t.has_value());
}

TEST_CASE("cumulant classifier validates its input") {
    CHECK_THROWS_AS(classify_cumulant_ratios(seq({Rational(1), Rational(0), Rational(0),
                                                  Rational(0), Rational(0)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_cumulant_ratios(seq({Rational(0), Rational(1)})),
                    std::invalid_argument);
}
