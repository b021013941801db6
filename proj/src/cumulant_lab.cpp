#include "momentset/cumulant_lab.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace momentset {

namespace {

const Polynomial& poly_one_plus_x() {
    static const Polynomial p{std::vector<Rational>{Rational(1), Rational(1)}};
    return p;
}

std::string denominator_in_t(const Polynomial& d) {
    // Admissible reduced denominators in u = i t, constant term normalized to 1.
    static const Polynomial one = Polynomial::constant(Rational(1));
    static const Polynomial one_minus_u{std::vector<Rational>{Rational(1), Rational(-1)}};
    static const Polynomial one_minus_u2{std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}};
    if (d == one)
        return "1";
    if (d == one_minus_u)
        return "1 - i t";
    if (d == poly_one_plus_x())
        return "1 + i t";
    if (d == one_minus_u2)
        return "1 + t^2";
    return {};
}

// A numerator with only even powers of u maps to a real polynomial in t:
// u^{2j} = (i t)^{2j} = (-1)^j t^{2j}.
std::optional<Polynomial> numerator_in_t(const Polynomial& p) {
    std::vector<Rational> coeffs(p.coefficients().begin(), p.coefficients().end());
    for (std::size_t k = 1; k < coeffs.size(); k += 2)
        if (!coeffs[k].is_zero())
            return std::nullopt;
    for (std::size_t k = 2; k < coeffs.size(); k += 4)
        coeffs[k] = -coeffs[k];
    return Polynomial(std::move(coeffs));
}

} // namespace

CumulantClassification classify_cumulant_ratios(std::span<const Rational> q) {
    if (q.size() < 5)
        throw std::invalid_argument("need at least 5 normalized cumulants");
    if (!q[0].is_zero())
        throw std::invalid_argument("kappa_0 must be 0, got " + q[0].str());

    bool tail_vanishes = true;
    for (std::size_t k = 3; k < q.size(); ++k)
        if (!q[k].is_zero()) {
            tail_vanishes = false;
            break;
        }
    if (tail_vanishes)
        return GaussianLog{q[1], Rational(2) * q[2]};

    auto desc = detect_eventual_periodicity(q, q.size() / 2);
    if (!desc)
        return NotFinitePrefix{};

    RationalForm form = szego_reconstruct(*desc);
    std::string denom_t = denominator_in_t(form.reduced_denominator);
    if (denom_t.empty()) {
        std::ostringstream msg;
        msg << "reduced denominator " << form.reduced_denominator.str("u")
            << " is not a divisor of 1 - u^2: the log-characteristic function of an "
               "analytic characteristic function can only have poles at t = +-i";
        return ViolatesTheoremShape{msg.str()};
    }
    RationalLog result{std::move(form), std::move(denom_t), std::nullopt};
    result.numerator_t = numerator_in_t(result.form.reduced_numerator);
    return result;
}

DerivativeChain derivative_chain(std::size_t k_max) {
    // For h = exp(w), w(s) = -1 + 1/(1+s) - 5s - s^2/10:
    //   w'(s) = -1/(1+s)^2 - 5 - s/5, so h' = -h P_3 / (1+s)^2 with
    //   P_3(s) = 1 + (5 + s/5)(1+s)^2 = 6 + 51/5 s + 27/5 s^2 + 1/5 s^3.
    // Differentiating h^(k) = (-1)^k h P_{3k} / (1+s)^{2k} once and
    // substituting h' gives the recursion
    //   P_{3(k+1)} = P_3 P_{3k} + 2k (1+s) P_{3k} - (1+s)^2 P_{3k}'.
    const Polynomial p3{std::vector<Rational>{Rational(6), Rational(51, 5), Rational(27, 5), Rational(1, 5)}};
    const Polynomial one_plus_s = poly_one_plus_x();
    const Polynomial one_plus_s_sq = one_plus_s * one_plus_s;

    DerivativeChain chain;
    chain.entries.reserve(k_max + 1);
    chain.entries.push_back(Polynomial::constant(Rational(1)));
    for (std::size_t k = 0; k < k_max; ++k) {
        const Polynomial& pk = chain.entries.back();
        Polynomial next = p3 * pk;
        next += Rational(BigInt(2 * k)) * (one_plus_s * pk);
        next -= one_plus_s_sq * pk.derivative();
        chain.entries.push_back(std::move(next));
    }
    return chain;
}

double h_eval(double s) {
    return std::exp(-1.0 + 1.0 / (1.0 + s) - 5.0 * s - s * s / 10.0);
}

MonotonicityReport check_complete_monotonicity(std::size_t k_max,
                                               std::span<const Rational> spot_points) {
    if (k_max < 1)
        throw std::invalid_argument("k_max must be at least 1");
    DerivativeChain chain = derivative_chain(k_max);

    MonotonicityReport report;
    report.all_ok = true;
    for (std::size_t k = 0; k <= k_max; ++k) {
        const Polynomial& p = chain.entries[k];
        ChainEntryCheck check;
        check.k = k;
        check.degree_exact = p.degree() == 3 * k;
        check.leading_exact = !p.is_zero() && p.leading_coefficient() == pow(Rational(1, 5), static_cast<unsigned>(k));
        check.coefficients_nonnegative = true;
        for (const Rational& c : p.coefficients())
            if (c.is_negative()) {
                check.coefficients_nonnegative = false;
                break;
            }
        report.all_ok = report.all_ok && check.degree_exact && check.leading_exact &&
                        check.coefficients_nonnegative;
        report.entries.push_back(std::move(check));
    }

    for (const Rational& s : spot_points) {
        if (s.is_negative())
            throw std::invalid_argument("spot points must satisfy s >= 0");
        const double sd = s.to_double();
        const double hs = h_eval(sd);
        for (std::size_t k = 1; k <= k_max; ++k) {
            SpotSignCheck spot;
            spot.s = s;
            spot.k = k;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            spot.derivative_value =
                hs * sign * chain.entries[k].evaluate(sd) / std::pow(1.0 + sd, 2.0 * static_cast<double>(k));
            spot.sign_matches = sign * spot.derivative_value > 0.0;
            report.all_ok = report.all_ok && spot.sign_matches;
            report.spot_checks.push_back(std::move(spot));
        }
    }
    return report;
}

TruncatedSeries mixing_exponent_series(std::size_t order) {
    // w(s) = -1 + 1/(1+s) - 5s - s^2/10, expanded exactly about 0.
    TruncatedSeries geometric =
        expand_rational(Polynomial::constant(Rational(1)), poly_one_plus_x(), order);
    const Polynomial tail{std::vector<Rational>{Rational(-1), Rational(-5), Rational(-1, 10)}};
    return geometric + TruncatedSeries::from_polynomial(tail, order);
}

std::vector<Rational> reference_log_ratios(std::size_t n_terms) {
    if (n_terms < 6)
        throw std::invalid_argument("need n_terms >= 6 to witness the sixth-degree numerator");

    // Route one: termwise expansion of g(t) = w(t^2).
    TruncatedSeries w = mixing_exponent_series(n_terms / 2);
    std::vector<Rational> g_coeffs(n_terms + 1);
    for (std::size_t j = 0; 2 * j <= n_terms; ++j)
        g_coeffs[2 * j] = w.coefficient(j);
    TruncatedSeries substituted(n_terms, std::move(g_coeffs));

    // Route two: long division of the closed form.
    Polynomial numerator;
    numerator += Polynomial::monomial(Rational(-6), 2);
    numerator += Polynomial::monomial(Rational(-51, 10), 4);
    numerator += Polynomial::monomial(Rational(-1, 10), 6);
    const Polynomial denominator{std::vector<Rational>{Rational(1), Rational(0), Rational(1)}};
    TruncatedSeries divided = expand_rational(numerator, denominator, n_terms);

    if (substituted != divided)
        throw std::logic_error("internal consistency failure: the two expansions of the "
                               "sixth-degree log-characteristic function disagree");

    // kappa_k/k! = i^{-k} g_k; all odd coefficients vanish here, so the
    // normalized cumulants stay real: q_{2j} = (-1)^j g_{2j}.
    std::vector<Rational> q(n_terms + 1);
    for (std::size_t k = 0; k <= n_terms; ++k) {
        if (k % 2 == 1) {
            if (!substituted.coefficient(k).is_zero())
                throw std::logic_error("internal consistency failure: odd coefficient appeared "
                                       "in an even log-characteristic function");
            continue;
        }
        q[k] = (k % 4 == 0) ? substituted.coefficient(k) : -substituted.coefficient(k);
    }
    return q;
}

} // namespace momentset
