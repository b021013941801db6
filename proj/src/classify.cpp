#include "momentset/classify.hpp"

#include <sstream>
#include <stdexcept>

namespace momentset {

std::set<Rational> distinct_values(std::span<const Rational> seq) {
    return {seq.begin(), seq.end()};
}

std::optional<EventuallyPeriodic> detect_eventual_periodicity(std::span<const Rational> seq,
                                                              std::size_t max_period) {
    if (max_period == 0)
        throw std::invalid_argument("max_period must be at least 1");
    if (seq.size() < 2 * max_period)
        throw std::invalid_argument("prefix too short: need at least 2 * max_period terms");

    for (std::size_t m = 1; m <= max_period; ++m) {
        std::size_t preperiod = 0;
        for (std::size_t i = 0; i + m < seq.size(); ++i)
            if (seq[i] != seq[i + m])
                preperiod = i + 1;
        if (preperiod + 2 * m > seq.size())
            continue; // cycle not witnessed twice; descriptor would be vacuous
        EventuallyPeriodic desc;
        desc.preperiod = preperiod;
        desc.period = m;
        desc.head.assign(seq.begin(), seq.begin() + static_cast<long>(preperiod));
        desc.cycle.assign(seq.begin() + static_cast<long>(preperiod),
                          seq.begin() + static_cast<long>(preperiod + m));
        return desc;
    }
    return std::nullopt;
}

Polynomial RationalForm::denominator() const {
    Polynomial d = Polynomial::constant(Rational(1));
    d -= Polynomial::monomial(Rational(1), m);
    return d;
}

RationalForm szego_reconstruct(const EventuallyPeriodic& desc) {
    if (desc.period == 0 || desc.cycle.size() != desc.period || desc.head.size() != desc.preperiod)
        throw std::invalid_argument("malformed eventually-periodic descriptor");

    // head + cycle/(1-t^m) shifted by t^l gives numerator H(t)(1-t^m) + t^l C(t).
    Polynomial head_poly{std::vector<Rational>(desc.head.begin(), desc.head.end())};
    std::vector<Rational> shifted(desc.preperiod + desc.period);
    for (std::size_t j = 0; j < desc.period; ++j)
        shifted[desc.preperiod + j] = desc.cycle[j];
    Polynomial cycle_shifted{std::move(shifted)};

    RationalForm form;
    form.m = desc.period;
    Polynomial denom = form.denominator();
    form.numerator = head_poly * denom + cycle_shifted;

    Polynomial g = gcd(form.numerator, denom);
    if (g.is_zero() || g.degree() == std::size_t{0}) {
        form.reduced_numerator = form.numerator;
        form.reduced_denominator = denom;
    } else {
        form.reduced_numerator = divmod(form.numerator, g).quotient;
        form.reduced_denominator = divmod(denom, g).quotient;
    }
    // Normalize the reduced denominator to constant term 1 (it cannot vanish
    // at 0 because 1 - t^m does not).
    Rational c0 = form.reduced_denominator.coefficient(0);
    form.reduced_numerator = reciprocal(c0) * form.reduced_numerator;
    form.reduced_denominator = reciprocal(c0) * form.reduced_denominator;
    return form;
}

Classification classify_ratios(std::span<const Rational> ratios, std::size_t min_prefix) {
    if (min_prefix < 5)
        min_prefix = 5;
    if (ratios.size() < min_prefix) {
        std::ostringstream msg;
        msg << "need at least " << min_prefix << " ratio values, got " << ratios.size();
        throw std::invalid_argument(msg.str());
    }
    if (ratios[0] != Rational(1))
        return InvalidInput{"a ratio sequence must start with r_0 = mu_0/0! = 1, got " + ratios[0].str()};

    const Rational a = ratios[1];
    const Rational even = ratios[2];
    for (std::size_t k = 1; k < ratios.size(); ++k) {
        const Rational& expected = (k % 2 == 1) ? a : even;
        if (ratios[k] != expected) {
            PatternViolated v;
            v.index = k;
            std::ostringstream msg;
            msg << "ratio pattern {1, a, 1-b, a, 1-b, ...} breaks at index " << k << " (value "
                << ratios[k].str() << ", expected " << expected.str()
                << "); for the full sequence this means it either takes infinitely many distinct "
                   "ratio values or is not the moment sequence of any distribution - a finite "
                   "prefix cannot tell these apart";
            v.explanation = msg.str();
            return v;
        }
    }

    const Rational b = Rational(1) - even;
    try {
        MixtureParams weights = family_weights(a, b);
        if (weights.degenerate())
            return DegeneratePointMass{};
        return FiniteMomentFamily{a, b, std::move(weights)};
    } catch (const ConstraintViolation& e) {
        return InconsistentWithAnyDistribution{a, b, e.constraint()};
    }
}

} // namespace momentset
