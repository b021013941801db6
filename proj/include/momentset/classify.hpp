#pragma once

#include "momentset/family.hpp"
#include "momentset/polynomial.hpp"
#include "momentset/rational.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace momentset {

/// A sequence prefix split into a head of length `preperiod` followed by
/// endless repetitions of `cycle` (length `period`). The descriptor is
/// canonical: the period is minimal, and for that period the preperiod is
/// minimal, among all descriptors consistent with the prefix.
struct EventuallyPeriodic {
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::vector<Rational> head;
    std::vector<Rational> cycle;
};

/// Exact set of distinct values in a sequence.
std::set<Rational> distinct_values(std::span<const Rational> seq);

/// Searches for the canonical eventually-periodic descriptor of the prefix.
/// A candidate (preperiod l, period m) is accepted only if the prefix
/// witnesses every cycle position at least twice, i.e. l + 2m <= length;
/// otherwise almost any prefix would qualify vacuously.
/// Throws std::invalid_argument when length < 2 * max_period.
std::optional<EventuallyPeriodic> detect_eventual_periodicity(std::span<const Rational> seq,
                                                              std::size_t max_period);

/// The generating function of an eventually periodic sequence as
/// numerator / (1 - t^m), plus the same fraction with common polynomial
/// factors divided out (the raw fraction is generally reducible). The
/// reduced denominator is normalized to constant term 1.
struct RationalForm {
    Polynomial numerator;  // degree < preperiod + period
    std::size_t m = 1;     // denominator is 1 - t^m
    Polynomial reduced_numerator;
    Polynomial reduced_denominator;

    Polynomial denominator() const; // 1 - t^m
};

RationalForm szego_reconstruct(const EventuallyPeriodic& desc);

// Classification of a ratio-sequence prefix. A prefix can only ever be
// *consistent with* a full-sequence statement, so PatternViolated reports
// the breaking index without claiming anything about unseen terms.

struct FiniteMomentFamily {
    Rational a;
    Rational b;
    MixtureParams weights;
};

struct DegeneratePointMass {}; // a = 0, b = 1: all mass at zero

struct PatternViolated {
    std::size_t index = 0; // first position breaking the {1, a, 1-b, ...} pattern
    std::string explanation;
};

struct InconsistentWithAnyDistribution {
    Rational a;
    Rational b;
    std::string violated_constraint;
};

struct InvalidInput {
    std::string reason;
};

using Classification = std::variant<FiniteMomentFamily, DegeneratePointMass, PatternViolated,
                                    InconsistentWithAnyDistribution, InvalidInput>;

/// Decides which (if any) mixture parameters a ratio prefix is consistent
/// with. Takes raw values so that malformed inputs (r_0 != 1) can be
/// classified as InvalidInput rather than rejected upstream.
/// min_prefix defaults to 5, the shortest length that witnesses both parity
/// classes twice beyond r_0; throws std::invalid_argument on shorter input.
Classification classify_ratios(std::span<const Rational> ratios, std::size_t min_prefix = 5);

} // namespace momentset
