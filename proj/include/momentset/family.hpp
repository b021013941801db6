#pragma once

#include "momentset/rational.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace momentset {

/// Thrown when a requested parameter point violates one of the mixture
/// weight inequalities; constraint() names the violated one.
class ConstraintViolation : public std::domain_error {
public:
    ConstraintViolation(std::string constraint, const std::string& message)
        : std::domain_error(message), constraint_(std::move(constraint)) {}

    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

/// Parameters of the three-component mixture: a point mass at zero with
/// weight b, a standard exponential on the negative half-axis with weight
/// (1-a-b)/2 and one on the positive half-axis with weight (1+a-b)/2.
struct MixtureParams {
    Rational a;
    Rational b;
    Rational w0;     // point mass at 0
    Rational wminus; // exponential on the negative half-axis
    Rational wplus;  // exponential on the positive half-axis

    /// b = 1 forces a = 0 and the distribution collapses to the point mass.
    bool degenerate() const { return b == Rational(1); }
};

/// Computes and validates the mixture weights. Throws ConstraintViolation
/// naming the first violated inequality among b >= 0, 1 - a - b >= 0,
/// 1 + a - b >= 0.
MixtureParams family_weights(const Rational& a, const Rational& b);

/// Sequence of normalized moments mu_k / k!; the leading value must be 1.
class RatioSequence {
public:
    explicit RatioSequence(std::vector<Rational> values);

    std::span<const Rational> values() const { return values_; }
    const Rational& operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }

    bool operator==(const RatioSequence&) const = default;

private:
    std::vector<Rational> values_;
};

/// Raw moment sequence mu_k; mu_0 must be 1.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<Rational> values);

    std::span<const Rational> values() const { return values_; }
    const Rational& operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }

    bool operator==(const MomentSequence&) const = default;

private:
    std::vector<Rational> values_;
};

/// Cumulant sequence kappa_k; kappa_0 must be 0.
class CumulantSequence {
public:
    explicit CumulantSequence(std::vector<Rational> values);

    std::span<const Rational> values() const { return values_; }
    const Rational& operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }

    bool operator==(const CumulantSequence&) const = default;

private:
    std::vector<Rational> values_;
};

/// Ratio sequence of the mixture: r_0 = 1, r_k = a for odd k, r_k = 1 - b
/// for even k >= 2. n_terms is the highest index, so the result has
/// n_terms + 1 values. Validates the parameters first.
RatioSequence family_ratio_sequence(const Rational& a, const Rational& b, std::size_t n_terms);

/// Moments of the mixture, mu_k = r_k * k!.
MomentSequence family_moments(const Rational& a, const Rational& b, std::size_t n_terms);

MomentSequence ratios_to_moments(const RatioSequence& r);
RatioSequence moments_to_ratios(const MomentSequence& m);

/// Cumulants from moments: the formal series with coefficients kappa_k/k! is
/// the logarithm of the series with coefficients mu_k/k!, so the conversion
/// runs in the normalized (ratio) space and factorials never compound.
CumulantSequence moments_to_cumulants(const MomentSequence& m);

/// Exact inverse of moments_to_cumulants, via the formal exponential.
MomentSequence cumulants_to_moments(const CumulantSequence& k);

/// Characteristic function (1 + i a t + b t^2) / (1 + t^2) in floating
/// point. Defined on the analyticity strip |Im t| < 1; throws
/// std::domain_error at t = +-i (poles) and outside the strip.
std::complex<double> cf_eval(const Rational& a, const Rational& b, std::complex<double> t);

} // namespace momentset
