#pragma once

#include "momentset/classify.hpp"
#include "momentset/polynomial.hpp"
#include "momentset/rational.hpp"
#include "momentset/series.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace momentset {

// --- Classification of log-characteristic-function coefficient prefixes ---
//
// Input is the sequence q_k = kappa_k / k!. With the sign convention
// g(t) = sum_k i^k (kappa_k/k!) t^k, the q_k are literally the coefficients
// of g in the substituted variable u = i t, which keeps all sequence
// arithmetic real and exact. In that variable the admissible reduced
// denominators are 1, 1 - u, 1 + u and 1 - u^2, corresponding to
// 1, 1 - i t, 1 + i t and 1 + t^2.

struct GaussianLog {
    Rational shift;    // kappa_1
    Rational variance; // kappa_2 (the -sigma^2 t^2 + i a t form has sigma^2 = kappa_2 / 2)
};

struct RationalLog {
    RationalForm form;                   // in the variable u = i t
    std::string denominator_t;           // reduced denominator written in t
    std::optional<Polynomial> numerator_t; // real numerator in t, when only even powers of u appear
};

struct NotFinitePrefix {};

struct ViolatesTheoremShape {
    std::string explanation;
};

using CumulantClassification =
    std::variant<GaussianLog, RationalLog, NotFinitePrefix, ViolatesTheoremShape>;

/// Classifies a prefix of normalized cumulants q_k = kappa_k / k!.
/// Requires q_0 = 0 and at least 5 terms (std::invalid_argument otherwise).
/// The Gaussian branch (q_k = 0 for every observed k >= 3) is checked first;
/// otherwise the prefix is searched for eventual periodicity and the
/// reconstructed rational form's reduced denominator decides between
/// RationalLog and ViolatesTheoremShape. The classifier reports shapes only;
/// it does not decide whether a shape is realized by a distribution.
CumulantClassification classify_cumulant_ratios(std::span<const Rational> q);

// --- The completely monotone reference transform ---
//
// h(s) = exp(w(s)) with w(s) = -1 + 1/(1+s) - 5s - s^2/10 on s >= 0.
// Its derivatives satisfy
//     h^(k)(s) = (-1)^k h(s) P_{3k}(s) / (1+s)^{2k},
// where every P_{3k} has degree exactly 3k, leading coefficient 5^-k and
// non-negative coefficients; that sign structure is what makes h completely
// monotone and hence the Laplace transform of a probability measure.

/// P_{3k} for k = 0..k_max, built by the recursion documented in the
/// implementation (the closed derivative form above, differentiated once).
struct DerivativeChain {
    std::vector<Polynomial> entries; // entries[k] = P_{3k}
};

DerivativeChain derivative_chain(std::size_t k_max);

struct ChainEntryCheck {
    std::size_t k = 0;
    bool degree_exact = false;      // deg P_{3k} == 3k
    bool leading_exact = false;     // leading coefficient == 5^-k
    bool coefficients_nonnegative = false;
};

struct SpotSignCheck {
    Rational s;
    std::size_t k = 0;
    double derivative_value = 0.0; // h^(k)(s) via the closed form, in floating point
    bool sign_matches = false;     // sign equals (-1)^k
};

struct MonotonicityReport {
    std::vector<ChainEntryCheck> entries;     // k = 0..k_max
    std::vector<SpotSignCheck> spot_checks;   // k = 1..k_max at each spot point
    bool all_ok = false;
};

/// Exact chain checks for k <= k_max plus floating-point derivative sign
/// checks at the given points s >= 0.
MonotonicityReport check_complete_monotonicity(std::size_t k_max,
                                               std::span<const Rational> spot_points);

/// h(s) in floating point.
double h_eval(double s);

/// Exact series of the exponent w(s) = -1 + 1/(1+s) - 5s - s^2/10 about 0.
TruncatedSeries mixing_exponent_series(std::size_t order);

/// Normalized cumulants q_k = kappa_k / k! of g(t) = w(t^2), computed two
/// independent ways, termwise expansion of w(t^2) and long division of the
/// closed form (-6t^2 - 51/10 t^4 - 1/10 t^6) / (1 + t^2), and cross-checked
/// coefficient by coefficient (std::logic_error on mismatch, which would mean
/// a broken exact-series layer). Requires n_terms >= 6. The resulting ratio
/// set is finite: {0, 6, 9/10, 1}.
std::vector<Rational> reference_log_ratios(std::size_t n_terms);

} // namespace momentset
