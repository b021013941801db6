#pragma once

#include "momentset/family.hpp"
#include "momentset/rational.hpp"

#include <cstdint>
#include <vector>

namespace momentset {

/// Streaming summary of a mixture sample: power sums S_j = sum_i x_i^j for
/// j = 0..2K. Collecting up to 2K lets empirical_ratios attach a standard
/// error to every estimate up to order K. Summaries from independent runs
/// merge by adding counts and sums.
struct SampleSummary {
    std::uint64_t count = 0;
    unsigned k_max = 0;                  // highest ratio order the summary can estimate
    std::vector<double> power_sums;      // size 2 * k_max + 1

    void merge(const SampleSummary& other);
};

/// Draws n independent variates from the mixture and accumulates power sums.
///
/// Reproducibility contract (pinned, do not change):
///  - generator: std::mt19937_64 seeded directly with `seed`;
///  - uniforms: u = (next() >> 11) * 2^-53, giving u in [0, 1);
///  - each draw consumes one uniform for branch selection, compared against
///    the cumulative weights in the fixed order (w0, wminus, wplus);
///  - the exponential branches consume one further uniform and apply the
///    inverse CDF, x = -log1p(-u).
SampleSummary sample_mixture(const Rational& a, const Rational& b, std::uint64_t n,
                             std::uint64_t seed, unsigned k_max);

/// Deterministic sharded variant: shard i (0-based) draws its slice with seed
/// `seed + i`; slices differ by at most one draw. Shards merge in index
/// order, so the result depends only on (a, b, n, seed, k_max, shards).
/// When n < shards the call degenerates to a single shard with the original
/// seed, since zero-size slices cannot draw.
SampleSummary sample_mixture_sharded(const Rational& a, const Rational& b, std::uint64_t n,
                                     std::uint64_t seed, unsigned k_max, unsigned shards);

struct RatioEstimate {
    double estimate = 0.0;       // (mean of x^k) / k!
    double standard_error = 0.0; // sample std dev of x^k / (k! sqrt(n))
};

/// Empirical normalized-moment estimates for k = 0..k_order with standard
/// errors. Requires power sums up to 2*k_order.
std::vector<RatioEstimate> empirical_ratios(const SampleSummary& summary, unsigned k_order);

} // namespace momentset
