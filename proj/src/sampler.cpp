#include "momentset/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace momentset {

void SampleSummary::merge(const SampleSummary& other) {
    if (other.k_max != k_max)
        throw std::invalid_argument("cannot merge summaries with different power-sum ranges");
    count += other.count;
    for (std::size_t j = 0; j < power_sums.size(); ++j)
        power_sums[j] += other.power_sums[j];
}

namespace {

double next_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

SampleSummary sample_mixture(const Rational& a, const Rational& b, std::uint64_t n,
                             std::uint64_t seed, unsigned k_max) {
    if (n == 0)
        throw std::invalid_argument("sample size must be at least 1");
    MixtureParams params = family_weights(a, b);

    const double c0 = params.w0.to_double();
    const double c1 = c0 + params.wminus.to_double();

    SampleSummary summary;
    summary.k_max = k_max;
    summary.power_sums.assign(2 * static_cast<std::size_t>(k_max) + 1, 0.0);

    std::mt19937_64 gen(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        double u = next_uniform(gen);
        double x;
        if (u < c0) {
            x = 0.0;
        } else {
            double v = next_uniform(gen);
            double e = -std::log1p(-v);
            x = (u < c1) ? -e : e;
        }
        double p = 1.0;
        summary.power_sums[0] += 1.0;
        for (std::size_t j = 1; j < summary.power_sums.size(); ++j) {
            p *= x;
            summary.power_sums[j] += p;
        }
    }
    summary.count = n;
    return summary;
}

SampleSummary sample_mixture_sharded(const Rational& a, const Rational& b, std::uint64_t n,
                                     std::uint64_t seed, unsigned k_max, unsigned shards) {
    if (shards == 0)
        throw std::invalid_argument("shard count must be at least 1");
    if (shards == 1 || n < shards)
        return sample_mixture(a, b, n, seed, k_max);

    family_weights(a, b); // validate before spawning workers

    std::vector<SampleSummary> parts(shards);
    std::vector<std::thread> workers;
    workers.reserve(shards);
    const std::uint64_t base = n / shards;
    const std::uint64_t extra = n % shards;
    for (unsigned i = 0; i < shards; ++i) {
        std::uint64_t slice = base + (i < extra ? 1 : 0);
        workers.emplace_back([&, i, slice] { parts[i] = sample_mixture(a, b, slice, seed + i, k_max); });
    }
    for (auto& w : workers)
        w.join();

    SampleSummary total = std::move(parts[0]);
    for (unsigned i = 1; i < shards; ++i)
        total.merge(parts[i]);
    return total;
}

std::vector<RatioEstimate> empirical_ratios(const SampleSummary& summary, unsigned k_order) {
    if (2 * static_cast<std::size_t>(k_order) >= summary.power_sums.size())
        throw std::invalid_argument("summary does not hold power sums up to 2k");
    if (summary.count == 0)
        throw std::invalid_argument("empty sample summary");

    const double n = static_cast<double>(summary.count);
    std::vector<RatioEstimate> out(k_order + 1);
    double fact = 1.0;
    for (unsigned k = 0; k <= k_order; ++k) {
        if (k > 0)
            fact *= k;
        double mean = summary.power_sums[k] / n;
        double mean_sq = summary.power_sums[2 * k] / n;
        double variance = mean_sq - mean * mean;
        if (summary.count > 1)
            variance *= n / (n - 1.0);
        if (variance < 0.0)
            variance = 0.0; // guards roundoff on constant samples
        out[k].estimate = mean / fact;
        out[k].standard_error = std::sqrt(variance) / (fact * std::sqrt(n));
    }
    return out;
}

} // namespace momentset
