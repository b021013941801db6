#include "commands.hpp"

#include "momentset/classify.hpp"
#include "momentset/family.hpp"
#include "momentset/sampler.hpp"
#include "momentset/selftest.hpp"
#include "momentset/series.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace momentset::cli {

namespace {

using nlohmann::ordered_json;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

ordered_json rational_strings(std::span<const Rational> values) {
    ordered_json arr = ordered_json::array();
    for (const Rational& v : values)
        arr.push_back(v.str());
    return arr;
}

ordered_json weights_json(const MixtureParams& weights) {
    return ordered_json{{"w0", weights.w0.str()},
                        {"wminus", weights.wminus.str()},
                        {"wplus", weights.wplus.str()}};
}

std::string cf_shape(const Rational& a, const Rational& b) {
    return "(1 + (" + a.str() + ") i t + (" + b.str() + ") t^2) / (1 + t^2)";
}

/// Exact decimal rendering of t = k/10 for the cf grid.
std::string grid_point(int k) {
    const int tens = std::abs(k) / 10;
    const int tenths = std::abs(k) % 10;
    return std::string(k < 0 ? "-" : "") + std::to_string(tens) + "." + std::to_string(tenths);
}

} // namespace

Report cmd_classify(const SequenceDocument& doc, const ClassifyOptions& options) {
    Report report;
    report.command = "classify";
    auto& p = report.payload;
    p["input_digest"] = doc.digest();
    p["kind"] = kind_name(doc.kind);
    p["n_values"] = doc.values.size();

    if (doc.kind == SequenceKind::CumulantRatios) {
        p["outcome"] = "invalid-input";
        p["reason"] = "classify expects kind \"ratios\" or \"moments\"; cumulant ratios "
                      "describe the log of the characteristic function, not moments";
        report.exit_code = 2;
        return report;
    }

    std::vector<Rational> ratios = doc.values;
    if (doc.kind == SequenceKind::Moments) {
        if (ratios.empty() || ratios[0] != Rational(1)) {
            p["outcome"] = "invalid-input";
            p["reason"] = "a moment sequence must start with mu_0 = 1";
            report.exit_code = 2;
            return report;
        }
        const RatioSequence converted = moments_to_ratios(MomentSequence(std::move(ratios)));
        ratios.assign(converted.values().begin(), converted.values().end());
        p["ratios"] = rational_strings(ratios);
    }

    Classification outcome{};
    try {
        outcome = classify_ratios(ratios, options.min_prefix);
    } catch (const std::invalid_argument& e) {
        outcome = InvalidInput{e.what()};
    }

    std::visit(
        overloaded{
            [&](const FiniteMomentFamily& f) {
                p["outcome"] = "finite-moment-family";
                p["a"] = f.a.str();
                p["b"] = f.b.str();
                p["weights"] = weights_json(f.weights);
                p["ratio_pattern"] = "1, then " + f.a.str() + " at odd k and " +
                                     (Rational(1) - f.b).str() + " at even k";
                p["characteristic_function"] = cf_shape(f.a, f.b);
            },
            [&](const DegeneratePointMass&) {
                p["outcome"] = "degenerate-point-mass";
                p["a"] = "0";
                p["b"] = "1";
                p["explanation"] = "all mass sits at zero; every moment above order 0 vanishes";
                p["characteristic_function"] = "1";
            },
            [&](const PatternViolated& v) {
                p["outcome"] = "pattern-violated";
                p["index"] = v.index;
                p["explanation"] = v.explanation;
            },
            [&](const InconsistentWithAnyDistribution& v) {
                p["outcome"] = "inconsistent-with-any-distribution";
                p["a"] = v.a.str();
                p["b"] = v.b.str();
                p["violated_constraint"] = v.violated_constraint;
                p["explanation"] = "the prefix fits the pattern only with a mixture weight "
                                   "that breaks " +
                                   v.violated_constraint;
                report.exit_code = 3;
            },
            [&](const InvalidInput& v) {
                p["outcome"] = "invalid-input";
                p["reason"] = v.reason;
                report.exit_code = 2;
            },
        },
        outcome);
    return report;
}

Report cmd_family(const FamilyOptions& options) {
    Report report;
    report.command = "family";
    auto& p = report.payload;
    p["a"] = options.a.str();
    p["b"] = options.b.str();
    p["emit"] = options.emit;

    const MixtureParams weights = family_weights(options.a, options.b);
    p["weights"] = weights_json(weights);

    if (options.emit == "weights")
        return report;

    if (options.emit == "cf-grid") {
        p["grid"] = "t = k/10 for k = -100..100";
        ordered_json rows = ordered_json::array();
        for (int k = -100; k <= 100; ++k) {
            const std::complex<double> f =
                cf_eval(options.a, options.b, std::complex<double>(k / 10.0, 0.0));
            rows.push_back(ordered_json{{"t", grid_point(k)},
                                        {"re", format_double(f.real())},
                                        {"im", format_double(f.imag())}});
        }
        p["cf"] = std::move(rows);
        return report;
    }

    p["n_terms"] = options.n_terms;
    if (options.emit == "ratios") {
        p["values"] = rational_strings(
            family_ratio_sequence(options.a, options.b, options.n_terms).values());
    } else if (options.emit == "moments") {
        p["values"] =
            rational_strings(family_moments(options.a, options.b, options.n_terms).values());
    } else if (options.emit == "cumulants") {
        p["values"] = rational_strings(
            moments_to_cumulants(family_moments(options.a, options.b, options.n_terms)).values());
    } else {
        throw std::invalid_argument("unknown emit target: " + options.emit);
    }
    return report;
}

Report cmd_szego(const SequenceDocument& doc, const SzegoOptions& options) {
    Report report;
    report.command = "szego";
    auto& p = report.payload;
    p["input_digest"] = doc.digest();
    p["kind"] = kind_name(doc.kind);
    p["n_values"] = doc.values.size();

    if (doc.kind == SequenceKind::Moments) {
        p["outcome"] = "invalid-input";
        p["reason"] = "szego reconstructs generating functions of normalized sequences; "
                      "pass kind \"ratios\" or \"cumulant_ratios\"";
        report.exit_code = 2;
        return report;
    }
    if (doc.values.size() < 2) {
        p["outcome"] = "invalid-input";
        p["reason"] = "need at least 2 values to witness any period";
        report.exit_code = 2;
        return report;
    }

    const std::size_t max_period = std::min(options.max_period, doc.values.size() / 2);
    p["max_period_searched"] = max_period;

    const auto detected = detect_eventual_periodicity(doc.values, max_period);
    if (!detected.has_value()) {
        p["outcome"] = "no-periodicity-found";
        p["explanation"] = "no eventually periodic structure with period <= " +
                           std::to_string(max_period) +
                           " fits the prefix with every cycle position witnessed twice";
        report.exit_code = 1;
        return report;
    }

    const RationalForm form = szego_reconstruct(*detected);
    p["outcome"] = "eventually-periodic";
    p["preperiod"] = detected->preperiod;
    p["period"] = detected->period;
    p["head"] = rational_strings(detected->head);
    p["cycle"] = rational_strings(detected->cycle);
    p["numerator"] = form.numerator.str("t");
    p["numerator_coefficients"] = rational_strings(form.numerator.coefficients());
    p["m"] = form.m;
    p["denominator"] = form.denominator().str("t");
    p["reduced_numerator"] = form.reduced_numerator.str("t");
    p["reduced_denominator"] = form.reduced_denominator.str("t");

    const TruncatedSeries expanded =
        expand_rational(form.numerator, form.denominator(), doc.values.size() - 1);
    bool exact = true;
    for (std::size_t k = 0; k < doc.values.size(); ++k)
        exact = exact && expanded.coefficient(k) == doc.values[k];
    p["round_trip_exact"] = exact;
    report.exit_code = exact ? 0 : 1;
    return report;
}

Report cmd_sample(const SampleOptions& options) {
    Report report;
    report.command = "sample";
    auto& p = report.payload;

    const MixtureParams weights = family_weights(options.a, options.b);
    p["a"] = options.a.str();
    p["b"] = options.b.str();
    p["n"] = options.n;
    p["seed"] = options.seed;
    p["k_max"] = options.k_max;
    p["shards"] = options.shards;
    p["weights"] = weights_json(weights);

    const SampleSummary summary = sample_mixture_sharded(options.a, options.b, options.n,
                                                         options.seed, options.k_max,
                                                         options.shards);
    const RatioSequence exact = family_ratio_sequence(options.a, options.b, options.k_max);
    const std::vector<RatioEstimate> estimates = empirical_ratios(summary, options.k_max);

    ordered_json rows = ordered_json::array();
    std::size_t flagged_count = 0;
    for (unsigned k = 0; k <= options.k_max; ++k) {
        const RatioEstimate& e = estimates[k];
        const bool flagged = std::abs(e.estimate - exact[k].to_double()) > 5.0 * e.standard_error;
        rows.push_back(ordered_json{{"k", k},
                                    {"exact", exact[k].str()},
                                    {"estimate", format_double(e.estimate)},
                                    {"standard_error", format_double(e.standard_error)},
                                    {"flagged", flagged}});
        flagged_count += flagged ? 1 : 0;
    }
    p["ratios"] = std::move(rows);
    p["flagged_count"] = flagged_count;
    return report;
}

Report cmd_verify(bool with_timings) {
    Report report;
    report.command = "verify";
    auto& p = report.payload;

    const std::vector<FixtureResult> results = run_reference_fixtures();
    ordered_json rows = ordered_json::array();
    std::size_t passed = 0;
    for (const FixtureResult& r : results) {
        ordered_json row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        if (with_timings)
            row["milliseconds"] = r.milliseconds;
        row["detail"] = r.detail;
        rows.push_back(std::move(row));
        passed += r.pass ? 1 : 0;
    }
    p["fixtures"] = std::move(rows);
    p["passed"] = passed;
    p["failed"] = results.size() - passed;
    report.exit_code = passed == results.size() ? 0 : 1;
    return report;
}

} // namespace momentset::cli
