#include "momentset/selftest.hpp"

#include "momentset/classify.hpp"
#include "momentset/cumulant_lab.hpp"
#include "momentset/family.hpp"
#include "momentset/rational.hpp"

#include <chrono>
#include <exception>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace momentset {
namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome passed(std::string detail) { return {true, std::move(detail)}; }
Outcome failed(std::string detail) { return {false, std::move(detail)}; }

Outcome exponential_fixture() {
    const RatioSequence ratios = family_ratio_sequence(Rational(1), Rational(0), 24);
    for (std::size_t k = 0; k < ratios.size(); ++k)
        if (ratios[k] != Rational(1))
            return failed("ratio r_" + std::to_string(k) + " = " + ratios[k].str() +
                          ", expected 1");
    const Classification c = classify_ratios(ratios.values());
    const auto* fam = std::get_if<FiniteMomentFamily>(&c);
    if (fam == nullptr)
        return failed("ratio prefix did not classify as a finite moment family");
    if (fam->a != Rational(1) || fam->b != Rational(0))
        return failed("recovered (a, b) = (" + fam->a.str() + ", " + fam->b.str() + ")");
    if (fam->weights.wplus != Rational(1) || fam->weights.w0 != Rational(0) ||
        fam->weights.wminus != Rational(0))
        return failed("weights do not collapse to the positive exponential");
    return passed("all 25 ratios equal 1; recovered (a, b) = (1, 0) with w+ = 1");
}

Outcome laplace_fixture() {
    const RatioSequence ratios = family_ratio_sequence(Rational(0), Rational(0), 24);
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        const Rational expected = (k % 2 == 0) ? Rational(1) : Rational(0);
        if (ratios[k] != expected)
            return failed("ratio r_" + std::to_string(k) + " = " + ratios[k].str());
    }
    if (distinct_values(ratios.values()) != std::set<Rational>{Rational(0), Rational(1)})
        return failed("distinct ratio set is not {0, 1}");
    const Classification c = classify_ratios(ratios.values());
    const auto* fam = std::get_if<FiniteMomentFamily>(&c);
    if (fam == nullptr)
        return failed("ratio prefix did not classify as a finite moment family");
    if (fam->a != Rational(0) || fam->b != Rational(0))
        return failed("recovered (a, b) = (" + fam->a.str() + ", " + fam->b.str() + ")");
    return passed("ratios alternate {1, 0}; distinct set has two elements; "
                  "recovered (a, b) = (0, 0)");
}

Outcome grid_fixture() {
    std::size_t checked = 0;
    for (int na = -8; na <= 8; ++na) {
        for (int nb = 0; nb <= 7; ++nb) {
            const Rational a(na, 8);
            const Rational b(nb, 8);
            if (Rational(1) - a - b < Rational(0) || Rational(1) + a - b < Rational(0))
                continue;
            const RatioSequence ratios = family_ratio_sequence(a, b, 12);
            const Classification c = classify_ratios(ratios.values());
            const auto* fam = std::get_if<FiniteMomentFamily>(&c);
            if (fam == nullptr)
                return failed("grid point (" + a.str() + ", " + b.str() +
                              ") did not classify as a finite moment family");
            if (fam->a != a || fam->b != b)
                return failed("grid point (" + a.str() + ", " + b.str() + ") recovered as (" +
                              fam->a.str() + ", " + fam->b.str() + ")");
            ++checked;
        }
    }
    if (checked != 80)
        return failed("expected 80 admissible grid points, saw " + std::to_string(checked));
    return passed("recovered (a, b) exactly at all 80 admissible grid points");
}

Outcome log_cf_fixture() {
    // reference_log_ratios cross-checks the substitution route against the
    // closed rational form internally and throws on any mismatch.
    const std::vector<Rational> q = reference_log_ratios(40);
    const std::set<Rational> expected{Rational(0), Rational(6), Rational(9, 10), Rational(1)};
    if (distinct_values(q) != expected)
        return failed("distinct cumulant-ratio set is not {0, 6, 9/10, 1}");
    const CumulantClassification c = classify_cumulant_ratios(q);
    const auto* log = std::get_if<RationalLog>(&c);
    if (log == nullptr)
        return failed("reference ratios did not classify as a rational log-CF");
    if (log->denominator_t != "1 + t^2")
        return failed("reduced denominator is " + log->denominator_t);
    const auto deg = log->form.reduced_numerator.degree();
    if (!deg.has_value() || *deg != 6)
        return failed("reduced numerator degree is not 6");
    return passed("substitution and closed form agree to order 40; distinct set "
                  "{0, 6, 9/10, 1}; numerator degree 6 over 1 + t^2");
}

Outcome chain_fixture() {
    const std::vector<Rational> spots{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    const MonotonicityReport report = check_complete_monotonicity(25, spots);
    if (!report.all_ok) {
        for (const ChainEntryCheck& e : report.entries)
            if (!e.degree_exact || !e.leading_exact || !e.coefficients_nonnegative)
                return failed("chain entry k = " + std::to_string(e.k) + " broke an invariant");
        for (const SpotSignCheck& s : report.spot_checks)
            if (!s.sign_matches)
                return failed("derivative sign mismatch at k = " + std::to_string(s.k) +
                              ", s = " + s.s.str());
        return failed("monotonicity report flagged a failure");
    }
    return passed("P_3k degree, leading coefficient and non-negativity hold for k <= 25; "
                  "derivative signs alternate at 4 spot points");
}

FixtureResult run_one(const char* name, Outcome (*fixture)()) {
    FixtureResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome outcome = fixture();
        result.pass = outcome.pass;
        result.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.milliseconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return result;
}

} // namespace

std::vector<FixtureResult> run_reference_fixtures() {
    return {
        run_one("exponential-ratio-set", exponential_fixture),
        run_one("laplace-ratio-set", laplace_fixture),
        run_one("parameter-round-trip-grid", grid_fixture),
        run_one("log-cf-sixth-degree-identity", log_cf_fixture),
        run_one("derivative-chain-k25", chain_fixture),
    };
}

} // namespace momentset
