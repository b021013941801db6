#include "CLI11.hpp"

#include "commands.hpp"
#include "report.hpp"
#include "sequence_document.hpp"

#include "momentset/family.hpp"
#include "momentset/rational.hpp"

#include <cstdint>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for moment-ratio and cumulant-ratio sequences", "momentset"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as a JSON object");

    auto* classify =
        app.add_subcommand("classify", "classify a ratio or moment sequence prefix");
    std::string classify_input = "-";
    std::size_t min_prefix = 5;
    classify->add_option("-i,--input", classify_input, "JSON document path, or - for stdin");
    classify->add_option("--min-prefix", min_prefix,
                         "shortest prefix length accepted by the classifier");
    classify->add_flag("--json", as_json, "emit the report as a JSON object");

    auto* family =
        app.add_subcommand("family", "emit exact sequences of the mixture with parameters (a, b)");
    std::string a_str;
    std::string b_str;
    std::size_t n_terms = 8;
    std::string emit = "ratios";
    family->add_option("--a", a_str, "parameter a, a rational string like 1/3")->required();
    family->add_option("--b", b_str, "parameter b, a rational string like 1/4")->required();
    family->add_option("--n-terms", n_terms, "highest sequence index to emit");
    family->add_option("--emit", emit, "which view of the family to emit")
        ->check(CLI::IsMember({"ratios", "moments", "cumulants", "weights", "cf-grid"}));
    family->add_flag("--json", as_json, "emit the report as a JSON object");

    auto* szego = app.add_subcommand(
        "szego", "detect eventual periodicity and reconstruct P(t) / (1 - t^m)");
    std::string szego_input = "-";
    std::size_t max_period = 6;
    szego->add_option("-i,--input", szego_input, "JSON document path, or - for stdin");
    szego->add_option("--max-period", max_period, "largest cycle length to search")
        ->check(CLI::PositiveNumber);
    szego->add_flag("--json", as_json, "emit the report as a JSON object");

    auto* sample =
        app.add_subcommand("sample", "draw mixture variates and compare empirical ratios");
    std::uint64_t n = 0;
    std::uint64_t seed = 42;
    unsigned k_max = 5;
    unsigned shards = 1;
    sample->add_option("--a", a_str, "parameter a, a rational string")->required();
    sample->add_option("--b", b_str, "parameter b, a rational string")->required();
    sample->add_option("--n", n, "number of draws")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--k-max", k_max, "highest ratio order to estimate");
    sample->add_option("--shards", shards, "worker shards; shard i uses seed + i")
        ->check(CLI::PositiveNumber);
    sample->add_flag("--json", as_json, "emit the report as a JSON object");

    auto* verify = app.add_subcommand("verify", "run the built-in reference fixtures");
    verify->add_flag("--json", as_json, "emit the report as a JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using namespace momentset::cli;
    try {
        Report report;
        if (app.got_subcommand(classify)) {
            report = cmd_classify(load_sequence_document(classify_input), {min_prefix});
        } else if (app.got_subcommand(family)) {
            FamilyOptions options;
            options.a = momentset::Rational::parse(a_str);
            options.b = momentset::Rational::parse(b_str);
            options.n_terms = n_terms;
            options.emit = emit;
            report = cmd_family(options);
        } else if (app.got_subcommand(szego)) {
            report = cmd_szego(load_sequence_document(szego_input), {max_period});
        } else if (app.got_subcommand(sample)) {
            SampleOptions options;
            options.a = momentset::Rational::parse(a_str);
            options.b = momentset::Rational::parse(b_str);
            options.n = n;
            options.seed = seed;
            options.k_max = k_max;
            options.shards = shards;
            report = cmd_sample(options);
        } else {
            report = cmd_verify(!as_json);
        }
        std::cout << (as_json ? render_json(report) : render_text(report));
        return report.exit_code;
    } catch (const momentset::ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
