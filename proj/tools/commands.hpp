#pragma once

#include "report.hpp"
#include "sequence_document.hpp"

#include "momentset/rational.hpp"

#include <cstdint>
#include <string>

namespace momentset::cli {

// Each command is a thin adapter: it calls library operations and formats
// the result into a Report. No sequence mathematics happens here.

struct ClassifyOptions {
    std::size_t min_prefix = 5;
};

struct FamilyOptions {
    Rational a;
    Rational b;
    std::size_t n_terms = 8;
    std::string emit = "ratios"; // ratios | moments | cumulants | weights | cf-grid
};

struct SzegoOptions {
    std::size_t max_period = 6; // clamped to len/2 so short prefixes stay searchable
};

struct SampleOptions {
    Rational a;
    Rational b;
    std::uint64_t n = 1;
    std::uint64_t seed = 42;
    unsigned k_max = 5;
    unsigned shards = 1;
};

Report cmd_classify(const SequenceDocument& doc, const ClassifyOptions& options);
Report cmd_family(const FamilyOptions& options);
Report cmd_szego(const SequenceDocument& doc, const SzegoOptions& options);
Report cmd_sample(const SampleOptions& options);

/// Runs the reference fixture suite. Timings are attached only on request
/// because they vary run to run; the JSON rendering stays byte-identical
/// across invocations without them.
Report cmd_verify(bool with_timings);

} // namespace momentset::cli
