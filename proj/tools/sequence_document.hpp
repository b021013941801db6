#pragma once

#include "momentset/rational.hpp"

#include <string>
#include <vector>

namespace momentset::cli {

enum class SequenceKind { Ratios, Moments, CumulantRatios };

std::string kind_name(SequenceKind kind);

/// Parsed form of the JSON input document {"kind": ..., "values": [...]}.
struct SequenceDocument {
    SequenceKind kind = SequenceKind::Ratios;
    std::vector<Rational> values;

    /// FNV-1a 64 over the kind name and the canonical renderings of the
    /// values, so reports can echo a stable fingerprint of their input.
    std::string digest() const;
};

/// Parses a document from JSON text. Values may be strings ("1", "-1/3",
/// "5.1") or JSON integers; JSON floats are rejected because they have
/// already lost exactness before we see them (quote the literal instead).
/// Throws std::invalid_argument with a user-facing message on any problem.
SequenceDocument parse_sequence_document(const std::string& text);

/// Reads the document from a file path, or from standard input when the
/// path is "-".
SequenceDocument load_sequence_document(const std::string& path);

} // namespace momentset::cli
