#pragma once

#include "json.hpp"

#include <string>

namespace momentset::cli {

/// One command's result. The payload is an ordered JSON object so that both
/// renderings below are byte-for-byte reproducible: key order is exactly
/// insertion order, rationals are stored as "p/q" strings and floating
/// values are stored pre-formatted to 17 significant digits.
struct Report {
    std::string command;
    nlohmann::ordered_json payload;
    int exit_code = 0;
};

/// Human-readable rendering: "key: value" lines, nested objects indented,
/// arrays of scalars space-joined, arrays of objects as one "- " line each.
std::string render_text(const Report& report);

/// Machine-readable rendering: {"command": ..., <payload fields>,
/// "exit_status": n} serialized with 2-space indentation.
std::string render_json(const Report& report);

/// Pinned decimal formatting for floating-point payload values.
std::string format_double(double value);

} // namespace momentset::cli
