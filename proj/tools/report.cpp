#include "report.hpp"

#include <cstdio>
#include <sstream>
#include <string>

namespace momentset::cli {

namespace {

using nlohmann::ordered_json;

std::string scalar_text(const ordered_json& value) {
    if (value.is_string())
        return value.get<std::string>();
    return value.dump();
}

bool is_scalar(const ordered_json& value) {
    return !value.is_object() && !value.is_array();
}

void render_value(std::ostringstream& out, const std::string& key, const ordered_json& value,
                  const std::string& indent) {
    if (is_scalar(value)) {
        out << indent << key << ": " << scalar_text(value) << "\n";
        return;
    }
    if (value.is_object()) {
        out << indent << key << ":\n";
        for (const auto& [k, v] : value.items())
            render_value(out, k, v, indent + "  ");
        return;
    }
    // Array: scalars joined on one line, objects as one dashed line each.
    bool all_scalar = true;
    for (const auto& item : value)
        all_scalar = all_scalar && is_scalar(item);
    if (all_scalar) {
        out << indent << key << ":";
        for (const auto& item : value)
            out << " " << scalar_text(item);
        out << "\n";
        return;
    }
    out << indent << key << ":\n";
    for (const auto& item : value) {
        out << indent << "  -";
        bool first = true;
        for (const auto& [k, v] : item.items()) {
            out << (first ? " " : ", ") << k << ": "
                << (is_scalar(v) ? scalar_text(v) : v.dump());
            first = false;
        }
        out << "\n";
    }
}

} // namespace

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    for (const auto& [key, value] : report.payload.items())
        render_value(out, key, value, "");
    return out.str();
}

std::string render_json(const Report& report) {
    ordered_json out;
    out["command"] = report.command;
    for (const auto& [key, value] : report.payload.items())
        out[key] = value;
    out["exit_status"] = report.exit_code;
    return out.dump(2) + "\n";
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace momentset::cli
