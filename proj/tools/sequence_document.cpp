#include "sequence_document.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

namespace momentset::cli {

namespace {

SequenceKind kind_from_name(const std::string& name) {
    if (name == "ratios")
        return SequenceKind::Ratios;
    if (name == "moments")
        return SequenceKind::Moments;
    if (name == "cumulant_ratios")
        return SequenceKind::CumulantRatios;
    throw std::invalid_argument("unknown kind \"" + name +
                                "\"; expected \"ratios\", \"moments\" or \"cumulant_ratios\"");
}

} // namespace

std::string kind_name(SequenceKind kind) {
    switch (kind) {
    case SequenceKind::Ratios:
        return "ratios";
    case SequenceKind::Moments:
        return "moments";
    case SequenceKind::CumulantRatios:
        return "cumulant_ratios";
    }
    return "ratios";
}

std::string SequenceDocument::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    const auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= '\n';
        h *= 1099511628211ULL;
    };
    mix(kind_name(kind));
    for (const Rational& v : values)
        mix(v.str());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SequenceDocument parse_sequence_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("input document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::invalid_argument("input document needs a string field \"kind\"");
    if (!doc.contains("values") || !doc["values"].is_array())
        throw std::invalid_argument("input document needs an array field \"values\"");

    SequenceDocument result;
    result.kind = kind_from_name(doc["kind"].get<std::string>());
    const auto& values = doc["values"];
    result.values.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& item = values[i];
        std::string literal;
        if (item.is_string()) {
            literal = item.get<std::string>();
        } else if (item.is_number_integer() || item.is_number_unsigned()) {
            literal = item.dump();
        } else if (item.is_number_float()) {
            throw std::invalid_argument(
                "values[" + std::to_string(i) +
                "] is a JSON float, which is not exact; quote it as a string instead");
        } else {
            throw std::invalid_argument("values[" + std::to_string(i) +
                                        "] must be a rational string or an integer");
        }
        try {
            result.values.push_back(Rational::parse(literal));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("values[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return result;
}

SequenceDocument load_sequence_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return parse_sequence_document(text);
}

} // namespace momentset::cli
