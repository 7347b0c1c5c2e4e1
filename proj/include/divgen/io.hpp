#pragma once

/**
 * @file io.hpp
 * @brief Text forms for collections, seeds and permutations.
 *
 * lines   : one '0'/'1' string per vector, position 1 leftmost, '\n' terminated.
 * records : one JSON object per line,
 *           {"r":0,"generator":"maxmin","params":{...},"bits":"0101..."}
 *
 * The reader accepts either form line by line, so the output of any command
 * can be fed back in unchanged.
 */

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"
#include "divgen/permutation.hpp"

namespace divgen {

enum class OutputFormat { lines, records };

inline std::string format_lines(const Collection& c) {
    std::string out;
    out.reserve(c.size() * (c.length() + 1));
    for (const auto& v : c) {
        out += v.to_string();
        out += '\n';
    }
    return out;
}

inline std::string format_records(const Collection& c) {
    std::string out;
    for (std::size_t r = 0; r < c.size(); ++r) {
        const auto& meta = c.provenance(r);
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : meta.params) {
            if (const auto* i = std::get_if<std::int64_t>(&value)) {
                params[key] = *i;
            } else {
                params[key] = std::get<std::string>(value);
            }
        }
        nlohmann::ordered_json record;
        record["r"] = r;
        record["generator"] = meta.generator;
        record["params"] = std::move(params);
        record["bits"] = c[r].to_string();
        out += record.dump();
        out += '\n';
    }
    return out;
}

inline std::string format_collection(const Collection& c, OutputFormat format) {
    return format == OutputFormat::lines ? format_lines(c) : format_records(c);
}

namespace detail {

inline std::string at_line(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

inline std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

inline void parse_record(std::string_view line, std::size_t line_no, BinaryVector& v, Provenance& meta) {
    nlohmann::ordered_json record;
    try {
        record = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw Error(ErrorCode::parse_error, at_line(line_no) + "malformed record: " + e.what());
    }
    if (!record.is_object() || !record.contains("bits") || !record["bits"].is_string()) {
        throw Error(ErrorCode::parse_error, at_line(line_no) + "record lacks a \"bits\" string");
    }
    try {
        v = BinaryVector::from_string(record["bits"].get<std::string>());
    } catch (const Error& e) {
        throw Error(ErrorCode::parse_error, at_line(line_no) + e.what());
    }
    if (record.contains("generator") && record["generator"].is_string()) {
        meta.generator = record["generator"].get<std::string>();
    }
    if (record.contains("params") && record["params"].is_object()) {
        for (const auto& [key, value] : record["params"].items()) {
            if (value.is_number_integer()) {
                meta.params.emplace_back(key, value.get<std::int64_t>());
            } else if (value.is_string()) {
                meta.params.emplace_back(key, value.get<std::string>());
            } else {
                meta.params.emplace_back(key, value.dump());
            }
        }
    }
}

} // namespace detail

/**
 * Reads a collection in lines or records form. Blank lines are ignored.
 * Errors name the 1-based line number.
 */
inline Collection parse_collection(std::string_view text) {
    Collection out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = detail::strip_cr(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        BinaryVector v;
        Provenance meta{"input", {}};
        if (line.front() == '{') {
            detail::parse_record(line, line_no, v, meta);
        } else {
            try {
                v = BinaryVector::from_string(line);
            } catch (const Error& e) {
                throw Error(ErrorCode::parse_error, detail::at_line(line_no) + e.what());
            }
        }
        if (!out.empty() && v.size() != out.length()) {
            throw Error(ErrorCode::length_mismatch, detail::at_line(line_no) + "vector length " +
                                                        std::to_string(v.size()) + " differs from " +
                                                        std::to_string(out.length()));
        }
        out.push_back(std::move(v), std::move(meta));
    }
    return out;
}

/// A seed file holds exactly one vector.
inline BinaryVector parse_seed(std::string_view text) {
    const auto c = parse_collection(text);
    if (c.size() != 1) {
        throw Error(ErrorCode::parse_error,
                    "seed file must contain exactly one vector, found " + std::to_string(c.size()));
    }
    return c[0];
}

/// One line of space-separated 1-based indices.
inline PermutationMap parse_permutation(std::string_view text) {
    std::vector<std::size_t> m;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::size_t value = 0;
        std::size_t used = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.front() == '-' || token.front() == '+') {
            throw Error(ErrorCode::parse_error, "permutation: '" + token + "' is not a positive integer");
        }
        m.push_back(value);
    }
    if (m.empty()) throw Error(ErrorCode::parse_error, "permutation file is empty");
    return PermutationMap(std::move(m));
}

} // namespace divgen
