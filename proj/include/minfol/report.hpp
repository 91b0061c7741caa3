#pragma once

// JSON reports: conversions of library values and the JSON / TSV renderers.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "minfol/int_linalg.hpp"
#include "minfol/permutation.hpp"
#include "minfol/quadratic.hpp"

namespace minfol::report {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "0.1.0";

// {schema_version, command, inputs, results, provenance{tool, version, seed}}.
Json make(const std::string& command, Json inputs, Json results, std::optional<std::uint64_t> seed = std::nullopt);

Json to_json(const Rational& x);  // "p/q" or "p"
Json to_json(const QuadraticIrrational& x);
Json to_json(const IntMatrix& m);
Json cycles_json(const Permutation& p);  // 1-based cycle notation string

// Keys are sorted (nlohmann::json objects are ordered maps).
std::string render_json(const Json& report);
// One "path<TAB>value" line per leaf, paths joined with '.'.
std::string render_tsv(const Json& report);

}  // namespace minfol::report
