#pragma once

// Scenario files and rendered scheme documents.
//
// Scenario file (JSON):
//   {"shape": [2, 2],
//    "pre":  {"amps": [[re, im], ...]},
//    "post": {"amps": [[re, im], ...]},      optional
//    "labels": [["up", "down"], ["L", "R"]], optional
//    "name": "..."}                           optional
//
// Doubles are written with shortest round-trip formatting, so write/read
// is bit-exact for finite values.

#include "weakvis/scenarios.hpp"
#include "weakvis/weakvalues.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace weakvis
{

struct SchemeDocument
{
	std::string scenario;
	WeakValueTensor tensor;
	AxisLabels labels;
	std::vector<std::vector<Complex>> marginals;
	Complex total{0.0, 0.0};
};

/// Weak tensor when the scenario has a post-selection, expectation tensor otherwise.
SchemeDocument make_scheme(const Scenario& s);
SchemeDocument make_scheme(std::string name, WeakValueTensor t, AxisLabels labels);

nlohmann::json to_json(const SchemeDocument& doc);
/// Throws SchemaViolation naming the offending field.
SchemeDocument scheme_from_json(const nlohmann::json& j);

enum class SchemeFormat
{
	json,
	text,
	svg
};

/// Throws SchemaViolation for unknown names.
SchemeFormat parse_format(std::string_view name);

/// Header, grid (rank 2) or cube slices (rank 3) or a component list,
/// followed by per-axis marginals and the total.
std::string render_scheme_text(const SchemeDocument& doc);
std::string render_scheme(const SchemeDocument& doc, SchemeFormat format);
void write_scheme(const SchemeDocument& doc, const std::filesystem::path& path, SchemeFormat format);

nlohmann::json scenario_to_json(const Scenario& s);
/// Throws ParseError (with line and column) or SchemaViolation naming the
/// field. Orthogonal selections are accepted here and rejected only when a
/// weak tensor is computed.
Scenario scenario_from_json_text(std::string_view text);
Scenario read_scenario_file(const std::filesystem::path& path);
void write_scenario_file(const Scenario& s, const std::filesystem::path& path);

} // namespace weakvis
