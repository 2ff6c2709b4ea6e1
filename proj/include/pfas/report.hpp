#pragma once

// Report rendering. JSON is the canonical machine format (keys in schema
// order, full precision); CSV flattens per-layer or per-point rows with full
// precision; the table format is for people and prints 6 significant digits.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pfas/config.hpp"
#include "pfas/scenario_analysis.hpp"

namespace pfas {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view s);

// Shortest text that reads back to the same double ("29", "0.875", "1.2e-05").
std::string format_full(double v);
// Six significant digits.
std::string format_human(double v);

// Top-level report object: schema_version, tool_version, command, inputs.
Json report_header(std::string_view command, Json inputs);
std::string render_json(const Json& doc);

Json inputs_json(const std::string& stack_label, const StackSpec& stack, const ScenarioContext& ctx);

Json to_json(const StackMetrics& m);
Json to_json(const ChipPfas& c);
Json to_json(const CarbonResult& c);
Json to_json(const Evaluation& e);
Json to_json(const ComparisonResult& r);
Json to_json(const SweepResult& r);
Json to_json(const SocReport& r);
Json trend_json(const TrendSeries& raw, const TrendSeries& normalized);
Json catalog_json(const ProcessCatalog& catalog);
Json pfas_uses_json();

// Per-layer rows in stack order plus a trailing TOTAL row.
std::string layers_csv(const StackSpec& stack, const StackMetrics& m);
std::string comparison_csv(const ComparisonResult& r);
std::string sweep_csv(const SweepResult& r);
std::string soc_csv(const SocReport& r);
std::string trend_csv(const TrendSeries& raw, const TrendSeries& normalized);
std::string catalog_csv(const ProcessCatalog& catalog);
std::string pfas_uses_csv();

std::string analyze_table(const StackSpec& stack, const Evaluation& e);
std::string comparison_table(const ComparisonResult& r);
std::string sweep_table(const SweepResult& r);
std::string soc_table(const SocReport& r);
std::string trend_table(const TrendSeries& raw, const TrendSeries& normalized);
std::string catalog_table(const ProcessCatalog& catalog);
std::string pfas_uses_table();

}  // namespace pfas
