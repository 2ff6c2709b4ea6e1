#pragma once

// JSON configuration documents: analysis configs, stack documents and carbon
// profiles. Every document carries schema_version = 1.
//
// Config layout (all sections optional except where an analysis needs them):
//
//   {
//     "schema_version": 1,
//     "stack": "asap7" | {"preset": "..."} | {"path": "..."} | {<stack document>},
//     "processes": [ {"id", "exposure", "masks", "steps": {...}} ],
//     "fab": {"yield", "energy_weights": {"per_euv_mask", "per_duv_mask"},
//             "carbon": {<five carbon parameters>}, "ci_band": {"low", "high"}},
//     "design": {"area_cm2", "yield"},
//     "compare": {"a": <stack source>, "b": <stack source>},
//     "sweep": {"targets": ["M7", ...], "retain_power_grid": false},
//     "soc": {"target": "M4", "retain_power_grid": true, "blocks": [...]},
//     "trend": {"reference": "28nm", "points": [{"node", "value"}]}
//   }

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfas/carbon_model.hpp"
#include "pfas/errors.hpp"
#include "pfas/process_catalog.hpp"
#include "pfas/scenario_analysis.hpp"
#include "pfas/stack_model.hpp"

namespace pfas {

inline constexpr int kSchemaVersion = 1;

enum class ConfigMode { Strict, Lenient };

struct ConfigIssue {
  std::string location;  // "line 3, column 7" or a JSON pointer such as "/design/yield"
  std::string rule;      // syntax, schema, range, unknown-key, or a stack rule id
  std::string message;
};

class ConfigError : public PfasError {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

struct StackSource {
  std::string label;  // preset name, file path, or "inline"
  StackSpec stack;
};

struct CompareSection {
  StackSource a;
  StackSource b;
};

struct SweepSection {
  std::vector<std::string> targets;
  bool retain_power_grid = false;
};

struct SocSection {
  std::string target;
  bool retain_power_grid = true;
  std::vector<SocBlock> blocks;
};

struct TrendSection {
  std::string reference;
  TrendSeries series;
};

struct CarbonProfile {
  CarbonParams params;
  std::optional<CarbonIntensityRange> ci_range;
};

struct ConfigDocument {
  std::optional<StackSource> stack;
  ProcessCatalog catalog;
  EnergyWeights weights;
  std::optional<double> area_cm2;
  std::optional<double> yield;
  std::optional<CarbonParams> carbon;
  std::optional<CarbonIntensityRange> ci_range;
  std::optional<CompareSection> compare;
  std::optional<SweepSection> sweep;
  std::optional<SocSection> soc;
  std::optional<TrendSection> trend;
  std::vector<ConfigIssue> warnings;  // unknown keys in lenient mode
};

// Relative "path" stack sources resolve against base_dir. Throws ConfigError
// carrying every issue found.
ConfigDocument parse_config(std::string_view text, ConfigMode mode = ConfigMode::Strict,
                            const std::filesystem::path& base_dir = {});

// A standalone stack document. Custom processes it declares are registered
// into `catalog`.
StackSpec parse_stack_document(std::string_view text, ProcessCatalog& catalog,
                               ConfigMode mode = ConfigMode::Strict);

CarbonProfile parse_carbon_profile(std::string_view text, ConfigMode mode = ConfigMode::Strict);

// Stack document text that parse_stack_document reads back to an equal stack.
// Extension processes referenced by the stack are embedded.
std::string stack_document(const StackSpec& stack, const ProcessCatalog& catalog);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace pfas
