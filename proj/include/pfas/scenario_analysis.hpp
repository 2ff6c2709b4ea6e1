#pragma once

// Trade-off scenarios built on the PFAS engine and the carbon model: stack
// comparison, BEOL routing-layer sweeps, SoC composition under a routing
// constraint, and cross-node trend normalization.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfas/carbon_model.hpp"
#include "pfas/pfas_engine.hpp"
#include "pfas/process_catalog.hpp"
#include "pfas/stack_model.hpp"

namespace pfas {

struct CarbonIntensityRange {
  double low = kRenewableCarbonIntensity;
  double high = kCoalCarbonIntensity;
};

// Everything a scenario needs besides the stacks themselves.
struct ScenarioContext {
  ProcessCatalog catalog;
  EnergyWeights weights;
  DesignParams design;
  std::optional<CarbonParams> carbon;
  std::optional<CarbonIntensityRange> ci_range;
};

// Metrics, chip-level PFAS and (when carbon parameters are present) carbon for
// one stack at one design point.
struct Evaluation {
  StackMetrics metrics;
  ChipPfas chip;
  std::optional<CarbonResult> carbon;
};

Evaluation evaluate(const StackSpec& stack, const ScenarioContext& ctx, const DesignParams& design);
inline Evaluation evaluate(const StackSpec& stack, const ScenarioContext& ctx) {
  return evaluate(stack, ctx, ctx.design);
}

// ---------------------------------------------------------------------------
// compare

// numerator / denominator, absent when the denominator is zero.
std::optional<double> safe_ratio(double numerator, double denominator);

struct ComparisonResult {
  Evaluation a;
  Evaluation b;
  std::optional<double> ratio_pfas;                    // pfas(a) / pfas(b)
  std::array<std::optional<double>, 3> region_ratio;  // indexed by Region
  std::optional<double> ratio_total_steps;
  std::optional<double> ratio_litho_steps;
  std::optional<double> ratio_litho_energy;
  std::optional<double> percent_reduction;  // (pfas(a) - pfas(b)) / pfas(a), a fraction
};

// Validates both stacks (StackValidationError) and compares a against b.
ComparisonResult compare_stacks(const StackSpec& a, const StackSpec& b, const ScenarioContext& ctx);

// ---------------------------------------------------------------------------
// BEOL sweep

// Keeps FEOL/MOL, routing BEOL layers up to and including top_index, and
// power-grid layers when retain_power_grid is set.
StackSpec truncate_beol(const StackSpec& stack, int top_index, bool retain_power_grid);

// PFAS layers on BEOL layers not tagged power_grid.
int routing_beol_pfas(const StackMetrics& metrics, const StackSpec& stack);

struct SweepPoint {
  std::string top_routing_layer;
  StackSpec variant;
  Evaluation eval;
  int routing_beol_pfas = 0;
};

struct SweepResult {
  bool retain_power_grid = false;
  SweepPoint baseline;             // unmodified stack
  std::vector<SweepPoint> points;  // one per target, descending layer order
};

// Throws ScenarioError("unknown-target") for a target that is not a BEOL
// layer of the stack.
SweepResult sweep_beol(const StackSpec& stack, const std::vector<std::string>& targets,
                       bool retain_power_grid, const ScenarioContext& ctx);

// ---------------------------------------------------------------------------
// SoC composition

struct SocBlock {
  std::string name;
  double baseline_area_cm2 = 0.0;
  std::string required_top_layer;
  // Area multiplier when the block is routed no higher than the key layer.
  std::map<std::string, double> area_overhead;
};

struct SocBlockResult {
  std::string name;
  std::string required_top_layer;
  std::string routed_top_layer;
  double overhead = 1.0;
  double baseline_area_cm2 = 0.0;
  double constrained_area_cm2 = 0.0;
};

struct SocReport {
  std::string target_top;
  bool retain_power_grid = true;
  std::string chip_top_layer;  // highest routing layer any block still needs
  std::vector<SocBlockResult> blocks;
  double baseline_area_cm2 = 0.0;
  double constrained_area_cm2 = 0.0;
  double area_increase = 0.0;  // fraction of baseline area
  StackSpec constrained_stack;
  Evaluation baseline;
  Evaluation constrained;
  double pfas_layer_ratio = 0.0;           // baseline layers / constrained layers
  std::optional<double> chip_pfas_ratio;  // baseline chip PFAS / constrained chip PFAS
};

// Chip-global accounting: one mask set for the die. Block areas replace
// ctx.design.area_cm2; ctx.design.yield applies to both chips.
// Throws ScenarioError("missing-overhead" | "unknown-target" | "unknown-layer")
// and InvalidFieldError for bad block records.
SocReport compose_soc(const std::vector<SocBlock>& blocks, const StackSpec& chip_stack,
                      const std::string& target_top, bool retain_power_grid,
                      const ScenarioContext& ctx);

// ---------------------------------------------------------------------------
// trends

struct TrendPoint {
  std::string node;
  double value = 0.0;

  friend bool operator==(const TrendPoint&, const TrendPoint&) = default;
};

struct TrendSeries {
  std::vector<TrendPoint> points;
  std::optional<std::string> reference;  // set once normalized

  friend bool operator==(const TrendSeries&, const TrendSeries&) = default;
};

// Divides every value by the reference node's value. Throws
// ScenarioError("missing-reference" | "zero-reference" | "duplicate-node").
TrendSeries normalize_trend(const TrendSeries& series, const std::string& reference);

}  // namespace pfas
