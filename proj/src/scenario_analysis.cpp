#include "pfas/scenario_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pfas/errors.hpp"

namespace pfas {

Evaluation evaluate(const StackSpec& stack, const ScenarioContext& ctx, const DesignParams& design) {
  Evaluation e;
  e.metrics = stack_metrics(stack, ctx.catalog, ctx.weights);
  e.chip = chip_pfas(e.metrics, design);
  if (ctx.carbon) {
    e.carbon = ctx.ci_range ? carbon_band(e.metrics, design, *ctx.carbon, ctx.ci_range->low,
                                          ctx.ci_range->high)
                            : embodied_carbon(e.metrics, design, *ctx.carbon);
  }
  return e;
}

std::optional<double> safe_ratio(double numerator, double denominator) {
  if (denominator == 0.0) return std::nullopt;
  return numerator / denominator;
}

ComparisonResult compare_stacks(const StackSpec& a, const StackSpec& b, const ScenarioContext& ctx) {
  validate_stack(a, ctx.catalog);
  validate_stack(b, ctx.catalog);
  ComparisonResult r;
  r.a = evaluate(a, ctx);
  r.b = evaluate(b, ctx);
  const auto& ma = r.a.metrics;
  const auto& mb = r.b.metrics;
  r.ratio_pfas = safe_ratio(ma.total_pfas_layers, mb.total_pfas_layers);
  for (auto reg : kAllRegions) {
    r.region_ratio[static_cast<std::size_t>(reg)] = safe_ratio(ma.region(reg), mb.region(reg));
  }
  r.ratio_total_steps = safe_ratio(ma.total_steps.total(), mb.total_steps.total());
  r.ratio_litho_steps = safe_ratio(ma.total_steps.litho, mb.total_steps.litho);
  r.ratio_litho_energy = safe_ratio(ma.total_litho_energy, mb.total_litho_energy);
  r.percent_reduction =
      safe_ratio(ma.total_pfas_layers - mb.total_pfas_layers, ma.total_pfas_layers);
  return r;
}

StackSpec truncate_beol(const StackSpec& stack, int top_index, bool retain_power_grid) {
  StackSpec out{stack.technology_node, {}};
  for (const auto& l : stack.layers) {
    if (l.region != Region::Beol) {
      out.layers.push_back(l);
      continue;
    }
    const auto idx = beol_index(l.name);
    if ((retain_power_grid && l.is_power_grid()) || (idx && *idx <= top_index))
      out.layers.push_back(l);
  }
  return out;
}

int routing_beol_pfas(const StackMetrics& metrics, const StackSpec& stack) {
  int sum = 0;
  for (const auto& lm : metrics.per_layer) {
    if (lm.region != Region::Beol) continue;
    const LayerSpec* spec = stack.find(lm.name);
    if (spec && !spec->is_power_grid()) sum += lm.pfas_layers;
  }
  return sum;
}

namespace {

int max_beol_index(const StackSpec& stack) {
  int top = 0;
  for (const auto& l : stack.layers)
    if (l.region == Region::Beol)
      if (auto idx = beol_index(l.name)) top = std::max(top, *idx);
  return top;
}

// Index of a BEOL layer that must exist in the stack.
int require_beol_layer(const StackSpec& stack, const std::string& name, const char* kind) {
  const LayerSpec* l = stack.find(name);
  auto idx = beol_index(name);
  if (!l || l->region != Region::Beol || !idx)
    throw ScenarioError(kind, "'" + name + "' is not a BEOL layer of stack '" +
                                  stack.technology_node + "'");
  return *idx;
}

SweepPoint make_point(const StackSpec& variant, std::string label, const ScenarioContext& ctx) {
  SweepPoint p;
  p.top_routing_layer = std::move(label);
  p.eval = evaluate(variant, ctx);
  p.routing_beol_pfas = routing_beol_pfas(p.eval.metrics, variant);
  p.variant = variant;
  return p;
}

}  // namespace

SweepResult sweep_beol(const StackSpec& stack, const std::vector<std::string>& targets,
                       bool retain_power_grid, const ScenarioContext& ctx) {
  validate_stack(stack, ctx.catalog);
  std::set<int, std::greater<>> indices;
  for (const auto& t : targets) indices.insert(require_beol_layer(stack, t, "unknown-target"));

  SweepResult r;
  r.retain_power_grid = retain_power_grid;
  r.baseline = make_point(stack, "M" + std::to_string(max_beol_index(stack)), ctx);
  for (int idx : indices) {
    r.points.push_back(
        make_point(truncate_beol(stack, idx, retain_power_grid), "M" + std::to_string(idx), ctx));
  }
  return r;
}

SocReport compose_soc(const std::vector<SocBlock>& blocks, const StackSpec& chip_stack,
                      const std::string& target_top, bool retain_power_grid,
                      const ScenarioContext& ctx) {
  validate_stack(chip_stack, ctx.catalog);
  if (blocks.empty()) throw InvalidFieldError("SoC needs at least one block");
  const int target = require_beol_layer(chip_stack, target_top, "unknown-target");

  SocReport r;
  r.target_top = target_top;
  r.retain_power_grid = retain_power_grid;

  int chip_top = 0;
  for (const auto& b : blocks) {
    if (!(b.baseline_area_cm2 > 0.0) || !std::isfinite(b.baseline_area_cm2))
      throw InvalidFieldError("block '" + b.name + "': baseline area must be > 0");
    for (const auto& [layer, f] : b.area_overhead)
      if (!(f >= 1.0) || !std::isfinite(f))
        throw InvalidFieldError("block '" + b.name + "': overhead at " + layer + " must be >= 1");
    const int required = require_beol_layer(chip_stack, b.required_top_layer, "unknown-layer");

    SocBlockResult br;
    br.name = b.name;
    br.required_top_layer = b.required_top_layer;
    br.baseline_area_cm2 = b.baseline_area_cm2;
    if (target >= required) {
      br.routed_top_layer = b.required_top_layer;
      br.overhead = 1.0;
    } else {
      auto it = b.area_overhead.find(target_top);
      if (it == b.area_overhead.end())
        throw ScenarioError("missing-overhead", "block '" + b.name + "' needs " +
                                                    b.required_top_layer +
                                                    " but has no area overhead for " + target_top);
      br.routed_top_layer = target_top;
      br.overhead = it->second;
    }
    br.constrained_area_cm2 = br.baseline_area_cm2 * br.overhead;
    chip_top = std::max(chip_top, std::min(required, target));
    r.baseline_area_cm2 += br.baseline_area_cm2;
    r.constrained_area_cm2 += br.constrained_area_cm2;
    r.blocks.push_back(std::move(br));
  }
  r.area_increase = (r.constrained_area_cm2 - r.baseline_area_cm2) / r.baseline_area_cm2;
  r.chip_top_layer = "M" + std::to_string(chip_top);
  r.constrained_stack = truncate_beol(chip_stack, chip_top, retain_power_grid);

  r.baseline = evaluate(chip_stack, ctx, DesignParams{r.baseline_area_cm2, ctx.design.yield});
  r.constrained =
      evaluate(r.constrained_stack, ctx, DesignParams{r.constrained_area_cm2, ctx.design.yield});
  r.pfas_layer_ratio = static_cast<double>(r.baseline.metrics.total_pfas_layers) /
                       r.constrained.metrics.total_pfas_layers;
  r.chip_pfas_ratio = safe_ratio(r.baseline.chip.value, r.constrained.chip.value);
  return r;
}

TrendSeries normalize_trend(const TrendSeries& series, const std::string& reference) {
  std::set<std::string, std::less<>> nodes;
  const TrendPoint* ref = nullptr;
  for (const auto& p : series.points) {
    if (!nodes.insert(p.node).second)
      throw ScenarioError("duplicate-node", "trend node '" + p.node + "' appears more than once");
    if (p.node == reference) ref = &p;
  }
  if (!ref) throw ScenarioError("missing-reference", "reference node '" + reference + "' not in series");
  if (ref->value == 0.0 || !std::isfinite(ref->value))
    throw ScenarioError("zero-reference", "reference node '" + reference + "' has value " +
                                              number_text(ref->value));
  const double denom = ref->value;
  TrendSeries out;
  out.reference = reference;
  out.points.reserve(series.points.size());
  for (const auto& p : series.points) out.points.push_back({p.node, p.value / denom});
  return out;
}

}  // namespace pfas
