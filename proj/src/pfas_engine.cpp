#include "pfas/pfas_engine.hpp"

#include <cmath>

#include "pfas/errors.hpp"

namespace pfas {

void StackMetrics::append(const LayerMetrics& layer) {
  total_pfas_layers += layer.pfas_layers;
  by_region[static_cast<std::size_t>(layer.region)] += layer.pfas_layers;
  for (std::size_t i = 0; i < by_exposure.size(); ++i) by_exposure[i] += layer.masks_by_exposure[i];
  total_steps += layer.total_steps;
  total_litho_energy += layer.litho_energy;
  per_layer.push_back(layer);
}

void validate(const DesignParams& design) {
  if (!(design.area_cm2 > 0.0) || !std::isfinite(design.area_cm2))
    throw DomainError("die area must be > 0 cm^2 (got " + number_text(design.area_cm2) + ")");
  if (!(design.yield > 0.0 && design.yield <= 1.0))
    throw DomainError("fab yield must lie in (0, 1] (got " + number_text(design.yield) + ")");
}

StackMetrics stack_metrics(const StackSpec& stack, const ProcessCatalog& catalog,
                           const EnergyWeights& weights) {
  validate(weights);
  StackMetrics m;
  m.technology_node = stack.technology_node;
  m.per_layer.reserve(stack.layers.size());
  for (const auto& layer : stack.layers) m.append(derive_layer_metrics(layer, catalog, weights));
  return m;
}

ChipPfas chip_pfas(const StackMetrics& metrics, const DesignParams& design) {
  validate(design);
  return ChipPfas{metrics.total_pfas_layers * design.area_cm2 / design.yield,
                  metrics.technology_node, metrics.total_pfas_layers, design.area_cm2,
                  design.yield};
}

StepCounts step_totals(const StackSpec& stack, const ProcessCatalog& catalog) {
  StepCounts total;
  for (const auto& layer : stack.layers)
    for (const auto* id : {&layer.metal_process, &layer.via_process})
      if (*id) total += catalog.lookup(**id).steps;
  return total;
}

}  // namespace pfas
