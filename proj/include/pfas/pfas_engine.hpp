#pragma once

// Stack-level PFAS accounting. The PFAS measure is the number of
// PFAS-containing lithography layers (one per mask), scaled to a chip by
// effective area (area / yield). It is a proxy, never a chemical mass.

#include <array>
#include <string>
#include <vector>

#include "pfas/process_catalog.hpp"
#include "pfas/stack_model.hpp"

namespace pfas {

struct StackMetrics {
  std::string technology_node;
  int total_pfas_layers = 0;
  std::array<int, 3> by_region{};    // indexed by Region
  std::array<int, 3> by_exposure{};  // masks, indexed by ExposureClass
  StepCounts total_steps;
  double total_litho_energy = 0.0;
  std::vector<LayerMetrics> per_layer;  // stack order

  int region(Region r) const { return by_region[static_cast<std::size_t>(r)]; }
  int exposure(ExposureClass e) const { return by_exposure[static_cast<std::size_t>(e)]; }
  int euv_masks() const { return exposure(ExposureClass::Euv); }
  int duv_masks() const {
    return exposure(ExposureClass::DuvDry) + exposure(ExposureClass::DuvImmersion);
  }

  // Adds one layer's contribution to every aggregate.
  void append(const LayerMetrics& layer);
};

struct DesignParams {
  double area_cm2 = 1.0;
  double yield = 1.0;  // (0, 1]
};

// Throws DomainError unless area_cm2 > 0 and 0 < yield <= 1.
void validate(const DesignParams& design);

inline constexpr const char* kChipPfasUnit = "PFAS-containing layer*cm^2 (proxy)";

struct ChipPfas {
  double value = 0.0;
  std::string stack_id;
  int pfas_layers = 0;
  double area_cm2 = 0.0;
  double yield = 0.0;
};

StackMetrics stack_metrics(const StackSpec& stack, const ProcessCatalog& catalog,
                           const EnergyWeights& weights = {});

ChipPfas chip_pfas(const StackMetrics& metrics, const DesignParams& design);

StepCounts step_totals(const StackSpec& stack, const ProcessCatalog& catalog);

}  // namespace pfas
