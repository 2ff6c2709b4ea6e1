#pragma once

// Parameterized embodied-carbon estimate for one chip:
//
//   kg CO2e = (area / yield) * ( CI * (e_litho * E_litho + e_base)
//                                + gas + material )
//
// E_litho is the stack's relative litho energy; every other term is per cm^2.
// Only the litho term depends on the metal stack. All five parameters are
// required; the library has no defaults for them.

#include <optional>

#include "pfas/pfas_engine.hpp"

namespace pfas {

struct CarbonParams {
  double carbon_intensity = 0.0;      // kg CO2e / kWh
  double energy_per_unit_litho = 0.0;  // kWh per unit of relative litho energy, per cm^2
  double energy_per_area_base = 0.0;   // kWh / cm^2, non-litho fab energy
  double gas_per_area = 0.0;           // kg CO2e / cm^2, direct gas emissions
  double material_per_area = 0.0;      // kg CO2e / cm^2, materials procurement
};

// Throws InvalidFieldError when any parameter is negative or non-finite.
void validate(const CarbonParams& params);

struct CarbonBand {
  double ci_low = 0.0;
  double ci_high = 0.0;
  double low_kg = 0.0;
  double high_kg = 0.0;
};

struct CarbonResult {
  double embodied_kg = 0.0;  // at params.carbon_intensity
  std::optional<CarbonBand> band;
};

// Documented renewable and coal carbon intensities used by the example
// profile. Configuration values, not model constants.
inline constexpr double kRenewableCarbonIntensity = 0.02;
inline constexpr double kCoalCarbonIntensity = 0.82;

CarbonResult embodied_carbon(const StackMetrics& metrics, const DesignParams& design,
                             const CarbonParams& params);

// Throws DomainError when ci_low > ci_high.
CarbonResult carbon_band(const StackMetrics& metrics, const DesignParams& design,
                         const CarbonParams& params, double ci_low, double ci_high);

}  // namespace pfas
