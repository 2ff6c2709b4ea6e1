#include "pfas/carbon_model.hpp"

#include <cmath>
#include <string>

#include "pfas/errors.hpp"

namespace pfas {

namespace {

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw InvalidFieldError(std::string("carbon parameter ") + name + " must be >= 0");
}

double evaluate(double litho_energy, const DesignParams& d, const CarbonParams& p) {
  const double electricity_kwh = p.energy_per_unit_litho * litho_energy + p.energy_per_area_base;
  const double per_cm2 = p.carbon_intensity * electricity_kwh + p.gas_per_area + p.material_per_area;
  return d.area_cm2 / d.yield * per_cm2;
}

}  // namespace

void validate(const CarbonParams& p) {
  require_non_negative(p.carbon_intensity, "carbon_intensity");
  require_non_negative(p.energy_per_unit_litho, "energy_per_unit_litho");
  require_non_negative(p.energy_per_area_base, "energy_per_area_base");
  require_non_negative(p.gas_per_area, "gas_per_area");
  require_non_negative(p.material_per_area, "material_per_area");
}

CarbonResult embodied_carbon(const StackMetrics& metrics, const DesignParams& design,
                             const CarbonParams& params) {
  validate(design);
  validate(params);
  return CarbonResult{evaluate(metrics.total_litho_energy, design, params), std::nullopt};
}

CarbonResult carbon_band(const StackMetrics& metrics, const DesignParams& design,
                         const CarbonParams& params, double ci_low, double ci_high) {
  if (!(ci_low <= ci_high))
    throw DomainError("carbon-intensity range is inverted: low " + number_text(ci_low) +
                      " > high " + number_text(ci_high));
  CarbonResult r = embodied_carbon(metrics, design, params);
  CarbonParams lo = params;
  CarbonParams hi = params;
  lo.carbon_intensity = ci_low;
  hi.carbon_intensity = ci_high;
  validate(lo);
  validate(hi);
  r.band = CarbonBand{ci_low, ci_high, evaluate(metrics.total_litho_energy, design, lo),
                      evaluate(metrics.total_litho_energy, design, hi)};
  return r;
}

}  // namespace pfas
