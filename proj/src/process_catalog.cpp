#include "pfas/process_catalog.hpp"

#include <array>
#include <cmath>

#include "pfas/errors.hpp"

namespace pfas {

namespace {

using E = ExposureClass;

// Step order: dry etch, litho, metallization, metrology, wet etch, deposition.
const std::array<ProcessClass, 9> kBuiltins = {{
    {"ArF_LE", {1, 3, 1, 2, 3, 0}, 1, E::DuvDry},
    {"ArFi_LE", {1, 3, 1, 3, 3, 0}, 1, E::DuvImmersion},
    {"ArFi_LE2", {3, 6, 1, 7, 3, 1}, 2, E::DuvImmersion},
    {"ArFi_LE3", {4, 9, 1, 10, 3, 1}, 3, E::DuvImmersion},
    {"ArFi_LE4", {5, 12, 1, 13, 3, 1}, 4, E::DuvImmersion},
    {"ArFi_SADP", {3, 3, 1, 5, 5, 3}, 1, E::DuvImmersion},
    {"ArFi_SAQP", {3, 2, 1, 7, 7, 10}, 1, E::DuvImmersion},
    {"EUV_LE", {1, 3, 1, 3, 3, 0}, 1, E::Euv},
    {"EUV_SA_LE2", {5, 6, 1, 8, 7, 3}, 2, E::Euv},
}};

const ProcessClass* find_builtin(std::string_view id) {
  for (const auto& p : kBuiltins)
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace

std::string_view to_string(ExposureClass e) {
  switch (e) {
    case E::DuvDry: return "DUV_DRY";
    case E::DuvImmersion: return "DUV_IMMERSION";
    case E::Euv: return "EUV";
  }
  return "?";
}

std::optional<ExposureClass> parse_exposure(std::string_view s) {
  for (auto e : kAllExposureClasses)
    if (to_string(e) == s) return e;
  return std::nullopt;
}

void validate(const EnergyWeights& w) {
  if (!(w.per_euv_mask > 0.0) || !std::isfinite(w.per_euv_mask))
    throw InvalidFieldError("energy weight per_euv_mask must be > 0");
  if (!(w.per_duv_mask > 0.0) || !std::isfinite(w.per_duv_mask))
    throw InvalidFieldError("energy weight per_duv_mask must be > 0");
}

double mask_energy(const ProcessClass& proc, const EnergyWeights& w) {
  return proc.masks * (is_euv(proc.exposure) ? w.per_euv_mask : w.per_duv_mask);
}

std::span<const ProcessClass> builtin_processes() { return kBuiltins; }

const ProcessClass* ProcessCatalog::find(std::string_view id) const {
  if (const auto* p = find_builtin(id)) return p;
  auto it = extensions_.find(id);
  return it == extensions_.end() ? nullptr : &it->second;
}

const ProcessClass& ProcessCatalog::lookup(std::string_view id) const {
  if (const auto* p = find(id)) return *p;
  throw UnknownProcessError(std::string(id), ids());
}

void ProcessCatalog::register_process(ProcessClass custom) {
  if (custom.id.empty()) throw InvalidFieldError("process id must not be empty");
  if (find(custom.id)) throw ProcessCollisionError(custom.id);
  if (custom.masks < 1)
    throw InvalidFieldError("process '" + custom.id + "': masks must be >= 1");
  if (!custom.steps.non_negative())
    throw InvalidFieldError("process '" + custom.id + "': step counts must be >= 0");
  auto id = custom.id;
  extensions_.emplace(std::move(id), std::move(custom));
}

std::vector<std::string> ProcessCatalog::ids() const {
  std::vector<std::string> out;
  out.reserve(kBuiltins.size() + extensions_.size());
  for (const auto& p : kBuiltins) out.push_back(p.id);
  for (const auto& [id, _] : extensions_) out.push_back(id);
  return out;
}

}  // namespace pfas
