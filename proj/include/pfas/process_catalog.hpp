#pragma once

// Patterning process classes: per-category fabrication step counts, mask
// counts and exposure class for each metal-line process, plus the relative
// exposure energy of a mask.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfas {

struct StepCounts {
  int dry_etch = 0;
  int litho = 0;
  int metallization = 0;
  int metrology = 0;
  int wet_etch = 0;
  int deposition = 0;

  constexpr int total() const {
    return dry_etch + litho + metallization + metrology + wet_etch + deposition;
  }
  constexpr bool non_negative() const {
    return dry_etch >= 0 && litho >= 0 && metallization >= 0 && metrology >= 0 &&
           wet_etch >= 0 && deposition >= 0;
  }

  constexpr StepCounts& operator+=(const StepCounts& o) {
    dry_etch += o.dry_etch;
    litho += o.litho;
    metallization += o.metallization;
    metrology += o.metrology;
    wet_etch += o.wet_etch;
    deposition += o.deposition;
    return *this;
  }
  friend constexpr StepCounts operator+(StepCounts a, const StepCounts& b) { return a += b; }
  friend constexpr bool operator==(const StepCounts&, const StepCounts&) = default;
};

enum class ExposureClass : std::uint8_t { DuvDry, DuvImmersion, Euv };

inline constexpr ExposureClass kAllExposureClasses[] = {
    ExposureClass::DuvDry, ExposureClass::DuvImmersion, ExposureClass::Euv};

// "DUV_DRY", "DUV_IMMERSION", "EUV"
std::string_view to_string(ExposureClass e);
std::optional<ExposureClass> parse_exposure(std::string_view s);

inline constexpr bool is_euv(ExposureClass e) { return e == ExposureClass::Euv; }

struct ProcessClass {
  std::string id;
  StepCounts steps;
  int masks = 1;
  ExposureClass exposure = ExposureClass::DuvImmersion;

  friend bool operator==(const ProcessClass&, const ProcessClass&) = default;
};

// Relative exposure energy per mask. Dimensionless; DUV masks are the unit.
struct EnergyWeights {
  double per_euv_mask = 10.0;
  double per_duv_mask = 1.0;

  friend bool operator==(const EnergyWeights&, const EnergyWeights&) = default;
};

// Throws InvalidFieldError unless both weights are > 0 and finite.
void validate(const EnergyWeights& w);

double mask_energy(const ProcessClass& proc, const EnergyWeights& w);

// The nine built-in rows, in canonical table order.
std::span<const ProcessClass> builtin_processes();

// Built-in processes plus per-instance extensions. Built-ins are shared and
// never mutated; extensions only affect the instance they were registered on.
class ProcessCatalog {
 public:
  ProcessCatalog() = default;

  // Throws UnknownProcessError naming the id and listing known ids.
  const ProcessClass& lookup(std::string_view id) const;
  const ProcessClass* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  // Throws ProcessCollisionError or InvalidFieldError.
  void register_process(ProcessClass custom);

  // Built-ins first (table order), then extensions in id order.
  std::vector<std::string> ids() const;
  const std::map<std::string, ProcessClass, std::less<>>& extensions() const {
    return extensions_;
  }

 private:
  std::map<std::string, ProcessClass, std::less<>> extensions_;
};

}  // namespace pfas
