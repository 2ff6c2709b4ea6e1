#pragma once

// Layer and stack schema (FEOL / MOL / BEOL), built-in stacks, validation and
// per-layer metric derivation.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfas/errors.hpp"
#include "pfas/process_catalog.hpp"

namespace pfas {

enum class Region : std::uint8_t { Feol, Mol, Beol };

inline constexpr Region kAllRegions[] = {Region::Feol, Region::Mol, Region::Beol};

std::string_view to_string(Region r);
std::optional<Region> parse_region(std::string_view s);

enum class LayerTag : std::uint8_t { Routing, PowerGrid };

std::string_view to_string(LayerTag t);
std::optional<LayerTag> parse_tag(std::string_view s);

struct LayerSpec {
  std::string name;
  Region region = Region::Beol;
  std::optional<double> pitch_nm;
  std::optional<std::string> metal_process;
  std::optional<std::string> via_process;
  std::vector<LayerTag> tags;

  bool has_tag(LayerTag t) const;
  bool is_power_grid() const { return has_tag(LayerTag::PowerGrid); }

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

// Parses "M<k>" with k >= 1; nullopt otherwise.
std::optional<int> beol_index(std::string_view layer_name);

struct StackSpec {
  std::string technology_node;
  std::vector<LayerSpec> layers;  // FEOL, then MOL, then BEOL bottom-up

  const LayerSpec* find(std::string_view name) const;
  // Number of BEOL metal layers.
  int beol_layer_count() const;

  friend bool operator==(const StackSpec&, const StackSpec&) = default;
};

struct LayerMetrics {
  std::string name;
  Region region = Region::Beol;
  int litho_steps = 0;
  StepCounts total_steps;
  int masks = 0;
  int pfas_layers = 0;
  double litho_energy = 0.0;
  // Masks per exposure class, indexed by ExposureClass.
  std::array<int, 3> masks_by_exposure{};

  friend bool operator==(const LayerMetrics&, const LayerMetrics&) = default;
};

// Returns the stack unchanged when every rule holds; otherwise throws
// StackValidationError carrying every violation found.
//
// Rule ids: empty-name, duplicate-name, missing-process, unknown-process,
// pitch-range, region-order, beol-name, beol-order.
StackSpec validate_stack(const StackSpec& stack, const ProcessCatalog& catalog);

// Same checks, returning the list instead of throwing.
std::vector<Violation> find_violations(const StackSpec& stack, const ProcessCatalog& catalog);

// 16-layer ASAP7 stack: 4 FEOL, 3 MOL, M1-M9 (M8-M9 power grid).
StackSpec asap7_preset();

enum class N7Variant : std::uint8_t { Euv, Duv };

// N7 comparison pair. The EUV variant is the ASAP7 stack; the DUV variant
// replaces every EUV_LE exposure with an immersion equivalent. The DUV
// composition is a constructed fixture, not a foundry flow.
StackSpec n7_fixture(N7Variant variant);

// Named built-in stacks: "asap7", "n7-euv", "n7-duv".
std::optional<StackSpec> preset_by_name(std::string_view name);
std::vector<std::string> preset_names();

LayerMetrics derive_layer_metrics(const LayerSpec& layer, const ProcessCatalog& catalog,
                                  const EnergyWeights& weights);

}  // namespace pfas
