#include "pfas/stack_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "pfas/errors.hpp"

namespace pfas {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Feol: return "FEOL";
    case Region::Mol: return "MOL";
    case Region::Beol: return "BEOL";
  }
  return "?";
}

std::optional<Region> parse_region(std::string_view s) {
  for (auto r : kAllRegions)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

std::string_view to_string(LayerTag t) {
  return t == LayerTag::PowerGrid ? "power_grid" : "routing";
}

std::optional<LayerTag> parse_tag(std::string_view s) {
  if (s == "routing") return LayerTag::Routing;
  if (s == "power_grid") return LayerTag::PowerGrid;
  return std::nullopt;
}

bool LayerSpec::has_tag(LayerTag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::optional<int> beol_index(std::string_view name) {
  if (name.size() < 2 || name.front() != 'M') return std::nullopt;
  int k = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc{} || ptr != last || k < 1 || name[1] == '0') return std::nullopt;
  return k;
}

const LayerSpec* StackSpec::find(std::string_view name) const {
  for (const auto& l : layers)
    if (l.name == name) return &l;
  return nullptr;
}

int StackSpec::beol_layer_count() const {
  return static_cast<int>(std::count_if(layers.begin(), layers.end(),
                                        [](const LayerSpec& l) { return l.region == Region::Beol; }));
}

std::vector<Violation> find_violations(const StackSpec& stack, const ProcessCatalog& catalog) {
  std::vector<Violation> out;
  std::set<std::string, std::less<>> seen;
  const LayerSpec* prev = nullptr;
  std::optional<int> prev_beol;

  for (const auto& layer : stack.layers) {
    const std::string& n = layer.name;
    if (n.empty()) out.push_back({n, "empty-name", "layer name must not be empty"});
    else if (!seen.insert(n).second)
      out.push_back({n, "duplicate-name", "layer name '" + n + "' appears more than once"});

    if (!layer.metal_process && !layer.via_process)
      out.push_back({n, "missing-process", "layer needs a metal process, a via process, or both"});
    for (const auto* id : {&layer.metal_process, &layer.via_process}) {
      if (*id && !catalog.contains(**id))
        out.push_back({n, "unknown-process",
                       "process '" + **id + "' is not in the catalog"});
    }

    if (layer.pitch_nm && !(std::isfinite(*layer.pitch_nm) && *layer.pitch_nm > 0.0))
      out.push_back({n, "pitch-range", "pitch_nm must be > 0"});

    if (prev && layer.region < prev->region)
      out.push_back({n, "region-order",
                     std::string(to_string(layer.region)) + " layer follows " +
                         std::string(to_string(prev->region)) + " layer '" + prev->name + "'"});

    if (layer.region == Region::Beol) {
      auto idx = beol_index(n);
      if (!idx) {
        out.push_back({n, "beol-name", "BEOL layer names must be M<k> with k >= 1"});
      } else {
        if (prev_beol && *idx <= *prev_beol)
          out.push_back({n, "beol-order", "BEOL index " + std::to_string(*idx) +
                                              " does not exceed previous index " +
                                              std::to_string(*prev_beol)});
        prev_beol = idx;
      }
    }
    prev = &layer;
  }
  return out;
}

StackSpec validate_stack(const StackSpec& stack, const ProcessCatalog& catalog) {
  auto violations = find_violations(stack, catalog);
  if (!violations.empty()) throw StackValidationError(std::move(violations));
  return stack;
}

namespace {

LayerSpec make_layer(std::string name, Region region, double pitch,
                     std::optional<std::string> metal, std::optional<std::string> via,
                     std::vector<LayerTag> tags = {}) {
  return LayerSpec{std::move(name), region, pitch, std::move(metal), std::move(via), std::move(tags)};
}

}  // namespace

StackSpec asap7_preset() {
  using R = Region;
  const auto routing = std::vector<LayerTag>{LayerTag::Routing};
  const auto power = std::vector<LayerTag>{LayerTag::PowerGrid};
  StackSpec s{"7nm-ASAP7", {}};
  auto& L = s.layers;
  L.push_back(make_layer("Fin", R::Feol, 27, "ArFi_SAQP", std::nullopt));
  L.push_back(make_layer("Active", R::Feol, 108, "EUV_LE", std::nullopt));
  L.push_back(make_layer("Gate", R::Feol, 54, "ArFi_SADP", std::nullopt));
  L.push_back(make_layer("SDT", R::Feol, 54, "EUV_LE", std::nullopt));
  L.push_back(make_layer("LISD", R::Mol, 54, "EUV_LE", std::nullopt));
  L.push_back(make_layer("LIG", R::Mol, 54, "EUV_LE", std::nullopt));
  L.push_back(make_layer("VIA0", R::Mol, 25, std::nullopt, "EUV_LE"));
  for (int k = 1; k <= 3; ++k)
    L.push_back(make_layer("M" + std::to_string(k), R::Beol, 36, "EUV_LE", "EUV_LE", routing));
  for (int k = 4; k <= 7; ++k)
    L.push_back(make_layer("M" + std::to_string(k), R::Beol, k <= 5 ? 48 : 64, "ArFi_SADP",
                           "ArFi_LE2", routing));
  for (int k = 8; k <= 9; ++k)
    L.push_back(make_layer("M" + std::to_string(k), R::Beol, 80, "ArFi_LE", "ArFi_LE", power));
  return s;
}

StackSpec n7_fixture(N7Variant variant) {
  StackSpec s = asap7_preset();
  if (variant == N7Variant::Euv) {
    s.technology_node = "7nm-N7-EUV";
    return s;
  }
  s.technology_node = "7nm-N7-DUV";
  for (auto& l : s.layers) {
    if (l.name == "Active" || l.name == "SDT" || l.name == "LISD") {
      l.metal_process = "ArFi_LE2";
    } else if (l.name == "LIG") {
      l.metal_process = "ArFi_LE";
    } else if (l.name == "VIA0") {
      l.via_process = "ArFi_LE2";
    } else if (l.metal_process == "EUV_LE" && l.via_process == "EUV_LE") {
      l.metal_process = "ArFi_SADP";
      l.via_process = "ArFi_LE2";
    }
  }
  return s;
}

std::optional<StackSpec> preset_by_name(std::string_view name) {
  if (name == "asap7") return asap7_preset();
  if (name == "n7-euv") return n7_fixture(N7Variant::Euv);
  if (name == "n7-duv") return n7_fixture(N7Variant::Duv);
  return std::nullopt;
}

std::vector<std::string> preset_names() { return {"asap7", "n7-euv", "n7-duv"}; }

LayerMetrics derive_layer_metrics(const LayerSpec& layer, const ProcessCatalog& catalog,
                                  const EnergyWeights& weights) {
  LayerMetrics m;
  m.name = layer.name;
  m.region = layer.region;
  for (const auto* id : {&layer.metal_process, &layer.via_process}) {
    if (!*id) continue;
    const ProcessClass& p = catalog.lookup(**id);
    m.total_steps += p.steps;
    m.masks += p.masks;
    m.litho_energy += mask_energy(p, weights);
    m.masks_by_exposure[static_cast<std::size_t>(p.exposure)] += p.masks;
  }
  m.litho_steps = m.total_steps.litho;
  m.pfas_layers = m.masks;
  return m;
}

}  // namespace pfas
