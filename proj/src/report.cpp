#include "pfas/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "pfas/reference_data.hpp"

namespace pfas {

namespace {

constexpr std::string_view kStepNames[] = {"dry_etch",  "litho",    "metallization",
                                           "metrology", "wet_etch", "deposition"};

std::array<int, 6> step_values(const StepCounts& s) {
  return {s.dry_etch, s.litho, s.metallization, s.metrology, s.wet_etch, s.deposition};
}

Json steps_json(const StepCounts& s) {
  Json j;
  const auto v = step_values(s);
  for (std::size_t i = 0; i < v.size(); ++i) j[std::string(kStepNames[i])] = v[i];
  j["total"] = s.total();
  return j;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

std::string opt_full(const std::optional<double>& v) { return v ? format_full(*v) : std::string(); }
std::string opt_human(const std::optional<double>& v) { return v ? format_human(*v) : "-"; }

// Left-aligned text columns separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void rule() { rules_.push_back(rows_.size()); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::size_t total = 0;
    for (auto w : width) total += w + 2;
    const std::string line(total > 2 ? total - 2 : 0, '-');
    std::ostringstream os;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (std::find(rules_.begin(), rules_.end(), k) != rules_.end()) os << line << "\n";
      std::string text;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        text += rows_[k][i];
        if (i + 1 < rows_[k].size()) text += std::string(width[i] - rows_[k][i].size() + 2, ' ');
      }
      os << text << "\n";
      if (k == 0) os << line << "\n";
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::size_t> rules_;
};

std::string carbon_lines(const CarbonResult& c) {
  std::string s = "Embodied carbon: " + format_human(c.embodied_kg) + " kg CO2e";
  if (c.band)
    s += "  (band " + format_human(c.band->low_kg) + " .. " + format_human(c.band->high_kg) +
         " kg CO2e at CI " + format_human(c.band->ci_low) + " .. " + format_human(c.band->ci_high) +
         " kg CO2e/kWh)";
  return s + "\n";
}

std::string chip_line(const ChipPfas& c) {
  return "Chip PFAS (proxy): " + format_human(c.value) + " layer*cm^2  (area " +
         format_human(c.area_cm2) + " cm^2, yield " + format_human(c.yield) + ")\n";
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::string format_full(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json report_header(std::string_view command, Json inputs) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = std::string(kToolVersion);
  j["command"] = std::string(command);
  j["inputs"] = std::move(inputs);
  return j;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json inputs_json(const std::string& stack_label, const StackSpec& stack, const ScenarioContext& ctx) {
  Json j;
  j["stack"] = stack_label;
  j["technology_node"] = stack.technology_node;
  j["area_cm2"] = ctx.design.area_cm2;
  j["yield"] = ctx.design.yield;
  j["energy_weights"] = {{"per_euv_mask", ctx.weights.per_euv_mask},
                         {"per_duv_mask", ctx.weights.per_duv_mask}};
  if (ctx.carbon) {
    const auto& p = *ctx.carbon;
    j["carbon"] = {{"carbon_intensity", p.carbon_intensity},
                   {"energy_per_unit_litho", p.energy_per_unit_litho},
                   {"energy_per_area_base", p.energy_per_area_base},
                   {"gas_per_area", p.gas_per_area},
                   {"material_per_area", p.material_per_area}};
  }
  if (ctx.ci_range) j["ci_band"] = {{"low", ctx.ci_range->low}, {"high", ctx.ci_range->high}};
  return j;
}

Json to_json(const StackMetrics& m) {
  Json j;
  j["technology_node"] = m.technology_node;
  j["total_pfas_layers"] = m.total_pfas_layers;
  Json regions;
  for (auto r : kAllRegions) regions[std::string(to_string(r))] = m.region(r);
  j["by_region"] = std::move(regions);
  Json exposure;
  for (auto e : kAllExposureClasses) exposure[std::string(to_string(e))] = m.exposure(e);
  j["by_exposure"] = std::move(exposure);
  j["total_steps"] = steps_json(m.total_steps);
  j["total_litho_energy"] = m.total_litho_energy;
  auto layers = Json::array();
  for (const auto& l : m.per_layer) {
    Json jl;
    jl["name"] = l.name;
    jl["region"] = std::string(to_string(l.region));
    jl["litho_steps"] = l.litho_steps;
    jl["litho_energy"] = l.litho_energy;
    jl["pfas_layers"] = l.pfas_layers;
    jl["masks"] = l.masks;
    jl["total_steps"] = steps_json(l.total_steps);
    layers.push_back(std::move(jl));
  }
  j["per_layer"] = std::move(layers);
  return j;
}

Json to_json(const ChipPfas& c) {
  Json j;
  j["value"] = c.value;
  j["unit"] = kChipPfasUnit;
  j["pfas_layers"] = c.pfas_layers;
  j["area_cm2"] = c.area_cm2;
  j["yield"] = c.yield;
  return j;
}

Json to_json(const CarbonResult& c) {
  Json j;
  j["embodied_kg"] = c.embodied_kg;
  if (c.band) {
    j["band"] = {{"ci_low", c.band->ci_low},
                 {"ci_high", c.band->ci_high},
                 {"low_kg", c.band->low_kg},
                 {"high_kg", c.band->high_kg}};
  }
  return j;
}

Json to_json(const Evaluation& e) {
  Json j;
  j["stack_metrics"] = to_json(e.metrics);
  j["chip_pfas"] = to_json(e.chip);
  if (e.carbon) j["carbon"] = to_json(*e.carbon);
  return j;
}

Json to_json(const ComparisonResult& r) {
  Json j;
  j["a"] = to_json(r.a);
  j["b"] = to_json(r.b);
  Json ratios;
  ratios["pfas_layers"] = optional_number(r.ratio_pfas);
  Json regions;
  for (auto reg : kAllRegions)
    regions[std::string(to_string(reg))] =
        optional_number(r.region_ratio[static_cast<std::size_t>(reg)]);
  ratios["by_region"] = std::move(regions);
  ratios["total_steps"] = optional_number(r.ratio_total_steps);
  ratios["litho_steps"] = optional_number(r.ratio_litho_steps);
  ratios["litho_energy"] = optional_number(r.ratio_litho_energy);
  j["ratios_a_over_b"] = std::move(ratios);
  j["percent_reduction"] = optional_number(r.percent_reduction);
  return j;
}

Json to_json(const SweepResult& r) {
  auto point_json = [](const SweepPoint& p) {
    Json j;
    j["top_routing_layer"] = p.top_routing_layer;
    j["layers"] = [&] {
      auto names = Json::array();
      for (const auto& l : p.variant.layers) names.push_back(l.name);
      return names;
    }();
    j["routing_beol_pfas"] = p.routing_beol_pfas;
    j["evaluation"] = to_json(p.eval);
    return j;
  };
  Json j;
  j["retain_power_grid"] = r.retain_power_grid;
  j["baseline"] = point_json(r.baseline);
  auto points = Json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    Json jp = point_json(p);
    Json ratios;
    ratios["total_vs_baseline"] =
        optional_number(safe_ratio(r.baseline.eval.metrics.total_pfas_layers,
                                   p.eval.metrics.total_pfas_layers));
    ratios["routing_vs_first"] =
        optional_number(safe_ratio(r.points.front().routing_beol_pfas, p.routing_beol_pfas));
    ratios["routing_vs_previous"] =
        i == 0 ? Json(nullptr)
               : optional_number(safe_ratio(r.points[i - 1].routing_beol_pfas, p.routing_beol_pfas));
    jp["ratios"] = std::move(ratios);
    points.push_back(std::move(jp));
  }
  j["points"] = std::move(points);
  return j;
}

Json to_json(const SocReport& r) {
  Json j;
  j["target_top"] = r.target_top;
  j["retain_power_grid"] = r.retain_power_grid;
  j["chip_top_layer"] = r.chip_top_layer;
  auto blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json jb;
    jb["name"] = b.name;
    jb["required_top_layer"] = b.required_top_layer;
    jb["routed_top_layer"] = b.routed_top_layer;
    jb["overhead"] = b.overhead;
    jb["baseline_area_cm2"] = b.baseline_area_cm2;
    jb["constrained_area_cm2"] = b.constrained_area_cm2;
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  j["baseline_area_cm2"] = r.baseline_area_cm2;
  j["constrained_area_cm2"] = r.constrained_area_cm2;
  j["area_increase"] = r.area_increase;
  j["baseline"] = to_json(r.baseline);
  j["constrained"] = to_json(r.constrained);
  j["pfas_layer_ratio"] = r.pfas_layer_ratio;
  j["chip_pfas_ratio"] = optional_number(r.chip_pfas_ratio);
  return j;
}

Json trend_json(const TrendSeries& raw, const TrendSeries& normalized) {
  Json j;
  j["reference"] = normalized.reference.value_or("");
  auto points = Json::array();
  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    points.push_back({{"node", raw.points[i].node},
                      {"value", raw.points[i].value},
                      {"normalized", normalized.points[i].value}});
  }
  j["points"] = std::move(points);
  return j;
}

Json catalog_json(const ProcessCatalog& catalog) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "process_catalog";
  auto procs = Json::array();
  for (const auto& id : catalog.ids()) {
    const ProcessClass& p = catalog.lookup(id);
    Json jp;
    jp["id"] = p.id;
    jp["exposure"] = std::string(to_string(p.exposure));
    jp["masks"] = p.masks;
    Json steps;
    const auto v = step_values(p.steps);
    for (std::size_t i = 0; i < v.size(); ++i) steps[std::string(kStepNames[i])] = v[i];
    jp["steps"] = std::move(steps);
    procs.push_back(std::move(jp));
  }
  j["processes"] = std::move(procs);
  return j;
}

Json pfas_uses_json() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "pfas_uses";
  j["computational"] = false;
  auto rows = Json::array();
  for (const auto& u : pfas_uses()) {
    rows.push_back({{"part", u.part},
                    {"pfas_type", u.pfas_type},
                    {"use", u.use},
                    {"function", u.function},
                    {"alternatives", u.alternatives}});
  }
  j["uses"] = std::move(rows);
  return j;
}

std::string layers_csv(const StackSpec& stack, const StackMetrics& m) {
  std::string out = csv_row({"layer", "region", "pitch_nm", "metal", "via", "litho_steps",
                             "e_litho", "pfas_litho", "dry_etch", "litho", "metallization",
                             "metrology", "wet_etch", "deposition", "total_steps"});
  auto steps_fields = [](const StepCounts& s, std::vector<std::string>& row) {
    for (int v : step_values(s)) row.push_back(std::to_string(v));
    row.push_back(std::to_string(s.total()));
  };
  for (std::size_t i = 0; i < m.per_layer.size(); ++i) {
    const auto& l = m.per_layer[i];
    const LayerSpec* spec = i < stack.layers.size() ? &stack.layers[i] : nullptr;
    std::vector<std::string> row{
        l.name,
        std::string(to_string(l.region)),
        spec && spec->pitch_nm ? format_full(*spec->pitch_nm) : "",
        spec ? spec->metal_process.value_or("") : "",
        spec ? spec->via_process.value_or("") : "",
        std::to_string(l.litho_steps),
        format_full(l.litho_energy),
        std::to_string(l.pfas_layers)};
    steps_fields(l.total_steps, row);
    out += csv_row(row);
  }
  std::vector<std::string> total{"TOTAL", "", "", "", "", std::to_string(m.total_steps.litho),
                                 format_full(m.total_litho_energy),
                                 std::to_string(m.total_pfas_layers)};
  steps_fields(m.total_steps, total);
  return out + csv_row(total);
}

std::string comparison_csv(const ComparisonResult& r) {
  std::string out = csv_row({"metric", "a", "b", "ratio_a_over_b"});
  const auto& a = r.a.metrics;
  const auto& b = r.b.metrics;
  out += csv_row({"total_pfas_layers", std::to_string(a.total_pfas_layers),
                  std::to_string(b.total_pfas_layers), opt_full(r.ratio_pfas)});
  for (auto reg : kAllRegions) {
    out += csv_row({std::string(to_string(reg)) + "_pfas_layers", std::to_string(a.region(reg)),
                    std::to_string(b.region(reg)),
                    opt_full(r.region_ratio[static_cast<std::size_t>(reg)])});
  }
  out += csv_row({"total_steps", std::to_string(a.total_steps.total()),
                  std::to_string(b.total_steps.total()), opt_full(r.ratio_total_steps)});
  out += csv_row({"litho_steps", std::to_string(a.total_steps.litho),
                  std::to_string(b.total_steps.litho), opt_full(r.ratio_litho_steps)});
  out += csv_row({"litho_energy", format_full(a.total_litho_energy),
                  format_full(b.total_litho_energy), opt_full(r.ratio_litho_energy)});
  out += csv_row({"chip_pfas", format_full(r.a.chip.value), format_full(r.b.chip.value),
                  opt_full(safe_ratio(r.a.chip.value, r.b.chip.value))});
  if (r.a.carbon && r.b.carbon) {
    out += csv_row({"embodied_kg", format_full(r.a.carbon->embodied_kg),
                    format_full(r.b.carbon->embodied_kg),
                    opt_full(safe_ratio(r.a.carbon->embodied_kg, r.b.carbon->embodied_kg))});
  }
  out += csv_row({"percent_reduction", "", "", opt_full(r.percent_reduction)});
  return out;
}

std::string sweep_csv(const SweepResult& r) {
  std::string out = csv_row({"kind", "top_routing_layer", "total_pfas_layers", "routing_beol_pfas",
                             "FEOL", "MOL", "BEOL", "litho_steps", "total_steps", "litho_energy",
                             "chip_pfas", "embodied_kg", "carbon_low_kg", "carbon_high_kg"});
  auto row = [&](const char* kind, const SweepPoint& p) {
    const auto& m = p.eval.metrics;
    const auto& c = p.eval.carbon;
    out += csv_row({kind, p.top_routing_layer, std::to_string(m.total_pfas_layers),
                    std::to_string(p.routing_beol_pfas), std::to_string(m.region(Region::Feol)),
                    std::to_string(m.region(Region::Mol)), std::to_string(m.region(Region::Beol)),
                    std::to_string(m.total_steps.litho), std::to_string(m.total_steps.total()),
                    format_full(m.total_litho_energy), format_full(p.eval.chip.value),
                    c ? format_full(c->embodied_kg) : "",
                    c && c->band ? format_full(c->band->low_kg) : "",
                    c && c->band ? format_full(c->band->high_kg) : ""});
  };
  row("baseline", r.baseline);
  for (const auto& p : r.points) row("point", p);
  return out;
}

std::string soc_csv(const SocReport& r) {
  std::string out = csv_row({"block", "required_top_layer", "routed_top_layer", "overhead",
                             "baseline_area_cm2", "constrained_area_cm2"});
  for (const auto& b : r.blocks) {
    out += csv_row({b.name, b.required_top_layer, b.routed_top_layer, format_full(b.overhead),
                    format_full(b.baseline_area_cm2), format_full(b.constrained_area_cm2)});
  }
  out += csv_row({"TOTAL", "", r.chip_top_layer, "", format_full(r.baseline_area_cm2),
                  format_full(r.constrained_area_cm2)});
  return out;
}

std::string trend_csv(const TrendSeries& raw, const TrendSeries& normalized) {
  std::string out = csv_row({"node", "value", "normalized"});
  for (std::size_t i = 0; i < raw.points.size(); ++i)
    out += csv_row({raw.points[i].node, format_full(raw.points[i].value),
                    format_full(normalized.points[i].value)});
  return out;
}

std::string catalog_csv(const ProcessCatalog& catalog) {
  std::string out = csv_row({"id", "exposure", "dry_etch", "litho", "metallization", "metrology",
                             "wet_etch", "deposition", "masks"});
  for (const auto& id : catalog.ids()) {
    const ProcessClass& p = catalog.lookup(id);
    std::vector<std::string> row{p.id, std::string(to_string(p.exposure))};
    for (int v : step_values(p.steps)) row.push_back(std::to_string(v));
    row.push_back(std::to_string(p.masks));
    out += csv_row(row);
  }
  return out;
}

std::string pfas_uses_csv() {
  std::string out = csv_row({"part", "pfas_type", "use", "function", "alternatives"});
  for (const auto& u : pfas_uses())
    out += csv_row({std::string(u.part), std::string(u.pfas_type), std::string(u.use),
                    std::string(u.function), std::string(u.alternatives)});
  return out;
}

std::string analyze_table(const StackSpec& stack, const Evaluation& e) {
  const auto& m = e.metrics;
  TextTable t({"Region", "Layer", "M_pitch", "Metal", "Via", "# Litho steps", "E_litho",
               "# PFAS_litho"});
  std::optional<Region> last;
  for (std::size_t i = 0; i < m.per_layer.size(); ++i) {
    const auto& l = m.per_layer[i];
    const LayerSpec& s = stack.layers[i];
    if (last && *last != l.region) t.rule();
    last = l.region;
    t.add({std::string(to_string(l.region)), l.name, s.pitch_nm ? format_human(*s.pitch_nm) : "-",
           s.metal_process.value_or("-"), s.via_process.value_or("-"),
           std::to_string(l.litho_steps), format_human(l.litho_energy),
           std::to_string(l.pfas_layers)});
  }
  t.rule();
  t.add({"Total", "", "", "", "", std::to_string(m.total_steps.litho),
         format_human(m.total_litho_energy), std::to_string(m.total_pfas_layers)});

  std::ostringstream os;
  os << "Stack: " << stack.technology_node << "\n\n" << t.render() << "\n";
  os << "PFAS-containing layers: FEOL " << m.region(Region::Feol) << ", MOL "
     << m.region(Region::Mol) << ", BEOL " << m.region(Region::Beol) << ", total "
     << m.total_pfas_layers << "\n";
  os << "Masks by exposure: EUV " << m.euv_masks() << ", DUV " << m.duv_masks() << " (immersion "
     << m.exposure(ExposureClass::DuvImmersion) << ", dry " << m.exposure(ExposureClass::DuvDry)
     << ")\n";
  os << "Fabrication steps: " << m.total_steps.total() << " (dry etch " << m.total_steps.dry_etch
     << ", litho " << m.total_steps.litho << ", metallization " << m.total_steps.metallization
     << ", metrology " << m.total_steps.metrology << ", wet etch " << m.total_steps.wet_etch
     << ", deposition " << m.total_steps.deposition << ")\n";
  os << chip_line(e.chip);
  if (e.carbon) os << carbon_lines(*e.carbon);
  return os.str();
}

std::string comparison_table(const ComparisonResult& r) {
  const auto& a = r.a.metrics;
  const auto& b = r.b.metrics;
  TextTable t({"Metric", "A: " + a.technology_node, "B: " + b.technology_node, "A / B"});
  t.add({"# PFAS_litho", std::to_string(a.total_pfas_layers), std::to_string(b.total_pfas_layers),
         opt_human(r.ratio_pfas)});
  for (auto reg : kAllRegions) {
    t.add({"  " + std::string(to_string(reg)), std::to_string(a.region(reg)),
           std::to_string(b.region(reg)), opt_human(r.region_ratio[static_cast<std::size_t>(reg)])});
  }
  t.add({"Fabrication steps", std::to_string(a.total_steps.total()),
         std::to_string(b.total_steps.total()), opt_human(r.ratio_total_steps)});
  t.add({"# Litho steps", std::to_string(a.total_steps.litho), std::to_string(b.total_steps.litho),
         opt_human(r.ratio_litho_steps)});
  t.add({"E_litho", format_human(a.total_litho_energy), format_human(b.total_litho_energy),
         opt_human(r.ratio_litho_energy)});
  t.add({"Chip PFAS (proxy)", format_human(r.a.chip.value), format_human(r.b.chip.value),
         opt_human(safe_ratio(r.a.chip.value, r.b.chip.value))});
  if (r.a.carbon && r.b.carbon)
    t.add({"Embodied kg CO2e", format_human(r.a.carbon->embodied_kg),
           format_human(r.b.carbon->embodied_kg),
           opt_human(safe_ratio(r.a.carbon->embodied_kg, r.b.carbon->embodied_kg))});
  std::ostringstream os;
  os << t.render() << "\n";
  if (r.percent_reduction)
    os << "B uses " << format_human(*r.percent_reduction * 100.0)
       << "% fewer PFAS-containing layers than A\n";
  return os.str();
}

std::string sweep_table(const SweepResult& r) {
  TextTable t({"Top layer", "# PFAS_litho", "Routing BEOL", "FEOL", "MOL", "BEOL", "# Litho steps",
               "E_litho", "Chip PFAS", "Embodied kg"});
  auto add = [&](const std::string& label, const SweepPoint& p) {
    const auto& m = p.eval.metrics;
    t.add({label, std::to_string(m.total_pfas_layers), std::to_string(p.routing_beol_pfas),
           std::to_string(m.region(Region::Feol)), std::to_string(m.region(Region::Mol)),
           std::to_string(m.region(Region::Beol)), std::to_string(m.total_steps.litho),
           format_human(m.total_litho_energy), format_human(p.eval.chip.value),
           p.eval.carbon ? format_human(p.eval.carbon->embodied_kg) : "-"});
  };
  add(r.baseline.top_routing_layer + " (baseline)", r.baseline);
  t.rule();
  for (const auto& p : r.points) add(p.top_routing_layer, p);
  std::ostringstream os;
  os << "Power-grid retention: " << (r.retain_power_grid ? "on" : "off") << "\n\n"
     << t.render();
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    os << "Routing BEOL " << r.points[i - 1].top_routing_layer << " / "
       << r.points[i].top_routing_layer << ": "
       << opt_human(safe_ratio(r.points[i - 1].routing_beol_pfas, r.points[i].routing_beol_pfas))
       << "x\n";
  }
  for (const auto& p : r.points) {
    os << "Total " << r.baseline.top_routing_layer << " (baseline) / " << p.top_routing_layer << ": "
       << opt_human(safe_ratio(r.baseline.eval.metrics.total_pfas_layers,
                               p.eval.metrics.total_pfas_layers))
       << "x\n";
  }
  return os.str();
}

std::string soc_table(const SocReport& r) {
  TextTable t({"Block", "Needs", "Routed to", "Overhead", "Area cm^2", "Constrained cm^2"});
  for (const auto& b : r.blocks)
    t.add({b.name, b.required_top_layer, b.routed_top_layer, format_human(b.overhead),
           format_human(b.baseline_area_cm2), format_human(b.constrained_area_cm2)});
  t.rule();
  t.add({"Total", "", r.chip_top_layer, "", format_human(r.baseline_area_cm2),
         format_human(r.constrained_area_cm2)});
  std::ostringstream os;
  os << "Target top layer: " << r.target_top << "  (power-grid retention "
     << (r.retain_power_grid ? "on" : "off") << ")\n\n"
     << t.render() << "\n";
  os << "Area increase: " << format_human(r.area_increase * 100.0) << "%\n";
  os << "# PFAS_litho: " << r.baseline.metrics.total_pfas_layers << " -> "
     << r.constrained.metrics.total_pfas_layers << "  (" << format_human(r.pfas_layer_ratio)
     << "x)\n";
  os << "Chip PFAS (proxy): " << format_human(r.baseline.chip.value) << " -> "
     << format_human(r.constrained.chip.value) << " layer*cm^2  (" << opt_human(r.chip_pfas_ratio)
     << "x)\n";
  if (r.baseline.carbon && r.constrained.carbon)
    os << "Embodied carbon: " << format_human(r.baseline.carbon->embodied_kg) << " -> "
       << format_human(r.constrained.carbon->embodied_kg) << " kg CO2e\n";
  return os.str();
}

std::string trend_table(const TrendSeries& raw, const TrendSeries& normalized) {
  TextTable t({"Node", "Value", "Normalized"});
  for (std::size_t i = 0; i < raw.points.size(); ++i)
    t.add({raw.points[i].node, format_human(raw.points[i].value),
           format_human(normalized.points[i].value)});
  return "Reference: " + normalized.reference.value_or("") + "\n\n" + t.render();
}

std::string catalog_table(const ProcessCatalog& catalog) {
  TextTable t({"Process", "Exposure", "DryEtch", "Litho.", "Metal.", "Metr.", "WetEtch", "Dep.",
               "# Masks"});
  for (const auto& id : catalog.ids()) {
    const ProcessClass& p = catalog.lookup(id);
    std::vector<std::string> row{p.id, std::string(to_string(p.exposure))};
    for (int v : step_values(p.steps)) row.push_back(std::to_string(v));
    row.push_back(std::to_string(p.masks));
    t.add(std::move(row));
  }
  return t.render();
}

std::string pfas_uses_table() {
  TextTable t({"Part", "PFAS type", "Use", "Function", "Alternatives"});
  for (const auto& u : pfas_uses())
    t.add({std::string(u.part), std::string(u.pfas_type), std::string(u.use),
           std::string(u.function), std::string(u.alternatives)});
  return "Reference data only; not used in any computation.\n\n" + t.render();
}

}  // namespace pfas
