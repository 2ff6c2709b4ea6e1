#include "pfas/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pfas {

using nlohmann::json;

namespace {

std::string issues_message(const std::vector<ConfigIssue>& issues) {
  std::ostringstream os;
  os << "configuration rejected (" << issues.size() << " issue" << (issues.size() == 1 ? "" : "s")
     << ")";
  for (const auto& i : issues) os << "\n  " << i.location << ": [" << i.rule << "] " << i.message;
  return os.str();
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ConfigError({{line_column(text, byte), "syntax", msg}});
  }
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

// Walks a parsed document, collecting every issue instead of stopping at the
// first one.
class Reader {
 public:
  explicit Reader(ConfigMode mode) : mode_(mode) {}

  std::vector<ConfigIssue> errors;
  std::vector<ConfigIssue> warnings;

  void error(std::string loc, std::string rule, std::string msg) {
    errors.push_back({loc.empty() ? "/" : std::move(loc), std::move(rule), std::move(msg)});
  }

  bool object(const json& j, const std::string& loc) {
    if (j.is_object()) return true;
    error(loc, "schema", "expected an object");
    return false;
  }

  void allowed_keys(const json& obj, const std::string& loc,
                    std::initializer_list<std::string_view> keys) {
    for (const auto& [k, _] : obj.items()) {
      if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
      ConfigIssue issue{loc + "/" + k, "unknown-key", "unknown key '" + k + "'"};
      if (mode_ == ConfigMode::Strict) errors.push_back(std::move(issue));
      else warnings.push_back(std::move(issue));
    }
  }

  const json* member(const json& obj, std::string_view key, const std::string& loc, bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || (it->is_null() && !required)) {
      if (required) error(loc + "/" + std::string(key), "schema", "missing required key");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const json& obj, std::string_view key, const std::string& loc,
                               bool required) {
    const json* v = member(obj, key, loc, required);
    if (!v) return std::nullopt;
    if (!v->is_number()) {
      error(loc + "/" + std::string(key), "schema", "expected a number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<int> integer(const json& obj, std::string_view key, const std::string& loc,
                             bool required) {
    const json* v = member(obj, key, loc, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      error(loc + "/" + std::string(key), "schema", "expected an integer");
      return std::nullopt;
    }
    return v->get<int>();
  }

  std::optional<std::string> string(const json& obj, std::string_view key, const std::string& loc,
                                    bool required) {
    const json* v = member(obj, key, loc, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      error(loc + "/" + std::string(key), "schema", "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const json& obj, std::string_view key, const std::string& loc) {
    const json* v = member(obj, key, loc, false);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      error(loc + "/" + std::string(key), "schema", "expected true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  void schema_version(const json& obj, const std::string& loc, bool required) {
    if (auto v = integer(obj, "schema_version", loc, required); v && *v != kSchemaVersion)
      error(loc + "/schema_version", "schema",
            "unsupported schema_version " + std::to_string(*v) + " (expected " +
                std::to_string(kSchemaVersion) + ")");
  }

  void throw_if_errors() {
    if (!errors.empty()) throw ConfigError(errors);
  }

 private:
  ConfigMode mode_;
};

void read_yield(Reader& r, double y, const std::string& loc) {
  if (!(y > 0.0 && y <= 1.0))
    r.error(loc, "range",
            "fab yield " + json(y).dump() + " is outside (0, 1]; zero is excluded");
}

void read_processes(Reader& r, const json& arr, const std::string& loc, ProcessCatalog& catalog) {
  if (!arr.is_array()) {
    r.error(loc, "schema", "expected an array of process records");
    return;
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string pl = loc + "/" + std::to_string(i);
    const json& p = arr[i];
    if (!r.object(p, pl)) continue;
    r.allowed_keys(p, pl, {"id", "exposure", "masks", "steps"});
    ProcessClass proc;
    auto id = r.string(p, "id", pl, true);
    auto exposure = r.string(p, "exposure", pl, true);
    auto masks = r.integer(p, "masks", pl, true);
    const json* steps = r.member(p, "steps", pl, true);
    bool ok = id && exposure && masks && steps;
    if (exposure && !parse_exposure(*exposure)) {
      r.error(pl + "/exposure", "schema",
              "exposure must be DUV_DRY, DUV_IMMERSION or EUV (got '" + *exposure + "')");
      ok = false;
    }
    if (steps && r.object(*steps, pl + "/steps")) {
      const std::string sl = pl + "/steps";
      r.allowed_keys(*steps, sl,
                     {"dry_etch", "litho", "metallization", "metrology", "wet_etch", "deposition"});
      int* fields[] = {&proc.steps.dry_etch,  &proc.steps.litho,    &proc.steps.metallization,
                       &proc.steps.metrology, &proc.steps.wet_etch, &proc.steps.deposition};
      const char* names[] = {"dry_etch", "litho", "metallization",
                             "metrology", "wet_etch", "deposition"};
      for (int k = 0; k < 6; ++k) {
        if (auto v = r.integer(*steps, names[k], sl, true)) *fields[k] = *v;
        else ok = false;
      }
    } else {
      ok = false;
    }
    if (!ok) continue;
    proc.id = *id;
    proc.masks = *masks;
    proc.exposure = *parse_exposure(*exposure);
    try {
      catalog.register_process(std::move(proc));
    } catch (const ProcessCollisionError& e) {
      r.error(pl + "/id", "schema", e.what());
    } catch (const InvalidFieldError& e) {
      r.error(pl, "range", e.what());
    }
  }
}

std::optional<StackSpec> read_stack_object(Reader& r, const json& j, const std::string& loc,
                                           ProcessCatalog& catalog, bool document) {
  if (!r.object(j, loc)) return std::nullopt;
  r.allowed_keys(j, loc, {"schema_version", "kind", "technology_node", "processes", "layers"});
  r.schema_version(j, loc, document);
  if (auto kind = r.string(j, "kind", loc, false); kind && *kind != "stack")
    r.error(loc + "/kind", "schema", "expected kind \"stack\"");
  if (const json* procs = r.member(j, "processes", loc, false))
    read_processes(r, *procs, loc + "/processes", catalog);

  StackSpec stack;
  if (auto node = r.string(j, "technology_node", loc, true)) stack.technology_node = *node;
  const json* layers = r.member(j, "layers", loc, true);
  if (!layers) return std::nullopt;
  if (!layers->is_array()) {
    r.error(loc + "/layers", "schema", "expected an array of layers");
    return std::nullopt;
  }
  const std::size_t errors_before = r.errors.size();
  for (std::size_t i = 0; i < layers->size(); ++i) {
    const std::string ll = loc + "/layers/" + std::to_string(i);
    const json& l = (*layers)[i];
    if (!r.object(l, ll)) continue;
    r.allowed_keys(l, ll, {"name", "region", "pitch_nm", "metal", "via", "tags"});
    LayerSpec layer;
    if (auto name = r.string(l, "name", ll, true)) layer.name = *name;
    if (auto region = r.string(l, "region", ll, true)) {
      if (auto reg = parse_region(*region)) layer.region = *reg;
      else r.error(ll + "/region", "schema", "region must be FEOL, MOL or BEOL");
    }
    layer.pitch_nm = r.number(l, "pitch_nm", ll, false);
    layer.metal_process = r.string(l, "metal", ll, false);
    layer.via_process = r.string(l, "via", ll, false);
    if (const json* tags = r.member(l, "tags", ll, false)) {
      if (!tags->is_array()) {
        r.error(ll + "/tags", "schema", "expected an array of tags");
      } else {
        for (std::size_t t = 0; t < tags->size(); ++t) {
          const json& tag = (*tags)[t];
          auto parsed = tag.is_string() ? parse_tag(tag.get<std::string>()) : std::nullopt;
          if (parsed) layer.tags.push_back(*parsed);
          else r.error(ll + "/tags/" + std::to_string(t), "schema",
                       "tag must be \"routing\" or \"power_grid\"");
        }
      }
    }
    stack.layers.push_back(std::move(layer));
  }
  if (r.errors.size() != errors_before) return std::nullopt;

  for (const auto& v : find_violations(stack, catalog)) {
    std::string where = loc + "/layers";
    for (std::size_t i = 0; i < stack.layers.size(); ++i) {
      if (stack.layers[i].name == v.layer) {
        where += "/" + std::to_string(i);
        break;
      }
    }
    r.error(where, v.rule, "layer '" + v.layer + "': " + v.message);
  }
  return stack;
}

std::optional<StackSource> read_stack_source(Reader& r, const json& j, const std::string& loc,
                                             ProcessCatalog& catalog,
                                             const std::filesystem::path& base_dir,
                                             ConfigMode mode) {
  auto preset = [&](const std::string& name, const std::string& where) -> std::optional<StackSource> {
    if (auto s = preset_by_name(name)) return StackSource{name, *s};
    r.error(where, "schema", "unknown preset '" + name + "' (known: " + join(preset_names()) + ")");
    return std::nullopt;
  };
  if (j.is_string()) return preset(j.get<std::string>(), loc);
  if (!r.object(j, loc)) return std::nullopt;

  const bool has_preset = j.contains("preset");
  const bool has_path = j.contains("path");
  const bool has_inline = j.contains("layers");
  if (int(has_preset) + int(has_path) + int(has_inline) != 1) {
    r.error(loc, "schema", "exactly one of \"preset\", \"path\" or inline \"layers\" is required");
    return std::nullopt;
  }
  if (has_preset) {
    r.allowed_keys(j, loc, {"preset"});
    if (auto name = r.string(j, "preset", loc, true)) return preset(*name, loc + "/preset");
    return std::nullopt;
  }
  if (has_path) {
    r.allowed_keys(j, loc, {"path"});
    auto rel = r.string(j, "path", loc, true);
    if (!rel) return std::nullopt;
    std::filesystem::path p = *rel;
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    try {
      return StackSource{*rel, parse_stack_document(read_text_file(p), catalog, mode)};
    } catch (const ConfigError& e) {
      for (const auto& i : e.issues()) r.error(*rel + ":" + i.location, i.rule, i.message);
    }
    return std::nullopt;
  }
  if (auto s = read_stack_object(r, j, loc, catalog, false)) return StackSource{"inline", *s};
  return std::nullopt;
}

std::optional<CarbonParams> read_carbon(Reader& r, const json& j, const std::string& loc) {
  if (!r.object(j, loc)) return std::nullopt;
  r.allowed_keys(j, loc,
                 {"carbon_intensity", "energy_per_unit_litho", "energy_per_area_base",
                  "gas_per_area", "material_per_area"});
  CarbonParams p;
  struct Field {
    const char* name;
    double* target;
  } fields[] = {{"carbon_intensity", &p.carbon_intensity},
                {"energy_per_unit_litho", &p.energy_per_unit_litho},
                {"energy_per_area_base", &p.energy_per_area_base},
                {"gas_per_area", &p.gas_per_area},
                {"material_per_area", &p.material_per_area}};
  bool ok = true;
  for (auto& f : fields) {
    auto v = r.number(j, f.name, loc, true);
    if (!v) {
      ok = false;
      continue;
    }
    if (*v < 0.0) {
      r.error(loc + "/" + f.name, "range", std::string(f.name) + " must be >= 0");
      ok = false;
    }
    *f.target = *v;
  }
  return ok ? std::optional<CarbonParams>(p) : std::nullopt;
}

std::optional<CarbonIntensityRange> read_ci_band(Reader& r, const json& j, const std::string& loc) {
  if (!r.object(j, loc)) return std::nullopt;
  r.allowed_keys(j, loc, {"low", "high"});
  auto lo = r.number(j, "low", loc, true);
  auto hi = r.number(j, "high", loc, true);
  if (!lo || !hi) return std::nullopt;
  if (*lo < 0.0) r.error(loc + "/low", "range", "carbon intensity must be >= 0");
  if (*lo > *hi) {
    r.error(loc, "range", "ci_band low exceeds high");
    return std::nullopt;
  }
  return CarbonIntensityRange{*lo, *hi};
}

std::optional<std::vector<std::string>> read_string_list(Reader& r, const json& obj,
                                                         std::string_view key,
                                                         const std::string& loc, bool required) {
  const json* v = r.member(obj, key, loc, required);
  if (!v) return std::nullopt;
  const std::string kl = loc + "/" + std::string(key);
  if (!v->is_array()) {
    r.error(kl, "schema", "expected an array of strings");
    return std::nullopt;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v->size(); ++i) {
    if ((*v)[i].is_string()) out.push_back((*v)[i].get<std::string>());
    else r.error(kl + "/" + std::to_string(i), "schema", "expected a string");
  }
  return out;
}

void read_soc(Reader& r, const json& j, const std::string& loc, ConfigDocument& doc) {
  if (!r.object(j, loc)) return;
  r.allowed_keys(j, loc, {"target", "retain_power_grid", "blocks"});
  SocSection soc;
  if (auto t = r.string(j, "target", loc, true)) soc.target = *t;
  if (auto keep = r.boolean(j, "retain_power_grid", loc)) soc.retain_power_grid = *keep;
  const json* blocks = r.member(j, "blocks", loc, true);
  if (blocks && !blocks->is_array()) r.error(loc + "/blocks", "schema", "expected an array");
  if (blocks && blocks->is_array()) {
    for (std::size_t i = 0; i < blocks->size(); ++i) {
      const std::string bl = loc + "/blocks/" + std::to_string(i);
      const json& b = (*blocks)[i];
      if (!r.object(b, bl)) continue;
      r.allowed_keys(b, bl, {"name", "area_cm2", "required_top_layer", "area_overhead"});
      SocBlock block;
      if (auto n = r.string(b, "name", bl, true)) block.name = *n;
      if (auto a = r.number(b, "area_cm2", bl, true)) {
        if (!(*a > 0.0)) r.error(bl + "/area_cm2", "range", "block area must be > 0 cm^2");
        block.baseline_area_cm2 = *a;
      }
      if (auto t = r.string(b, "required_top_layer", bl, true)) block.required_top_layer = *t;
      if (const json* ov = r.member(b, "area_overhead", bl, false)) {
        if (r.object(*ov, bl + "/area_overhead")) {
          for (const auto& [layer, f] : ov->items()) {
            const std::string fl = bl + "/area_overhead/" + layer;
            if (!f.is_number()) r.error(fl, "schema", "expected a number");
            else if (!(f.get<double>() >= 1.0)) r.error(fl, "range", "overhead factor must be >= 1");
            else block.area_overhead[layer] = f.get<double>();
          }
        }
      }
      soc.blocks.push_back(std::move(block));
    }
  }
  doc.soc = std::move(soc);
}

void read_trend(Reader& r, const json& j, const std::string& loc, ConfigDocument& doc) {
  if (!r.object(j, loc)) return;
  r.allowed_keys(j, loc, {"reference", "points"});
  TrendSection t;
  if (auto ref = r.string(j, "reference", loc, true)) t.reference = *ref;
  const json* pts = r.member(j, "points", loc, true);
  if (pts && !pts->is_array()) r.error(loc + "/points", "schema", "expected an array");
  if (pts && pts->is_array()) {
    for (std::size_t i = 0; i < pts->size(); ++i) {
      const std::string pl = loc + "/points/" + std::to_string(i);
      if (!r.object((*pts)[i], pl)) continue;
      r.allowed_keys((*pts)[i], pl, {"node", "value"});
      auto node = r.string((*pts)[i], "node", pl, true);
      auto value = r.number((*pts)[i], "value", pl, true);
      if (node && value) t.series.points.push_back({*node, *value});
    }
  }
  doc.trend = std::move(t);
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : PfasError(issues_message(issues)), issues_(std::move(issues)) {}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({{path.string(), "io", "cannot open file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigDocument parse_config(std::string_view text, ConfigMode mode,
                            const std::filesystem::path& base_dir) {
  const json root = parse_json(text);
  Reader r(mode);
  ConfigDocument doc;
  if (!r.object(root, "")) r.throw_if_errors();

  r.allowed_keys(root, "", {"schema_version", "stack", "processes", "fab", "design", "compare",
                            "sweep", "soc", "trend"});
  r.schema_version(root, "", false);

  if (const json* procs = r.member(root, "processes", "", false))
    read_processes(r, *procs, "/processes", doc.catalog);
  if (const json* stack = r.member(root, "stack", "", false))
    doc.stack = read_stack_source(r, *stack, "/stack", doc.catalog, base_dir, mode);

  if (const json* fab = r.member(root, "fab", "", false); fab && r.object(*fab, "/fab")) {
    r.allowed_keys(*fab, "/fab", {"yield", "energy_weights", "carbon", "ci_band"});
    if (auto y = r.number(*fab, "yield", "/fab", false)) {
      read_yield(r, *y, "/fab/yield");
      doc.yield = y;
    }
    if (const json* w = r.member(*fab, "energy_weights", "/fab", false);
        w && r.object(*w, "/fab/energy_weights")) {
      const std::string wl = "/fab/energy_weights";
      r.allowed_keys(*w, wl, {"per_euv_mask", "per_duv_mask"});
      if (auto e = r.number(*w, "per_euv_mask", wl, false)) {
        if (!(*e > 0.0)) r.error(wl + "/per_euv_mask", "range", "energy weight must be > 0");
        doc.weights.per_euv_mask = *e;
      }
      if (auto d = r.number(*w, "per_duv_mask", wl, false)) {
        if (!(*d > 0.0)) r.error(wl + "/per_duv_mask", "range", "energy weight must be > 0");
        doc.weights.per_duv_mask = *d;
      }
    }
    if (const json* c = r.member(*fab, "carbon", "/fab", false))
      doc.carbon = read_carbon(r, *c, "/fab/carbon");
    if (const json* b = r.member(*fab, "ci_band", "/fab", false))
      doc.ci_range = read_ci_band(r, *b, "/fab/ci_band");
  }

  if (const json* d = r.member(root, "design", "", false); d && r.object(*d, "/design")) {
    r.allowed_keys(*d, "/design", {"area_cm2", "yield"});
    if (auto a = r.number(*d, "area_cm2", "/design", false)) {
      if (!(*a > 0.0)) r.error("/design/area_cm2", "range", "die area must be > 0 cm^2");
      doc.area_cm2 = a;
    }
    if (auto y = r.number(*d, "yield", "/design", false)) {
      read_yield(r, *y, "/design/yield");
      if (doc.yield && *doc.yield != *y)
        r.error("/design/yield", "schema", "yield given in both /fab and /design with different values");
      doc.yield = y;
    }
  }

  if (const json* c = r.member(root, "compare", "", false); c && r.object(*c, "/compare")) {
    r.allowed_keys(*c, "/compare", {"a", "b"});
    std::optional<StackSource> a;
    if (const json* ja = r.member(*c, "a", "/compare", false))
      a = read_stack_source(r, *ja, "/compare/a", doc.catalog, base_dir, mode);
    else if (doc.stack)
      a = doc.stack;
    else
      r.error("/compare/a", "schema", "compare needs \"a\" or a top-level stack");
    std::optional<StackSource> b;
    if (const json* jb = r.member(*c, "b", "/compare", true))
      b = read_stack_source(r, *jb, "/compare/b", doc.catalog, base_dir, mode);
    if (a && b) doc.compare = CompareSection{*a, *b};
  }

  if (const json* s = r.member(root, "sweep", "", false); s && r.object(*s, "/sweep")) {
    r.allowed_keys(*s, "/sweep", {"targets", "retain_power_grid"});
    SweepSection sweep;
    if (auto t = read_string_list(r, *s, "targets", "/sweep", true)) sweep.targets = *t;
    if (auto keep = r.boolean(*s, "retain_power_grid", "/sweep")) sweep.retain_power_grid = *keep;
    doc.sweep = std::move(sweep);
  }
  if (const json* s = r.member(root, "soc", "", false)) read_soc(r, *s, "/soc", doc);
  if (const json* t = r.member(root, "trend", "", false)) read_trend(r, *t, "/trend", doc);

  r.throw_if_errors();
  doc.warnings = std::move(r.warnings);
  return doc;
}

StackSpec parse_stack_document(std::string_view text, ProcessCatalog& catalog, ConfigMode mode) {
  const json root = parse_json(text);
  Reader r(mode);
  ProcessCatalog scratch = catalog;
  auto stack = read_stack_object(r, root, "", scratch, true);
  r.throw_if_errors();
  catalog = std::move(scratch);
  return *stack;
}

CarbonProfile parse_carbon_profile(std::string_view text, ConfigMode mode) {
  const json root = parse_json(text);
  Reader r(mode);
  CarbonProfile profile;
  if (r.object(root, "")) {
    r.allowed_keys(root, "", {"schema_version", "kind", "description", "carbon", "ci_band"});
    r.schema_version(root, "", true);
    if (const json* c = r.member(root, "carbon", "", true)) {
      if (auto p = read_carbon(r, *c, "/carbon")) profile.params = *p;
    }
    if (const json* b = r.member(root, "ci_band", "", false))
      profile.ci_range = read_ci_band(r, *b, "/ci_band");
  }
  r.throw_if_errors();
  return profile;
}

std::string stack_document(const StackSpec& stack, const ProcessCatalog& catalog) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "stack";
  doc["technology_node"] = stack.technology_node;

  std::set<std::string> used;
  for (const auto& l : stack.layers)
    for (const auto* id : {&l.metal_process, &l.via_process})
      if (*id && catalog.extensions().count(**id)) used.insert(**id);
  if (!used.empty()) {
    auto procs = nlohmann::ordered_json::array();
    for (const auto& id : used) {
      const ProcessClass& p = catalog.lookup(id);
      nlohmann::ordered_json jp;
      jp["id"] = p.id;
      jp["exposure"] = std::string(to_string(p.exposure));
      jp["masks"] = p.masks;
      jp["steps"] = {{"dry_etch", p.steps.dry_etch},         {"litho", p.steps.litho},
                     {"metallization", p.steps.metallization}, {"metrology", p.steps.metrology},
                     {"wet_etch", p.steps.wet_etch},         {"deposition", p.steps.deposition}};
      procs.push_back(std::move(jp));
    }
    doc["processes"] = std::move(procs);
  }

  auto layers = nlohmann::ordered_json::array();
  for (const auto& l : stack.layers) {
    nlohmann::ordered_json jl;
    jl["name"] = l.name;
    jl["region"] = std::string(to_string(l.region));
    if (l.pitch_nm) jl["pitch_nm"] = *l.pitch_nm;
    if (l.metal_process) jl["metal"] = *l.metal_process;
    if (l.via_process) jl["via"] = *l.via_process;
    auto tags = nlohmann::ordered_json::array();
    for (auto t : l.tags) tags.push_back(std::string(to_string(t)));
    jl["tags"] = std::move(tags);
    layers.push_back(std::move(jl));
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2) + "\n";
}

}  // namespace pfas
