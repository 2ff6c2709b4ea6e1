#include "pfas/cli.hpp"

#include <filesystem>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "pfas/config.hpp"
#include "pfas/report.hpp"

namespace pfas {

namespace {

// Bad flag combinations or missing inputs that CLI11 cannot express.
class UsageError : public PfasError {
 public:
  explicit UsageError(std::string msg) : PfasError(std::move(msg)) {}
};

struct Options {
  std::string config;
  std::string stack;
  std::string against;
  std::optional<double> area;
  std::optional<double> yield;
  std::string targets;
  std::string target;
  bool retain_power_grid = false;
  bool beol_only = false;
  std::string format = "table";
  std::string carbon_profile;
  std::string ref;
  std::string points;
  std::string kind = "processes";
  bool strict = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

class Session {
 public:
  Session(const Options& opt, std::ostream& err) : opt_(opt), err_(err) {
    if (!opt_.config.empty()) {
      const std::filesystem::path path = opt_.config;
      doc_ = parse_config(read_text_file(path), mode(), path.parent_path());
      for (const auto& w : doc_.warnings)
        err_ << "warning: " << opt_.config << ":" << w.location << ": " << w.message << "\n";
    }
  }

  ConfigMode mode() const { return opt_.strict ? ConfigMode::Strict : ConfigMode::Lenient; }
  Format format() const { return *parse_format(opt_.format); }
  ConfigDocument& doc() { return doc_; }

  StackSource resolve_stack(const std::string& flag_value, const std::optional<StackSource>& fallback,
                            const char* what) {
    if (!flag_value.empty()) {
      if (auto p = preset_by_name(flag_value)) return {flag_value, *p};
      if (!std::filesystem::exists(flag_value))
        throw UsageError(std::string(what) + " '" + flag_value +
                         "' is neither a preset (asap7, n7-euv, n7-duv) nor an existing file");
      return {flag_value, parse_stack_document(read_text_file(flag_value), doc_.catalog, mode())};
    }
    if (fallback) return *fallback;
    throw UsageError(std::string("no ") + what + " given; use --stack <preset|path> or a config");
  }

  StackSource main_stack() { return resolve_stack(opt_.stack, doc_.stack, "stack"); }

  ScenarioContext context() {
    ScenarioContext ctx;
    ctx.catalog = doc_.catalog;
    ctx.weights = doc_.weights;
    ctx.design.area_cm2 = opt_.area.value_or(doc_.area_cm2.value_or(1.0));
    ctx.design.yield = opt_.yield.value_or(doc_.yield.value_or(1.0));
    validate(ctx.design);
    ctx.carbon = doc_.carbon;
    ctx.ci_range = doc_.ci_range;
    if (!opt_.carbon_profile.empty()) {
      auto profile = parse_carbon_profile(read_text_file(opt_.carbon_profile), mode());
      ctx.carbon = profile.params;
      if (profile.ci_range) ctx.ci_range = profile.ci_range;
    }
    return ctx;
  }

  bool retention(bool default_on, std::optional<bool> from_config) const {
    if (opt_.retain_power_grid) return true;
    if (opt_.beol_only) return false;
    return from_config.value_or(default_on);
  }

 private:
  const Options& opt_;
  std::ostream& err_;
  ConfigDocument doc_;
};

std::string cmd_analyze(Session& s) {
  auto src = s.main_stack();
  validate_stack(src.stack, s.doc().catalog);
  auto ctx = s.context();
  auto eval = evaluate(src.stack, ctx);
  switch (s.format()) {
    case Format::Json: {
      Json j = report_header("analyze", inputs_json(src.label, src.stack, ctx));
      Json body = to_json(eval);
      for (auto& [k, v] : body.items()) j[k] = v;
      return render_json(j);
    }
    case Format::Csv: return layers_csv(src.stack, eval.metrics);
    case Format::Table: return analyze_table(src.stack, eval);
  }
  return {};
}

std::string cmd_compare(Session& s, const Options& opt) {
  std::optional<StackSource> cfg_a;
  std::optional<StackSource> cfg_b;
  if (s.doc().compare) {
    cfg_a = s.doc().compare->a;
    cfg_b = s.doc().compare->b;
  } else {
    cfg_a = s.doc().stack;
  }
  auto a = s.resolve_stack(opt.stack, cfg_a, "stack");
  auto b = s.resolve_stack(opt.against, cfg_b, "comparison stack (--against)");
  auto ctx = s.context();
  auto r = compare_stacks(a.stack, b.stack, ctx);
  switch (s.format()) {
    case Format::Json: {
      Json inputs = inputs_json(a.label, a.stack, ctx);
      inputs["against"] = b.label;
      inputs["against_technology_node"] = b.stack.technology_node;
      Json j = report_header("compare", std::move(inputs));
      j["comparison"] = to_json(r);
      return render_json(j);
    }
    case Format::Csv: return comparison_csv(r);
    case Format::Table: return comparison_table(r);
  }
  return {};
}

std::string cmd_sweep(Session& s, const Options& opt) {
  auto src = s.main_stack();
  std::vector<std::string> targets;
  if (!opt.targets.empty()) targets = split_list(opt.targets);
  else if (s.doc().sweep) targets = s.doc().sweep->targets;
  if (targets.empty()) throw UsageError("sweep needs --targets (e.g. M7,M5,M3) or a sweep section");
  const bool keep = s.retention(
      false, s.doc().sweep ? std::optional<bool>(s.doc().sweep->retain_power_grid) : std::nullopt);
  auto ctx = s.context();
  auto r = sweep_beol(src.stack, targets, keep, ctx);
  switch (s.format()) {
    case Format::Json: {
      Json inputs = inputs_json(src.label, src.stack, ctx);
      inputs["targets"] = targets;
      inputs["retain_power_grid"] = keep;
      Json j = report_header("sweep", std::move(inputs));
      j["sweep"] = to_json(r);
      return render_json(j);
    }
    case Format::Csv: return sweep_csv(r);
    case Format::Table: return sweep_table(r);
  }
  return {};
}

std::string cmd_soc(Session& s, const Options& opt) {
  if (!s.doc().soc) throw UsageError("soc needs a config (--config) with a soc section listing blocks");
  const SocSection& soc = *s.doc().soc;
  auto src = s.main_stack();
  const std::string target = opt.target.empty() ? soc.target : opt.target;
  const bool keep = s.retention(true, soc.retain_power_grid);
  auto ctx = s.context();
  auto r = compose_soc(soc.blocks, src.stack, target, keep, ctx);
  switch (s.format()) {
    case Format::Json: {
      Json inputs = inputs_json(src.label, src.stack, ctx);
      inputs["target_top"] = target;
      inputs["retain_power_grid"] = keep;
      Json j = report_header("soc", std::move(inputs));
      j["soc"] = to_json(r);
      return render_json(j);
    }
    case Format::Csv: return soc_csv(r);
    case Format::Table: return soc_table(r);
  }
  return {};
}

std::string cmd_trend(Session& s, const Options& opt) {
  TrendSeries raw;
  std::string ref = opt.ref;
  if (!opt.points.empty()) {
    for (const auto& item : split_list(opt.points)) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("--points entries must look like <node>=<value>, got '" + item + "'");
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--points value in '" + item + "' is not a number");
      }
      raw.points.push_back({item.substr(0, eq), v});
    }
  } else if (s.doc().trend) {
    raw = s.doc().trend->series;
  } else {
    throw UsageError("trend needs --points <node>=<value>,... or a trend section in --config");
  }
  if (ref.empty() && s.doc().trend) ref = s.doc().trend->reference;
  if (ref.empty()) throw UsageError("trend needs --ref <node>");
  auto normalized = normalize_trend(raw, ref);
  switch (s.format()) {
    case Format::Json: {
      Json inputs;
      inputs["reference"] = ref;
      Json j = report_header("trend", std::move(inputs));
      j["trend"] = trend_json(raw, normalized);
      return render_json(j);
    }
    case Format::Csv: return trend_csv(raw, normalized);
    case Format::Table: return trend_table(raw, normalized);
  }
  return {};
}

std::string cmd_export(Session& s, const Options& opt) {
  if (opt.kind == "processes") {
    switch (s.format()) {
      case Format::Json: return render_json(catalog_json(s.doc().catalog));
      case Format::Csv: return catalog_csv(s.doc().catalog);
      case Format::Table: return catalog_table(s.doc().catalog);
    }
  } else if (opt.kind == "stack") {
    auto src = s.main_stack();
    validate_stack(src.stack, s.doc().catalog);
    if (s.format() != Format::Json)
      throw UsageError("export-catalog --kind stack only supports --format json");
    return stack_document(src.stack, s.doc().catalog);
  } else {
    switch (s.format()) {
      case Format::Json: return render_json(pfas_uses_json());
      case Format::Csv: return pfas_uses_csv();
      case Format::Table: return pfas_uses_table();
    }
  }
  return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"PFAS-containing lithography layer, fabrication step and embodied-carbon model "
               "for IC metal stacks",
               "pfasmodel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto add_common = [&](CLI::App* sub, bool design) {
    sub->add_option("--config", opt.config, "JSON config document")->check(CLI::ExistingFile);
    sub->add_option("--stack", opt.stack, "Preset (asap7, n7-euv, n7-duv) or stack document path");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_flag("--strict", opt.strict, "Reject unknown config keys instead of warning");
    if (design) {
      sub->add_option("--area", opt.area, "Die area in cm^2");
      sub->add_option("--yield", opt.yield, "Fab yield in (0, 1]");
      sub->add_option("--carbon-profile", opt.carbon_profile, "Carbon parameter profile (JSON)")
          ->check(CLI::ExistingFile);
    }
  };
  auto add_retention = [&](CLI::App* sub) {
    auto* keep = sub->add_flag("--retain-power-grid", opt.retain_power_grid,
                               "Keep power-grid layers when dropping routing layers");
    auto* drop = sub->add_flag("--beol-only", opt.beol_only,
                               "Routing-only analysis: drop every BEOL layer above the target");
    keep->excludes(drop);
  };

  auto* analyze = app.add_subcommand("analyze", "Per-layer and stack-level PFAS, steps, energy");
  add_common(analyze, true);

  auto* compare = app.add_subcommand("compare", "Compare two stacks (ratios are stack / against)");
  add_common(compare, true);
  compare->add_option("--against", opt.against, "Stack to compare against (preset or path)");

  auto* sweep = app.add_subcommand("sweep", "BEOL routing-layer reduction sweep");
  add_common(sweep, true);
  sweep->add_option("--targets", opt.targets, "Comma-separated top routing layers, e.g. M7,M5,M3");
  add_retention(sweep);

  auto* soc = app.add_subcommand("soc", "SoC composition under a routing-layer constraint");
  add_common(soc, true);
  soc->add_option("--target", opt.target, "Top routing layer for the constrained SoC");
  add_retention(soc);

  auto* trend = app.add_subcommand("trend", "Normalize a cross-node series to a reference node");
  add_common(trend, false);
  trend->add_option("--ref", opt.ref, "Reference node label");
  trend->add_option("--points", opt.points, "Comma-separated <node>=<value> pairs");

  auto* exporter = app.add_subcommand("export-catalog", "Export reference data");
  add_common(exporter, false);
  exporter->add_option("--kind", opt.kind, "processes (default), stack, or pfas-uses")
      ->check(CLI::IsMember({"processes", "stack", "pfas-uses"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("pfasmodel");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Session session(opt, err);
    std::string report;
    if (*analyze) report = cmd_analyze(session);
    else if (*compare) report = cmd_compare(session, opt);
    else if (*sweep) report = cmd_sweep(session, opt);
    else if (*soc) report = cmd_soc(session, opt);
    else if (*trend) report = cmd_trend(session, opt);
    else report = cmd_export(session, opt);
    out << report;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PfasError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace pfas
