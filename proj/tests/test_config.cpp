#include <gtest/gtest.h>

#include <filesystem>

#include "pfas/config.hpp"
#include "pfas/pfas_engine.hpp"

namespace pfas {
namespace {

const std::filesystem::path kConfigs = std::filesystem::path(PFAS_SOURCE_DIR) / "configs";

std::vector<ConfigIssue> issues_of(std::string_view text, ConfigMode mode = ConfigMode::Strict) {
  try {
    parse_config(text, mode);
  } catch (const ConfigError& e) {
    return e.issues();
  }
  return {};
}

bool has_issue(const std::vector<ConfigIssue>& v, std::string_view location, std::string_view rule) {
  for (const auto& i : v)
    if (i.location == location && i.rule == rule) return true;
  return false;
}

TEST(ParseConfig, Minimal) {
  const auto doc = parse_config(R"({"schema_version": 1, "stack": "asap7"})");
  ASSERT_TRUE(doc.stack);
  EXPECT_EQ(doc.stack->label, "asap7");
  EXPECT_EQ(doc.stack->stack.layers.size(), 16u);
  EXPECT_FALSE(doc.area_cm2);
  EXPECT_FALSE(doc.yield);
  EXPECT_TRUE(doc.warnings.empty());
}

TEST(ParseConfig, ZeroYieldIsRangeError) {
  const auto v = issues_of(R"({"stack": "asap7", "design": {"yield": 0}})");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].location, "/design/yield");
  EXPECT_EQ(v[0].rule, "range");
  EXPECT_NE(v[0].message.find("(0, 1]"), std::string::npos);
}

TEST(ParseConfig, CollectsEveryIssue) {
  const auto v = issues_of(
      R"({"schema_version": 2, "design": {"area_cm2": -1, "yield": 1.5}, "sweep": {"targets": [3]}})");
  EXPECT_TRUE(has_issue(v, "/schema_version", "schema"));
  EXPECT_TRUE(has_issue(v, "/design/area_cm2", "range"));
  EXPECT_TRUE(has_issue(v, "/design/yield", "range"));
  EXPECT_TRUE(has_issue(v, "/sweep/targets/0", "schema"));
}

TEST(ParseConfig, UnknownProcessNamesLayer) {
  const auto v = issues_of(R"({"stack": {"technology_node": "x", "layers": [
      {"name": "M1", "region": "BEOL", "metal": "ArFi_LE9"}]}})");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "unknown-process");
  EXPECT_EQ(v[0].location, "/stack/layers/0");
  EXPECT_NE(v[0].message.find("M1"), std::string::npos);
  EXPECT_NE(v[0].message.find("ArFi_LE9"), std::string::npos);
}

TEST(ParseConfig, SyntaxErrorHasLineAndColumn) {
  const auto v = issues_of("{\n  \"stack\": \"asap7\",\n  oops\n}");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "syntax");
  EXPECT_EQ(v[0].location.rfind("line 3, column ", 0), 0u) << v[0].location;
}

TEST(ParseConfig, UnknownKeysStrictVersusLenient) {
  const std::string text = R"({"stack": "asap7", "desing": {"yield": 0.9}})";
  const auto strict = issues_of(text, ConfigMode::Strict);
  ASSERT_EQ(strict.size(), 1u);
  EXPECT_EQ(strict[0].rule, "unknown-key");
  EXPECT_EQ(strict[0].location, "/desing");

  const auto doc = parse_config(text, ConfigMode::Lenient);
  ASSERT_EQ(doc.warnings.size(), 1u);
  EXPECT_EQ(doc.warnings[0].location, "/desing");
  EXPECT_FALSE(doc.yield);
}

TEST(ParseConfig, StackSourceNeedsExactlyOneForm) {
  EXPECT_FALSE(issues_of(R"({"stack": {"preset": "asap7", "path": "x.json"}})").empty());
  EXPECT_FALSE(issues_of(R"({"stack": "tsmc3"})").empty());
  EXPECT_FALSE(issues_of(R"({"stack": 7})").empty());
}

TEST(ParseConfig, CustomProcessUsableByStack) {
  const auto doc = parse_config(R"({
    "processes": [{"id": "EUV_LE3", "exposure": "EUV", "masks": 3,
                   "steps": {"dry_etch": 3, "litho": 9, "metallization": 1, "metrology": 9,
                             "wet_etch": 9, "deposition": 0}}],
    "stack": {"technology_node": "t", "layers": [{"name": "M1", "region": "BEOL", "metal": "EUV_LE3"}]}
  })");
  EXPECT_EQ(doc.catalog.lookup("EUV_LE3").masks, 3);
  EXPECT_EQ(stack_metrics(doc.stack->stack, doc.catalog).total_pfas_layers, 3);
}

TEST(ParseConfig, ProcessCollisionRejected) {
  const auto v = issues_of(R"({"processes": [{"id": "EUV_LE", "exposure": "EUV", "masks": 1,
      "steps": {"dry_etch": 1, "litho": 3, "metallization": 1, "metrology": 3, "wet_etch": 3,
                "deposition": 0}}]})");
  EXPECT_FALSE(v.empty());
}

TEST(ParseConfig, ShippedConfigsParseStrictly) {
  for (const auto& entry : std::filesystem::directory_iterator(kConfigs)) {
    if (entry.path().extension() != ".json" || entry.path().stem() == "carbon_profile_example")
      continue;
    SCOPED_TRACE(entry.path().string());
    EXPECT_NO_THROW(parse_config(read_text_file(entry.path()), ConfigMode::Strict, kConfigs));
  }
}

TEST(ParseConfig, RelativeStackPath) {
  const auto doc = parse_config(read_text_file(kConfigs / "custom_stack.json"), ConfigMode::Strict,
                                kConfigs);
  ASSERT_TRUE(doc.stack);
  EXPECT_EQ(doc.stack->stack.technology_node, "custom-LE3");
  EXPECT_TRUE(doc.catalog.contains("ArFi_LE5"));
  ASSERT_TRUE(doc.carbon);
  ASSERT_TRUE(doc.ci_range);
  EXPECT_DOUBLE_EQ(doc.ci_range->high, 0.82);
}

TEST(StackDocument, RoundTripPresets) {
  for (const auto& name : preset_names()) {
    ProcessCatalog c;
    const StackSpec s = *preset_by_name(name);
    ProcessCatalog c2;
    EXPECT_EQ(parse_stack_document(stack_document(s, c), c2), s) << name;
  }
}

TEST(StackDocument, RoundTripWithExtensions) {
  ProcessCatalog c;
  const StackSpec s =
      parse_stack_document(read_text_file(kConfigs / "stacks" / "custom_le3.json"), c);
  const auto before = stack_metrics(s, c);
  const std::string text = stack_document(s, c);

  ProcessCatalog fresh;
  const StackSpec back = parse_stack_document(text, fresh);
  EXPECT_EQ(back, s);
  EXPECT_EQ(fresh.lookup("ArFi_LE5"), c.lookup("ArFi_LE5"));
  const auto after = stack_metrics(back, fresh);
  EXPECT_EQ(after.per_layer, before.per_layer);
  EXPECT_EQ(after.total_pfas_layers, before.total_pfas_layers);
  EXPECT_EQ(stack_document(back, fresh), text);
}

TEST(StackDocument, FailedParseLeavesCatalogAlone) {
  ProcessCatalog c;
  const std::string bad = R"({"technology_node": "t",
    "processes": [{"id": "P1", "exposure": "EUV", "masks": 1, "steps": {"dry_etch": 1, "litho": 1,
                   "metallization": 1, "metrology": 1, "wet_etch": 1, "deposition": 1}}],
    "layers": [{"name": "M1", "region": "BEOL", "metal": "Missing"}]})";
  EXPECT_THROW(parse_stack_document(bad, c), ConfigError);
  EXPECT_FALSE(c.contains("P1"));
}

TEST(CarbonProfile, Example) {
  const auto p = parse_carbon_profile(read_text_file(kConfigs / "carbon_profile_example.json"));
  EXPECT_DOUBLE_EQ(p.params.carbon_intensity, 0.5);
  EXPECT_DOUBLE_EQ(p.params.energy_per_unit_litho, 0.05);
  EXPECT_DOUBLE_EQ(p.params.material_per_area, 0.5);
  ASSERT_TRUE(p.ci_range);
  EXPECT_DOUBLE_EQ(p.ci_range->low, 0.02);
}

TEST(CarbonProfile, Rejections) {
  EXPECT_THROW(parse_carbon_profile(R"({"carbon": {}})"), ConfigError);  // no schema_version
  EXPECT_THROW(parse_carbon_profile(R"({"schema_version": 1, "carbon": {"gas_per_area": -1}})"),
               ConfigError);
  EXPECT_THROW(parse_carbon_profile(
                   R"({"schema_version": 1, "carbon": {}, "ci_band": {"low": 0.9, "high": 0.1}})"),
               ConfigError);
}

}  // namespace
}  // namespace pfas
