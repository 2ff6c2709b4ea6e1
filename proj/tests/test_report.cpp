#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pfas/report.hpp"

namespace pfas {
namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  ADD_FAILURE() << "no column " << name;
  return 0;
}

TEST(FormatFull, RoundTrips) {
  EXPECT_EQ(format_full(29.0), "29");
  EXPECT_EQ(format_full(0.875), "0.875");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) / 7.0;
    EXPECT_EQ(std::stod(format_full(v)), v);
  }
}

TEST(FormatHuman, SixSignificantDigits) {
  EXPECT_EQ(format_human(29.0 / 17.0), "1.70588");
  EXPECT_EQ(format_human(2.0), "2");
}

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("table"), Format::Table);
  EXPECT_FALSE(parse_format("xml"));
}

TEST(Report, HeaderFields) {
  const Json j = report_header("analyze", Json::object());
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["tool_version"], std::string(kToolVersion));
  EXPECT_EQ(j["command"], "analyze");
  const std::string text = render_json(j);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.rfind("{\n  \"schema_version\"", 0), 0u);
}

// The per-layer CSV and the JSON report carry the same numbers.
TEST(Report, CsvAndJsonAgree) {
  const StackSpec s = asap7_preset();
  ScenarioContext ctx;
  ctx.design = {0.7, 0.875};
  const auto eval = evaluate(s, ctx);
  const Json j = Json::parse(render_json(to_json(eval)));
  const auto rows = parse_csv(layers_csv(s, eval.metrics));

  ASSERT_EQ(rows.size(), s.layers.size() + 2);  // header + layers + TOTAL
  const auto& h = rows[0];
  const auto& per_layer = j["stack_metrics"]["per_layer"];
  ASSERT_EQ(per_layer.size(), s.layers.size());
  for (std::size_t i = 0; i < s.layers.size(); ++i) {
    const auto& r = rows[i + 1];
    const auto& jl = per_layer[i];
    EXPECT_EQ(r[column(h, "layer")], jl["name"].get<std::string>());
    EXPECT_EQ(std::stoi(r[column(h, "litho_steps")]), jl["litho_steps"].get<int>());
    EXPECT_EQ(std::stod(r[column(h, "e_litho")]), jl["litho_energy"].get<double>());
    EXPECT_EQ(std::stoi(r[column(h, "pfas_litho")]), jl["pfas_layers"].get<int>());
  }
  const auto& total = rows.back();
  EXPECT_EQ(total[column(h, "layer")], "TOTAL");
  EXPECT_EQ(std::stoi(total[column(h, "pfas_litho")]),
            j["stack_metrics"]["total_pfas_layers"].get<int>());
  EXPECT_EQ(std::stod(total[column(h, "e_litho")]),
            j["stack_metrics"]["total_litho_energy"].get<double>());
  EXPECT_EQ(j["chip_pfas"]["value"].get<double>(), 29 * 0.7 / 0.875);
}

TEST(Report, SweepJsonRatios) {
  ScenarioContext ctx;
  const auto r = sweep_beol(asap7_preset(), {"M7", "M5", "M3"}, false, ctx);
  const Json j = to_json(r);
  const auto& pts = j["points"];
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0]["routing_beol_pfas"], 18);
  EXPECT_EQ(pts[1]["routing_beol_pfas"], 12);
  EXPECT_EQ(pts[2]["routing_beol_pfas"], 6);
  EXPECT_EQ(pts[1]["ratios"]["routing_vs_previous"].get<double>(), 1.5);
  EXPECT_EQ(pts[2]["ratios"]["routing_vs_previous"].get<double>(), 2.0);
  EXPECT_EQ(pts[2]["ratios"]["routing_vs_first"].get<double>(), 3.0);
}

TEST(Report, CatalogJsonListsBuiltins) {
  const Json j = catalog_json(ProcessCatalog{});
  EXPECT_EQ(j["kind"], "process_catalog");
  EXPECT_EQ(j["processes"].size(), 9u);
  EXPECT_FALSE(j.contains("tool_version"));
}

TEST(Report, PfasUses) {
  const Json j = pfas_uses_json();
  EXPECT_FALSE(j["uses"].empty());
  EXPECT_FALSE(pfas_uses_csv().empty());
}

}  // namespace
}  // namespace pfas
