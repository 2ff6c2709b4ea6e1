#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pfas/cli.hpp"

namespace pfas {
namespace {

const std::filesystem::path kSource(PFAS_SOURCE_DIR);

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const char* name) { return (kSource / "configs" / name).string(); }

TEST(Cli, AnalyzeJson) {
  const auto r = run({"analyze", "--stack", "asap7", "--area", "1", "--yield", "1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["stack_metrics"]["total_pfas_layers"], 29);
  EXPECT_EQ(j["stack_metrics"]["by_region"]["BEOL"], 22);
  EXPECT_EQ(j["chip_pfas"]["value"].get<double>(), 29.0);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SweepBeolOnly) {
  const auto r = run({"sweep", "--stack", "asap7", "--targets", "M7,M5,M3", "--beol-only",
                      "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& pts = j["sweep"]["points"];
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0]["routing_beol_pfas"], 18);
  EXPECT_EQ(pts[1]["routing_beol_pfas"], 12);
  EXPECT_EQ(pts[2]["routing_beol_pfas"], 6);
  EXPECT_EQ(j["inputs"]["retain_power_grid"], false);
}

TEST(Cli, ExportCatalogCsvHasNineRows) {
  const auto r = run({"export-catalog", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);  // header + 9
}

TEST(Cli, ExportStackRoundTrips) {
  const auto r = run({"export-catalog", "--kind", "stack", "--stack", "asap7", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto path = std::filesystem::temp_directory_path() / "pfasmodel_cli_asap7.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  const auto a = run({"analyze", "--stack", path.string(), "--format", "csv"});
  const auto b = run({"analyze", "--stack", "asap7", "--format", "csv"});
  std::filesystem::remove(path);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--format", "xml", "--stack", "asap7"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze"}).code, kExitUsage);  // no stack anywhere
  EXPECT_EQ(run({"sweep", "--stack", "asap7"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--stack", "asap7", "--targets", "M3", "--beol-only",
                 "--retain-power-grid"}).code,
            kExitUsage);
  EXPECT_EQ(run({"analyze", "--stack", "asap7", "--yield", "0"}).code, kExitValidation);
  EXPECT_EQ(run({"sweep", "--stack", "asap7", "--targets", "M12"}).code, kExitValidation);
  EXPECT_EQ(run({"trend", "--points", "a=1,b=2", "--ref", "c"}).code, kExitValidation);
  EXPECT_EQ(run({"--version"}).code, kExitOk);
}

TEST(Cli, ValidationErrorsGoToStderrWithLocation) {
  const auto path = std::filesystem::temp_directory_path() / "pfasmodel_cli_bad.json";
  {
    std::ofstream f(path);
    f << R"({"stack": "asap7", "design": {"yield": 0}})";
  }
  const auto r = run({"analyze", "--config", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("/design/yield"), std::string::npos) << r.err;
}

TEST(Cli, LenientWarnsStrictRejects) {
  const auto path = std::filesystem::temp_directory_path() / "pfasmodel_cli_typo.json";
  {
    std::ofstream f(path);
    f << R"({"stack": "asap7", "extra": 1})";
  }
  const auto lenient = run({"analyze", "--config", path.string()});
  const auto strict = run({"analyze", "--config", path.string(), "--strict"});
  std::filesystem::remove(path);
  EXPECT_EQ(lenient.code, kExitOk);
  EXPECT_NE(lenient.err.find("warning"), std::string::npos);
  EXPECT_EQ(strict.code, kExitValidation);
}

TEST(Cli, FlagsOverrideConfig) {
  const auto r = run({"analyze", "--config", config("custom_stack.json"), "--stack", "asap7",
                      "--area", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stack_metrics"]["total_pfas_layers"], 29);
  EXPECT_EQ(j["chip_pfas"]["area_cm2"].get<double>(), 2.0);
  EXPECT_EQ(j["chip_pfas"]["yield"].get<double>(), 0.9);
}

TEST(Cli, ShippedConfigs) {
  const auto soc = run({"soc", "--config", config("soc_accelerator.json"), "--format", "json"});
  ASSERT_EQ(soc.code, kExitOk) << soc.err;
  EXPECT_NEAR(nlohmann::json::parse(soc.out)["soc"]["area_increase"].get<double>(), 0.051 * 0.47,
              1e-12);

  const auto cmp = run({"compare", "--config", config("n7_compare.json"), "--format", "json"});
  ASSERT_EQ(cmp.code, kExitOk) << cmp.err;
  EXPECT_NEAR(nlohmann::json::parse(cmp.out)["comparison"]["percent_reduction"].get<double>(),
              7.0 / 36.0, 1e-12);

  const auto trend = run({"trend", "--config", config("trend_example.json"), "--format", "csv"});
  ASSERT_EQ(trend.code, kExitOk) << trend.err;
  EXPECT_NE(trend.out.find("28nm,20,1\n"), std::string::npos) << trend.out;
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"sweep", "--config", config("asap7_sweep.json"), "--format",
                                      "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace pfas
