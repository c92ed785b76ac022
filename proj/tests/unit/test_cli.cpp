#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using hypmetric::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, EvalPrintsValue) {
  const Result r = invoke({"eval", "halfspace:2", "h:c=1", "--x", "0,1", "--y", "0,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["command"], "eval");
  EXPECT_NEAR(j["results"]["value"].get<double>(), 0.53479999673957037, 1e-15);
  EXPECT_TRUE(j.contains("config"));
  EXPECT_TRUE(j["claims"].is_array());
}

TEST(Cli, EvalCsv) {
  const Result r = invoke({"--format", "csv", "eval", "ball:2", "rho", "--x", "0,0", "--y", "0.5,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("metric,value\n", 0), 0u);
  EXPECT_NE(r.out.find("1.09861228866810"), std::string::npos);
}

TEST(Cli, MalformedDomainNamesToken) {
  const Result r = invoke({"eval", "disk:2", "j", "--x", "0,1", "--y", "0,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("disk"), std::string::npos);
}

TEST(Cli, MalformedPointNamesToken) {
  const Result r = invoke({"eval", "halfspace:2", "j", "--x", "0,abc", "--y", "0,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("abc"), std::string::npos);
}

TEST(Cli, MalformedMetricNamesToken) {
  const Result r = invoke({"eval", "halfspace:2", "zeta", "--x", "0,1", "--y", "0,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("zeta"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"eval", "halfspace:2", "j", "--x", "0,1"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "eval", "halfspace:2", "j", "--x", "0,1", "--y", "0,2"}).code, 2);
  EXPECT_EQ(invoke({"--format", "svg", "bounds", "L4.1", "halfspace:2"}).code, 2);
  EXPECT_EQ(invoke({"bounds", "L9.9", "halfspace:2"}).code, 2);
}

TEST(Cli, BoundaryPointIsUsageError) {
  EXPECT_EQ(invoke({"eval", "halfspace:2", "j", "--x", "0,0", "--y", "0,2"}).code, 2);
}

TEST(Cli, HelpSucceeds) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("critical-c"), std::string::npos);
}

TEST(Cli, CriticalCBall) {
  const Result r = invoke({"--seed", "0", "critical-c", "ball:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_GE(j["results"]["lo"].get<double>(), 1.90);
  EXPECT_LE(j["results"]["hi"].get<double>(), 2.10);
  ASSERT_FALSE(j["claims"].empty());
  EXPECT_EQ(j["claims"][0]["status"], "pass");
}

TEST(Cli, CriticalCInconsistentBracketFails) {
  EXPECT_EQ(invoke({"critical-c", "halfspace:2", "--lo", "1.5", "--hi", "3"}).code, 1);
}

TEST(Cli, BoundsHyperbolicComparison) {
  const Result r = invoke({"bounds", "L4.8", "halfspace:2", "--c", "1", "--samples", "100000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["results"]["L4.8"]["violation_count"], 0);
}

TEST(Cli, BoundsRetractedNeedsSmallConstant) {
  EXPECT_EQ(invoke({"bounds", "R4.4", "halfspace:2", "--c", "0.5", "--samples", "5000"}).code, 0);
  EXPECT_EQ(invoke({"bounds", "R4.4", "halfspace:2", "--c", "2", "--samples", "5000"}).code, 0);
}

TEST(Cli, BoundsAllSkipsInapplicable) {
  const Result r = invoke({"bounds", "--all", "punctured:2:0,0", "--samples", "2000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  std::vector<std::string> skipped;
  for (const auto& s : j["results"]["skipped"]) skipped.push_back(s["lemma_id"]);
  EXPECT_NE(std::find(skipped.begin(), skipped.end(), "L4.8"), skipped.end());
  EXPECT_NE(std::find(skipped.begin(), skipped.end(), "C4.7-convex"), skipped.end());
}

TEST(Cli, DefectAboveCriticalHasNonnegativeClaim) {
  const Result r = invoke({"defect", "halfspace:2", "--c", "1.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(parse(r)["claims"].empty());
}

TEST(Cli, BallsReportsAllProvenances) {
  const Result r = invoke({"balls", "ball:2", "--x", "0.5,0", "--rho-radius", "1.0986122886681098", "--r", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = r.out;
  for (const char* key : {"\"paper\"", "\"derived\"", "\"brute\""}) EXPECT_NE(text.find(key), std::string::npos);
}

TEST(Cli, SphereDumpCsvAndSvg) {
  const Result csv = invoke({"--format", "csv", "sphere-dump", "halfspace:2", "--x", "0,1", "--r", "1.0986122886681098",
                             "--m", "16"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 17);
  const Result svg = invoke({"--format", "svg", "sphere-dump", "halfspace:2", "--x", "0,1", "--r", "1", "--m", "16"});
  ASSERT_EQ(svg.code, 0) << svg.err;
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.out.find("</svg>"), std::string::npos);
  EXPECT_EQ(invoke({"--format", "svg", "sphere-dump", "halfspace:3", "--x", "0,0,1", "--r", "1"}).code, 2);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "hypmetric_cli_test.json";
  const Result r = invoke({"--output", path.string(), "eval", "halfspace:2", "j", "--x", "0,1", "--y", "0,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_NEAR(j["results"]["value"].get<double>(), 0.69314718055994531, 1e-15);
  std::filesystem::remove(path);
}

TEST(Cli, SameSeedSameBytes) {
  const std::vector<std::string> args{"--seed", "4", "defect", "segment:2:-1,0:1,0", "--c", "0.8", "--budget", "20000"};
  const Result a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result c = invoke({"--seed", "4", "bounds", "L4.6", "ball:2", "--samples", "5000"});
  const Result d = invoke({"--seed", "4", "bounds", "L4.6", "ball:2", "--samples", "5000"});
  EXPECT_EQ(c.out, d.out);
}
