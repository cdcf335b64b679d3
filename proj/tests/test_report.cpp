#include "liestat/report.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "liestat/errors.hpp"

namespace liestat {
namespace {

const std::string kBin = LIESTAT_BIN;
const std::string kData = LIESTAT_TESTDATA;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + kBin + " " + args;
  std::array<char, 4096> buf{};
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

TEST(RoundSig, TwelveDigits) {
  EXPECT_EQ(round_sig(0.0), 0.0);
  EXPECT_EQ(round_sig(-0.0), 0.0);
  EXPECT_DOUBLE_EQ(round_sig(1.0 / 3.0), 0.333333333333);
  EXPECT_DOUBLE_EQ(round_sig(-6.54500000000004), -6.545);
}

TEST(GroupSpec, PresetLoads) {
  const GroupSpec spec = load_group_spec(kData + "/milnor_131.json");
  EXPECT_EQ(spec.algebra.dim(), 3);
  EXPECT_DOUBLE_EQ(spec.algebra.structure().coeff(0, 1, 2), 1.0);
  EXPECT_DOUBLE_EQ(spec.algebra.structure().coeff(1, 2, 0), 3.0);
}

TEST(GroupSpec, RawBracketOutOfRangeNamesEntry) {
  try {
    load_group_spec(kData + "/bad_bracket.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    const std::string what = err.what();
    EXPECT_NE(what.find("brackets[0]"), std::string::npos) << what;
    EXPECT_NE(what.find("out of range"), std::string::npos) << what;
  }
}

TEST(GroupSpec, JacobiViolationIsValidationError) {
  EXPECT_THROW(load_group_spec(kData + "/bad_jacobi.json"), ValidationError);
}

TEST(GroupSpec, NonPositiveMetricRejected) {
  nlohmann::json doc;
  doc["preset"] = {{"name", "r3"}};
  doc["metric"] = {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  EXPECT_THROW(parse_group_spec(doc), ValidationError);
}

TEST(GroupSpec, DuplicateCubicRejected) {
  nlohmann::json doc;
  doc["preset"] = {{"name", "r3"}};
  doc["cubic"] = {{1, 2, 3, 1.0}, {3, 2, 1, 0.5}};
  EXPECT_THROW(parse_group_spec(doc), ParseError);
}

TEST(Report, NonUnimodularScalarValue) {
  const GroupSpec spec = load_group_spec(kData + "/nonuni_0503.json");
  const auto report = build_report(spec);
  EXPECT_NEAR(report["geometry"]["scalar_curvature"].get<double>(), -6.545, 1e-12);
}

TEST(Report, ClassifySectionForMilnor131) {
  const GroupSpec spec = load_group_spec(kData + "/milnor_131.json");
  ReportOptions options;
  options.classify = true;
  const auto report = build_report(spec, options);
  EXPECT_EQ(report["classification"]["kernel_dim"].get<int>(), 2);
  EXPECT_EQ(report["classification"]["class_label"].get<std::string>(), "su2");
  EXPECT_EQ(report["classification"]["basis"].size(), 2u);
}

TEST(Report, StatisticalSectionForNormalCubic) {
  const GroupSpec spec = load_group_spec(kData + "/normal_cubic.json");
  const auto report = build_report(spec);
  ASSERT_TRUE(report.contains("statistical"));
  EXPECT_TRUE(report["statistical"]["is_statistical"].get<bool>());
  EXPECT_TRUE(report["statistical"]["sectional_well_defined"].get<bool>());
  // the 12-digit document rounding of sqrt(2) perturbs the exact relation
  EXPECT_LE(report["statistical"]["conjugate_symmetry_defect"].get<double>(), 1e-10);
  // the alpha = 1 connection is flat here, so the Hessian tensor is emitted
  EXPECT_TRUE(report["statistical"]["hessian_flat"].get<bool>());
  EXPECT_NEAR(report["statistical"]["hessian"][1][1][1][1].get<double>(), 2.0, 1e-9);
}

TEST(Report, MatrixMetricAccepted) {
  nlohmann::json doc;
  doc["preset"] = {{"name", "g2d"}, {"params", {1.0}}};
  doc["metric"] = {{2.0, 0.0}, {0.0, 2.0}};
  const GroupSpec spec = parse_group_spec(doc);
  const auto report = build_report(spec);
  // scaling the metric by 2 halves the sectional curvature (-1 -> -1/2)
  EXPECT_NEAR(report["geometry"]["sectional"][0][2].get<double>(), -0.5, 1e-12);
}

TEST(Report, EchoRoundTripsByteExact) {
  for (const char* name : {"/milnor_131.json", "/nonuni_10.json", "/normal_cubic.json"}) {
    const GroupSpec spec = load_group_spec(kData + name);
    ReportOptions options;
    options.classify = true;
    const auto first = build_report(spec, options);
    const GroupSpec reparsed = parse_group_spec(first["spec"]);
    const auto second = build_report(reparsed, options);
    EXPECT_EQ(render_json(first), render_json(second)) << name;
  }
}

TEST(Report, TextRenderingMentionsKeyNumbers) {
  const GroupSpec spec = load_group_spec(kData + "/nonuni_0503.json");
  const std::string text = render_text(build_report(spec));
  EXPECT_NE(text.find("scalar curvature: -6.545"), std::string::npos) << text;
}

TEST(Cli, ReportExitCodes) {
  EXPECT_EQ(run_cli("report " + kData + "/milnor_131.json >/dev/null 2>&1").exit_code, 0);
  EXPECT_EQ(run_cli("report " + kData + "/no_such_file.json >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("report " + kData + "/bad_bracket.json >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("report " + kData + "/bad_jacobi.json >/dev/null 2>&1").exit_code, 3);
  EXPECT_EQ(run_cli("bogus-subcommand >/dev/null 2>&1").exit_code, 2);
}

TEST(Cli, RankAmbiguityExitsFour) {
  // nearly-abelian brackets push singular values into the ambiguity band
  EXPECT_EQ(
      run_cli("report " + kData + "/tiny_bracket.json --classify >/dev/null 2>&1").exit_code, 4);
}

TEST(Cli, ClassifyPointAndErrors) {
  const CliResult r = run_cli("classify --milnor --c 1 1 0 2>/dev/null");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("dim 2"), std::string::npos);
  EXPECT_NE(r.out.find("e2"), std::string::npos);
  const CliResult abelian = run_cli("classify --milnor --c 0 0 0 2>/dev/null");
  EXPECT_NE(abelian.out.find("dim 10"), std::string::npos);
  EXPECT_NE(abelian.out.find("r3"), std::string::npos);
  const CliResult point = run_cli("classify --nonunimodular --xi 1 --eta 0 --show-basis 2>/dev/null");
  EXPECT_EQ(point.exit_code, 0);
  EXPECT_NE(point.out.find("dim 3"), std::string::npos);
  EXPECT_NE(point.out.find("basis"), std::string::npos);
  EXPECT_EQ(run_cli("classify --milnor >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("classify --sweep --nonunimodular >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("classify --sweep --nonunimodular --grid 1:0:1 >/dev/null 2>&1").exit_code,
            2);
  EXPECT_EQ(run_cli("classify --nonunimodular --xi 0.5 >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("classify --nonunimodular --xi -1 --eta 0 >/dev/null 2>&1").exit_code, 3);
}

TEST(Cli, GridImpliesSweep) {
  const CliResult r = run_cli("classify --nonunimodular --grid 0:1.5:0.25 2>/dev/null");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int nontrivial = 0, total = 0;
  while (std::getline(lines, line)) {
    if (line.find("dim") == std::string::npos) continue;
    ++total;
    if (line.find("dim 0") == std::string::npos) ++nontrivial;
  }
  EXPECT_EQ(total, 49);
  EXPECT_EQ(nontrivial, 8);  // the xi = 0 column plus (1, 0)
}

TEST(Cli, ClassifySweepJson) {
  const CliResult r =
      run_cli("classify --sweep --nonunimodular --grid 0:1:0.5 --json 2>/dev/null");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = parse(r.out);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) {
    const double xi = row["params"][0].get<double>();
    const double eta = row["params"][1].get<double>();
    const bool nontrivial = xi == 0.0 || (xi == 1.0 && eta == 0.0);
    EXPECT_EQ(row["dim"].get<int>() > 0, nontrivial);
  }
}

TEST(Cli, ModelsExitCodes) {
  EXPECT_EQ(run_cli("models t --nu 5 --alpha 2.5 >/dev/null 2>&1").exit_code, 0);
  EXPECT_EQ(run_cli("models t --nu 0 >/dev/null 2>&1").exit_code, 2);
  EXPECT_EQ(run_cli("models wrong >/dev/null 2>&1").exit_code, 2);
}

TEST(Cli, ModelsFlatFlag) {
  const CliResult r = run_cli("models t --nu 5 --alpha 2.5 --json 2>/dev/null");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = parse(r.out);
  EXPECT_TRUE(doc["flat"].get<bool>());
  EXPECT_NEAR(doc["curvature_constant"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(doc["flat_alpha"].get<double>(), 2.5, 1e-12);
}

TEST(Cli, GoldenReportsByteStable) {
  const struct {
    std::string args;
    std::string golden;
  } cases[] = {
      {"report " + kData + "/milnor_131.json --json --classify", "milnor_131.report.json"},
      {"report " + kData + "/nonuni_10.json --json --classify", "nonuni_10.report.json"},
      {"models t --nu 5 --json", "models_t5.json"},
  };
  for (const auto& c : cases) {
    const CliResult first = run_cli(c.args + " 2>/dev/null");
    const CliResult second = run_cli(c.args + " 2>/dev/null");
    ASSERT_EQ(first.exit_code, 0) << c.args;
    EXPECT_EQ(first.out, second.out) << c.args;
    const std::string golden = slurp(kData + "/golden/" + c.golden);
    ASSERT_FALSE(golden.empty()) << c.golden;
    EXPECT_EQ(first.out, golden) << c.args;
  }
}

TEST(Cli, ReportOutFlagWritesFile) {
  const std::string path = "/tmp/liestat_out_test.json";
  std::remove(path.c_str());
  const CliResult r =
      run_cli("report " + kData + "/milnor_131.json --json --out " + path + " 2>/dev/null");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(slurp(path).empty());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace liestat
