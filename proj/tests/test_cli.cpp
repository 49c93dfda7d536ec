#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "format.hpp"

namespace solvable::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(fmt::num(2.0), "2");
  EXPECT_EQ(fmt::num(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(fmt::num(-3.4641016151377544), "-3.46410161514");
  EXPECT_EQ(fmt::num(1e-20), "1e-20");
  EXPECT_EQ(fmt::num(-0.0), "0");
  EXPECT_EQ(fmt::num(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Cli, FamiliesListsSix) {
  const Result r = run_cli({"families"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 6u);
}

TEST(Cli, FamilyDescriptor) {
  const Result r = run_cli({"families", "--family", "s2", "--alpha", "-7", "--beta", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], "s^2");
  EXPECT_EQ(j["alpha"], -7.0);
  EXPECT_EQ(j["beta"], 1.0);
  EXPECT_EQ(j["interval"][0], 0.0);
  EXPECT_EQ(j["interval"][1], "inf");
  EXPECT_EQ(j["Lambda"], 4.0);
  EXPECT_EQ(j["L"], 3);
}

TEST(Cli, GenerateGroundState) {
  const Result r = run_cli({"generate", "--c1", "1", "--c2", "0", "--n", "0", "--branch", "+", "--which", "cuberoot"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["energy"], 2.0);
  EXPECT_EQ(j["admissible"], true);
  EXPECT_TRUE(j["psi_expr"].is_string());
  EXPECT_FALSE(j["psi_expr"].get<std::string>().empty());
}

TEST(Cli, GenerateInadmissibleIsDomainError) {
  const Result r = run_cli({"generate", "--c1", "1", "--c2", "-5", "--n", "1", "--branch", "+"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["admissible"], false);
}

TEST(Cli, SpectrumOscillator) {
  const Result r = run_cli({"verify", "spectrum", "--family", "one", "--alpha", "-2", "--beta", "0", "--m", "0", "--grid", "4000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv(r.out);
  ASSERT_GE(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"index", "E_numeric", "E_analytic", "abs_err"}));
  for (int i = 1; i <= 5; ++i) EXPECT_LT(std::stod(rows[i][3]), 5e-4);
}

TEST(Cli, PolyCsv) {
  const Result r = run_cli({"poly", "--family", "one", "--alpha", "-2", "--beta", "0", "--ell", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ell,j,c_j\n2,0,-0.5\n2,1,0\n2,2,1\n");
}

TEST(Cli, SpecfunAndPlots) {
  Result r = run_cli({"specfun", "eval", "--family", "one", "--alpha", "-2", "--beta", "0", "--ell", "2", "--m", "1",
                      "--grid", "3", "--smin", "-1", "--smax", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s,value\n-1,-2\n0,0\n1,2\n");
  r = run_cli({"potential", "--family", "one", "--alpha", "-2", "--beta", "0", "--m", "0", "--grid", "3", "--xmin",
               "-2", "--xmax", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x,V\n-2,3\n0,-1\n2,3\n");
  r = run_cli({"eigenfunction", "--family", "s", "--alpha", "-1", "--beta", "1", "--ell", "1", "--m", "0", "--grid", "5"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_GT(std::stod(rows[1][0]), 0.0);
}

TEST(Cli, DomainErrorNamesConstraint) {
  const Result r = run_cli({"poly", "--family", "s2-minus-1", "--alpha", "-3", "--beta", "1", "--ell", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("-beta<alpha<0"), std::string::npos) << r.err;
}

TEST(Cli, CutoffIsDomainError) {
  const Result r = run_cli({"poly", "--family", "s2", "--alpha", "-7", "--beta", "1", "--ell", "4"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"families", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"poly", "--family", "one", "--alpha", "-2", "--beta", "0"}).code, 2);
  EXPECT_EQ(run_cli({"poly", "--family", "cubic", "--alpha", "-2", "--beta", "0", "--ell", "1"}).code, 2);
  EXPECT_EQ(run_cli({"poly", "--family", "one", "--alpha", "x", "--beta", "0", "--ell", "1"}).code, 2);
  EXPECT_EQ(run_cli({"acceptance", "--criterion", "11"}).code, 2);
}

TEST(Cli, Help) {
  Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("generate"), std::string::npos);
  r = run_cli({"generate", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--c1"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "residual", "--system", "quantsys", "--c1", "1", "--c2", "0", "--n", "2", "--random", "20"};
  const Result a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rows = csv(a.out);
  ASSERT_EQ(rows.size(), 21u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(std::abs(std::stod(rows[i][1])), 1e-7);
}

TEST(Cli, SeedChangesRandomSample) {
  const std::vector<std::string> tail{"verify", "residual", "--system", "quantsys", "--c1", "1", "--c2", "0", "--random", "5"};
  std::vector<std::string> s1{"--seed", "1"}, s2{"--seed", "2"};
  s1.insert(s1.end(), tail.begin(), tail.end());
  s2.insert(s2.end(), tail.begin(), tail.end());
  EXPECT_NE(run_cli(s1).out, run_cli(s2).out);
}

TEST(Cli, SeedEnvironmentOverride) {
  const char* old = std::getenv("SOLVABLE_SEED");
  const std::string saved = old ? old : "";
  ::setenv("SOLVABLE_SEED", "7", 1);
  EXPECT_EQ(default_seed(), 7u);
  ::setenv("SOLVABLE_SEED", "junk", 1);
  EXPECT_EQ(default_seed(), 42u);
  ::unsetenv("SOLVABLE_SEED");
  EXPECT_EQ(default_seed(), 42u);
  if (old) ::setenv("SOLVABLE_SEED", saved.c_str(), 1);
}

TEST(Cli, SolveParamsListsBranches) {
  const Result r = run_cli({"solve-params", "--mode", "quantsys", "--c1", "1", "--c2", "-5", "--n", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["admissible"], false);
  EXPECT_EQ(j[1]["admissible"], false);
  const Result c = run_cli({"solve-params", "--mode", "invsqrt", "--c1", "-1", "--c2", "-6.75", "--n", "3"});
  ASSERT_EQ(c.code, 0);
  bool found = false;
  for (const auto& e : nlohmann::json::parse(c.out))
    if (e["admissible"] == true && std::abs(e["alpha"].get<double>() + 2) < 1e-10) found = true;
  EXPECT_TRUE(found);
}

TEST(Cli, ReproduceDw) {
  const Result r = run_cli({"reproduce-dw", "--theta", "1", "--rho", "0", "--lambda", "-1", "--which", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["coefficients"][1].get<double>(), -0.5, 1e-10);
  EXPECT_NEAR(j["coefficients"][2].get<double>(), -0.1875, 1e-10);
  EXPECT_NEAR(j["coefficients"][3].get<double>(), 1.0, 1e-10);
}

TEST(Cli, OrthogonalityCsv) {
  const Result r = run_cli({"verify", "orthogonality", "--family", "one", "--alpha", "-2", "--beta", "0", "--m", "1", "--ell-max", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "ell", "k", "s_space", "x_space"}));
  EXPECT_EQ(rows.size(), 1u + 6u + 3u);
}

TEST(Cli, AcceptanceSingleCriterion) {
  const Result r = run_cli({"acceptance", "--criterion", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("criterion 8 PASS"), std::string::npos);
}

}  // namespace
}  // namespace solvable::cli
