#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "radosc/io.hpp"

using namespace radosc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "radosc-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

}  // namespace

TEST(Phase, Parsing) {
  const double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(*cli::parse_phase("pi"), pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("0.5pi"), 0.5 * pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("3pi/2"), 1.5 * pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("pi/4"), 0.25 * pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("-pi/2"), -0.5 * pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("-0.25pi"), -0.25 * pi);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("1.25"), 1.25);
  EXPECT_DOUBLE_EQ(*cli::parse_phase("0"), 0.0);
  EXPECT_FALSE(cli::parse_phase("pie"));
  EXPECT_FALSE(cli::parse_phase("pi/0"));
  EXPECT_FALSE(cli::parse_phase(""));
  EXPECT_FALSE(cli::parse_phase("1,5"));
}

TEST(Cli, AlgebraCheck) {
  const auto r = run_cli({"algebra-check", "--smax", "8", "--lmax", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_GT(lines.size(), 10u);
  EXPECT_EQ(lines[0], "relation,residual");
  for (std::size_t i = 1; i < lines.size(); ++i)
    EXPECT_LT(std::stod(lines[i].substr(lines[i].rfind(',') + 1)), 1e-12) << lines[i];
}

TEST(Cli, BgDensityShapeAndMetadata) {
  const auto r = run_cli({"bg-density", "--ell", "20", "--mod", "8", "--phase", "pi", "--rmax", "12", "--points", "600"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines.size(), 601u);
  EXPECT_EQ(lines[0], "r,density");
  EXPECT_EQ(lines.back().substr(0, 3), "12,");
  EXPECT_NE(r.out.find("# phase=pi\n"), std::string::npos);
  EXPECT_NE(r.out.find("# ell=20\n"), std::string::npos);
  EXPECT_NE(r.out.find("# version="), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"bg-evolve", "--mod", "2", "--points", "30", "--tau-points", "5"},
      {"per-density", "--mod", "0.5", "--phase", "0.5pi"},
      {"squeeze-map", "--group", "su2", "--n", "2", "--mod-max", "3", "--mod-points", "10", "--phase-points", "12"},
      {"state-dump", "--family", "su11p", "--label", "1", "--mod", "0.4", "--format", "json"},
  };
  for (const auto& c : cmds) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, JsonRoundTripIsIdempotent) {
  const std::vector<std::vector<std::string>> cmds = {
      {"per-evolve", "--mod", "0.5", "--points", "20", "--tau-points", "4", "--format", "json"},
      {"squeeze-map", "--group", "su11", "--ell", "0", "--mod-max", "0.9", "--mod-points", "4", "--phase-points", "4",
       "--format", "json"},
      {"su2-variances", "--n", "4", "--mod", "0.7", "--phase", "0.3", "--format", "json"},
      {"state-dump", "--family", "bg", "--label", "0", "--mod", "1", "--format", "json"},
  };
  for (const auto& c : cmds) {
    const auto r = run_cli(c);
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    EXPECT_EQ(json::parse(j.dump()).dump(), j.dump());
  }
}

TEST(Cli, SqueezeMapZones) {
  const auto r = run_cli({"squeeze-map", "--group", "su2", "--n", "2", "--mod-max", "3", "--mod-points", "61",
                          "--phase-points", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const GridResult g = grid_from_json(json::parse(r.out));
  ASSERT_EQ(g.rows(), 61u);
  ASSERT_EQ(g.cols(), 8u);
  const std::size_t i18 = 36;  // |z| = 1.8
  EXPECT_NEAR(g.row_axis.values[i18], 1.8, 1e-12);
  EXPECT_EQ(g.values[i18][0], 1.0);
  EXPECT_EQ(g.values[i18][2], 2.0);
  EXPECT_EQ(g.values[i18][1], 0.0);
  EXPECT_EQ(g.values[0][0], 3.0);
}

TEST(Cli, TransitionAndTurningPoints) {
  auto r = run_cli({"transition-prob", "--n", "4", "--mod", "1"});
  ASSERT_EQ(r.code, 0);
  auto lines = data_lines(r.out);
  EXPECT_EQ(lines[2], "1,2,0.5");
  r = run_cli({"turning-points", "--energy", "4", "--ell", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(data_lines(r.out)[1], "0,2");
}

TEST(Cli, DickeInfo) {
  const auto r = run_cli({"dicke-info", "--case", "D1", "--chi", "pi/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# j=1\n"), std::string::npos);
  EXPECT_EQ(data_lines(r.out).size(), 1u + 4u);
  EXPECT_EQ(run_cli({"dicke-info", "--case", "E4b"}).code, 2);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "radosc_cli_test.csv";
  const auto r = run_cli({"transition-prob", "--n", "2", "--mod", "0.5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run_cli({"transition-prob", "--n", "2", "--mod", "0.5"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  auto r = run_cli({"bg-density", "--bogus"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  r = run_cli({});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  r = run_cli({"bg-density", "--phase", "twopi"});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"per-density", "--mod", "1.2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  r = run_cli({"turning-points", "--energy", "1", "--ell", "1"});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"squeeze-map", "--group", "su11", "--mod-max", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, MaxTermsFromEnvironment) {
  ::setenv("RADOSC_MAX_TERMS", "5", 1);
  auto r = run_cli({"state-dump", "--family", "bg", "--mod", "8"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
  ::setenv("RADOSC_MAX_TERMS", "abc", 1);
  r = run_cli({"state-dump", "--family", "bg", "--mod", "1"});
  EXPECT_EQ(r.code, 1);
  ::setenv("RADOSC_MAX_TERMS", "200", 1);
  r = run_cli({"state-dump", "--family", "bg", "--mod", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# max_terms=200\n"), std::string::npos);
  ::unsetenv("RADOSC_MAX_TERMS");
}
