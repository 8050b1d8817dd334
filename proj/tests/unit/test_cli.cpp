#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace arithdyn;
using arithdyn::testing::fixture;
using arithdyn::testing::henon_ab;
using arithdyn::testing::pt;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "arithdyn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(CliParse, Bounds) {
  EXPECT_DOUBLE_EQ(cli::parse_bound("10"), 10.0);
  EXPECT_DOUBLE_EQ(cli::parse_bound("log(2)"), std::log(2.0));
  EXPECT_DOUBLE_EQ(cli::parse_bound(" log(1/2) "), std::log(0.5));
  EXPECT_THROW(cli::parse_bound("ten"), std::invalid_argument);
  EXPECT_THROW(cli::parse_bound("-1"), std::invalid_argument);
  EXPECT_THROW(cli::parse_bound("log(0)"), std::invalid_argument);
  EXPECT_EQ(cli::parse_schedule("6, 8,10").size(), 3u);
  EXPECT_THROW(cli::parse_schedule("8, 6"), std::invalid_argument);
  EXPECT_THROW(cli::parse_schedule("8, 8"), std::invalid_argument);
  EXPECT_EQ(cli::format_real(std::log(10.0)), "2.30258509299");
  EXPECT_EQ(cli::format_real(8), "8");
}

TEST(CliCount, MatchesExhaustiveOracle) {
  const auto r = run_cli({"count", "--map", "henon", "--point", "1, 1", "--B", "6, 8, 10, 12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "B,count,n_backward_max,n_forward_max,truncated_backward,truncated_forward");
  const auto h = henon_ab(1, 1);
  const double bounds[] = {6, 8, 10, 12};
  for (int i = 0; i < 4; ++i) {
    const auto expected = oracle::exhaustive_count(h, pt("1, 1"), bounds[i], 64);
    EXPECT_EQ(ls[i + 1].substr(0, ls[i + 1].find(',', ls[i + 1].find(',') + 1)),
              cli::format_real(bounds[i]) + "," + std::to_string(expected));
  }
}

TEST(CliCount, ZeroBoundGivesEmptyRow) {
  const auto r = run_cli({"count", "--map", "henon", "--point", "100, 200", "--B", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[1].substr(0, 4), "0,0,");
}

TEST(CliCount, AnickGrowsSuperpolynomially) {
  const auto r = run_cli({"count", "--map", "anick", "--point", "1,1,1,1", "--B", "3,4,5", "--horizon", "400",
                          "--exhaustive"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  std::vector<double> n;
  for (int i = 1; i <= 3; ++i) n.push_back(std::stod(ls[i].substr(ls[i].find(',') + 1)));
  const auto f = catalog("anick");
  EXPECT_EQ(n[0], static_cast<double>(oracle::exhaustive_count(f, pt("1,1,1,1"), 3, 400)));
  EXPECT_EQ(n[2], static_cast<double>(oracle::exhaustive_count(f, pt("1,1,1,1"), 5, 400)));
  // ratios N(B+1)/N(B) near e, far above any polynomial rate at this scale
  EXPECT_GT(n[2] / n[1], 2.0);
  EXPECT_GT(n[1] / n[0], 2.0);
}

TEST(CliExitCodes, ExperimentFailures) {
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--param", "a=2", "--param", "p=x^2", "--point", "0,0", "--B", "3"}).code,
            1);
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--point", "1,1", "--B", "40", "--bit-budget", "32"}).code, 1);
  EXPECT_EQ(run_cli({"map", "validate", "--map-file", fixture("maps/henon_bad_inverse.map")}).code, 1);
  const auto fit = run_cli({"fit-alpha", "--map", "henon", "--alpha", "2.5", "--strata", "30"});
  EXPECT_EQ(fit.code, 1);
  EXPECT_NE(fit.err.find("estimate"), std::string::npos);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--point", "1,1"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "nosuch", "--point", "1,1", "--B", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--point", "1,1,1", "--B", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--point", "1,x", "--B", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "triangular", "--point", "1,0", "--B", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--map", "henon", "--param", "p", "--point", "1,1", "--B", "3"}).code, 2);
  EXPECT_EQ(run_cli({"map", "show", "--map-file", fixture("maps/henon_bad_inverse.map")}).code, 2);
  EXPECT_EQ(run_cli({"cone", "--file", fixture("cones/missing.res")}).code, 2);
  EXPECT_EQ(run_cli({"reproduce", "no-such-table"}).code, 2);
  EXPECT_EQ(run_cli({"--window", "0", "count", "--map", "henon", "--point", "1,1", "--B", "3"}).code, 2);
}

TEST(CliExitCodes, HelpIsSuccess) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reproduce"), std::string::npos);
}

TEST(CliOutput, ByteIdenticalReruns) {
  const std::vector<std::vector<std::string>> commands{
      {"count", "--map", "nagata_twisted", "--point", "1,1,1", "--B", "8,10,12,14"},
      {"iterate", "--map", "henon", "--point", "1/2, 3", "--from", "-3", "--to", "3"},
      {"periodic", "--map", "rotation", "--B", "log(2)", "--max-period", "4"},
      {"fit-alpha", "--map", "henon", "--alpha", "2, 2.5", "--strata", "1, 2"},
      {"reproduce", "indices"},
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out.find('\r'), std::string::npos);
    EXPECT_EQ(a.out.back(), '\n');
  }
}

TEST(CliOutput, GlobalFlagsAnywhereAndOutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "arithdyn_cli_out.csv").string();
  const auto before = run_cli({"--window", "3", "count", "--map", "henon", "--point", "1,1", "--B", "8"});
  const auto after = run_cli({"count", "--map", "henon", "--point", "1,1", "--B", "8", "--window", "3", "--out", path});
  ASSERT_EQ(after.code, 0) << after.err;
  EXPECT_TRUE(after.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), before.out);
  std::filesystem::remove(path);
}

TEST(CliCommands, IterateHeightDegseq) {
  const auto it = run_cli({"iterate", "--map", "henon", "--point", "0,0", "--to", "1"});
  EXPECT_EQ(it.out, "n,x,y,height\n0,0,0,0\n1,0,1,0\n");
  const auto h = run_cli({"height", "--point", "3/2, 5"});
  EXPECT_EQ(h.out, "size,height\n10,2.30258509299\n");
  const auto d = run_cli({"degseq", "--map", "henon", "--n", "4"});
  EXPECT_EQ(d.out, "n,degree\n1,2\n2,4\n3,8\n4,16\n");
  const auto n = run_cli({"iterate", "--map-file", fixture("maps/nagata_twisted.map"), "--point", "1,1,0", "--to", "1"});
  EXPECT_EQ(lines(n.out)[0], "n,X,Y,Z,height");
}

TEST(CliCommands, PeriodicHenon) {
  const auto r = run_cli({"periodic", "--map", "henon", "--param", "a=2", "--param", "p=x^2", "--B", "log(2)",
                          "--max-period", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "period,x,y\n1,-1,-1\n1,0,0\n");
}

TEST(CliCommands, MapListShowValidate) {
  const auto list = run_cli({"map", "list"});
  EXPECT_NE(list.out.find("nagata_twisted"), std::string::npos);
  const auto show = run_cli({"map", "show", "--map", "henon"});
  std::ifstream in(fixture("maps/henon.map"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(show.out, ss.str());
  EXPECT_EQ(run_cli({"map", "validate", "--map", "anick"}).out, "ok\n");
}

TEST(CliCommands, Cone) {
  const auto r = run_cli({"cone", "--file", fixture("cones/synthetic_rank2.res")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha_max_eff: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("alpha_max_nef: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("eff_certificate_verified: true"), std::string::npos);
  const auto inf = run_cli({"cone", "--file", fixture("cones/infeasible.res")});
  EXPECT_NE(inf.out.find("alpha_max_eff: -inf"), std::string::npos);
  EXPECT_NE(inf.out.find("alpha_max_nef: -inf"), std::string::npos);
  const auto b = run_cli({"cone", "--file", fixture("cones/rank1_d2.res"), "--delta", "2", "--delta-inv", "2"});
  EXPECT_NE(b.out.find("consistent: false"), std::string::npos);
}

TEST(CliReproduce, HenonFamilyPasses) {
  const auto r = run_cli({"reproduce", "henon-family"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(CliReproduce, IndicesExact) {
  const auto r = run_cli({"reproduce", "indices"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5/2"), std::string::npos);
  EXPECT_NE(r.out.find("17/4"), std::string::npos);
}

TEST(CliReproduce, TightBandFailsWithExitOne) {
  const auto r = run_cli({"--band", "0.001", "reproduce", "nagata"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(",false"), std::string::npos);
}
