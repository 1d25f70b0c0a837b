#include "cli.hpp"
#include "walldiv/arith.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = walldiv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, WallTestSeed) {
  const auto r = run({"wall-test", "--epsilon", "0", "--k", "2", "--p", "2", "--delta", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["is_wall"].get<bool>());
  EXPECT_EQ(j["q_R"], "-5/2");
  EXPECT_EQ(j["t_gram"], json::array({-2, 1, 1, 2}));
  EXPECT_FALSE(j["witness"].is_null());
  EXPECT_EQ(j["branch"], "case_ii");
}

TEST(Cli, WallTestOracle) {
  const auto r = run({"wall-test", "--epsilon", "1", "--k", "3", "--p", "9", "--delta", "0", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["oracle"]["agrees"].get<bool>());
}

TEST(Cli, WallTestExplicitClass) {
  const auto r = run({"wall-test", "--epsilon", "0", "--k", "3", "--p", "4", "--class-l", "1", "--class-r", "-6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["q_R"], "-3/1");
  EXPECT_TRUE(j["is_wall"].get<bool>());
}

TEST(Cli, Exists) {
  const auto r = run({"exists", "--epsilon", "0", "--k", "2", "--p", "6", "--delta", "0"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["exists"].get<bool>());
  EXPECT_EQ(j["alpha"], 3);
}

TEST(Cli, Square) {
  const auto r = run({"square", "--epsilon", "0", "--k", "4", "--p", "8", "--delta", "1"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["q_R"], "-8/3");
  EXPECT_EQ(j["alternate"], "-8/3");
  EXPECT_FALSE(j["minimal"].get<bool>());
}

TEST(Cli, ClassCommand) {
  const auto r = run({"class", "--epsilon", "0", "--k", "3", "--p", "4", "--delta", "0"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["curve_class"]["r"], -6);
  EXPECT_EQ(j["primitive_d"]["e"], "-3/1");
  EXPECT_EQ(j["divisor_div"], 2);
}

TEST(Cli, ScanThm51AllConsistent) {
  const auto r = run({"scan", "--epsilon", "0", "--k", "2..4", "--p", "2..20", "--check", "thm51"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = lines(r.out);
  ASSERT_FALSE(recs.empty());
  std::tuple<int, int, int, int> prev{-1, -1, -1, -1};
  for (const auto& j : recs) {
    EXPECT_TRUE(j["consistent"].get<bool>()) << j.dump();
    const std::tuple<int, int, int, int> key{j["epsilon"], j["k"], j["p"], j["delta"]};
    EXPECT_LT(prev, key);
    prev = key;
  }
}

TEST(Cli, ScanIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> base{"scan", "--epsilon", "0..1", "--k", "2..3", "--p", "2..14", "--check", "oracle"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto many = base;
  many.insert(many.end(), {"--threads", "4"});
  const auto a = run(one), b = run(many);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("\"consistent\":false"), std::string::npos);
}

TEST(Cli, ScanOtherChecks) {
  for (const char* check : {"bound-equiv", "square-forms", "mbm", "mukai"}) {
    const auto r = run({"scan", "--epsilon", "0..1", "--k", "2..3", "--p", "2..12", "--check", check});
    ASSERT_EQ(r.code, 0) << check << r.err;
    EXPECT_EQ(r.out.find("\"consistent\":false"), std::string::npos) << check;
  }
}

TEST(Cli, ValidationErrors) {
  auto r = run({"wall-test", "--epsilon", "0", "--k", "2", "--p", "2", "--delta", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("0 <= delta <= p - 2eps"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"scan", "--epsilon", "0", "--k", "4..2", "--p", "2..3", "--check", "thm51"}).code, 2);
  EXPECT_EQ(run({"scan", "--epsilon", "0", "--k", "2..x", "--p", "2..3", "--check", "thm51"}).code, 2);
  EXPECT_EQ(run({"scan", "--epsilon", "0", "--k", "2", "--p", "2", "--check", "nope"}).code, 2);
  EXPECT_EQ(run({"exists", "--epsilon", "3", "--k", "2", "--p", "6", "--delta", "0"}).code, 2);
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(walldiv::cli::parse_range("3").lo, 3);
  EXPECT_EQ(walldiv::cli::parse_range("2..9").hi, 9);
  EXPECT_THROW(walldiv::cli::parse_range("9..2"), walldiv::DomainError);
  EXPECT_THROW(walldiv::cli::parse_range(".."), walldiv::DomainError);
}

TEST(Cli, CatalogHonoursOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "walldiv_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv(walldiv::cli::output_dir_env, dir.c_str(), 1);
  const auto r = run({"catalog", "--epsilon", "0", "--k", "3", "--p", "2..4", "--delta-max", "3", "--output", "c.jsonl"});
  ::unsetenv(walldiv::cli::output_dir_env);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "c.jsonl");
  ASSERT_TRUE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto recs = lines(buf.str());
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs[0]["gram"], json::array({-2, 2, 2, 4}));
  std::filesystem::remove_all(dir);
}

TEST(Cli, LagrangianAndCoisotropic) {
  auto r = run({"lagrangian", "--epsilon", "0", "--k", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["q_line"], "-3/1");
  r = run({"coisotropic", "--epsilon", "0", "--k", "4", "--p", "8", "--delta", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["projbundle"]["codim"], 3);
}

TEST(Cli, RationalsRoundTrip) {
  const auto r = run({"scan", "--epsilon", "0..1", "--k", "2..5", "--p", "2..15", "--check", "square-forms"});
  for (const auto& j : lines(r.out)) {
    const std::string s = j["q_R"];
    EXPECT_EQ(walldiv::to_fraction_string(walldiv::parse_rational(s)), s);
  }
}
