#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using divgraph::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, InfoForThirtySix) {
  const auto r = invoke({"info", "--n", "36"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["v"], 9);
  EXPECT_EQ(j["e"], 27);
  EXPECT_EQ(j["clique"], 5);
  EXPECT_EQ(j["planar"], false);
  EXPECT_EQ(j["type"], json::array({2, 2}));
}

TEST(Cli, NAndTypeAgree) {
  const auto a = invoke({"spectrum", "--n", "30", "--lambda", "-2,-1,0,1"});
  const auto b = invoke({"spectrum", "--type", "1,1,1", "--lambda", "-2,-1,0,1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["det"], "-20");
  EXPECT_EQ(j["multiplicities"]["-2"], 2);
  EXPECT_EQ(j["multiplicities"]["-1"], 3);
  EXPECT_EQ(j["multiplicities"]["1"], 2);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"spectrum", "--type", "2,2,1", "--seed", "7"},
        std::vector<std::string>{"info", "--n", "720"}, std::vector<std::string>{"charpoly", "--n", "210"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, Charpoly) {
  const auto r = invoke({"charpoly", "--n", "6"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["text"], "x^4 - 5x^2 - 4x");
  EXPECT_EQ(j["charpoly"], json::array({"0", "-4", "-5", "0", "1"}));
}

TEST(Cli, TableCsv) {
  const auto r = invoke({"table", "--lambda", "0", "--omega-max", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "omega,m_0\n2,1\n3,0\n4,2\n5,0\n6,5\n");
}

TEST(Cli, Verify) {
  for (const char* check : {"thm-main", "minus-one"}) EXPECT_EQ(invoke({"verify", check, "--type", "1,2"}).code, 0);
  EXPECT_EQ(invoke({"verify", "mobius", "--n", "30"}).code, 0);
  EXPECT_EQ(invoke({"verify", "kernel-pq", "--type", "7,7"}).code, 0);
  EXPECT_EQ(invoke({"verify", "det-period"}).code, 0);
}

TEST(Cli, Export) {
  const auto dot = invoke({"export", "--n", "6", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph D {", 0), 0u);
  const auto js = invoke({"export", "--n", "12", "--format", "json"});
  ASSERT_EQ(js.code, 0);
  EXPECT_TRUE(json::accept(js.out));
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "divgraph_cli_test.json";
  ASSERT_EQ(invoke({"info", "--n", "12", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  const auto j = json::parse(in);
  EXPECT_EQ(j["v"], 6);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"info", "--n", "36", "--type", "2,2"}).code, 2);
  EXPECT_EQ(invoke({"info"}).code, 2);
  EXPECT_EQ(invoke({"info", "--n", "0"}).code, 2);
  EXPECT_EQ(invoke({"info", "--type", "1,x"}).code, 2);
  EXPECT_EQ(invoke({"verify", "thm-main2", "--type", "2"}).code, 2);
  EXPECT_EQ(invoke({"verify", "no-such-check"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"info", "--n", "6", "--format", "csv"}).code, 2);
}

TEST(Cli, GuardFromEnvironment) {
  ::setenv("DIVGRAPH_MAX_VERTICES", "16", 1);
  const auto refused = invoke({"spectrum", "--type", "1,1,1,1,1"});
  const auto allowed = invoke({"spectrum", "--type", "1,1,1"});
  ::unsetenv("DIVGRAPH_MAX_VERTICES");
  EXPECT_EQ(refused.code, 3);
  EXPECT_EQ(allowed.code, 0);
}
