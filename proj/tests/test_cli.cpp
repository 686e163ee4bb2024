#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qcoh/cli.hpp"
#include "qcoh/config.hpp"
#include "qcoh/errors.hpp"
#include "table1.hpp"

using namespace qcoh;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) { return std::string(::testing::TempDir()) + name; }

}  // namespace

TEST(Cli, QprodExamples) {
  EXPECT_EQ(run({"qprod", "A2", "--u", "1", "--v", "1,2,1"}).out, "q1*q2 + q1*s[1,2]\n");
  EXPECT_EQ(run({"qprod", "--system", "A2", "--u", "", "--v", "1"}).out, "s[1]\n");
  EXPECT_EQ(run({"qprod", "A2", "--u", "1,2", "--v", "2,1"}).out, "q1*q2\n");
}

TEST(Cli, QprodJsonParses) {
  CliRun r = run({"qprod", "A2", "--u", "1", "--v", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["product"].size(), 2u);
  EXPECT_EQ(j["product"][0]["q"], (std::vector<int>{1, 0}));
  EXPECT_EQ(j["product"][0]["coeff"], "1");
  EXPECT_EQ(j["product"][1]["word"], (std::vector<int>{2, 1}));
}

TEST(Cli, NonReducedWordWarns) {
  CliRun r = run({"qprod", "A2", "--u", "1,1", "--v", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s[2]\n");
  EXPECT_NE(r.err.find("not reduced"), std::string::npos);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run({"qprod", "A2", "--u", "3", "--v", "1"}).code, 2);
  EXPECT_EQ(run({"qprod", "Q2", "--u", "1", "--v", "1"}).code, 2);
  EXPECT_EQ(run({"qprod", "A2", "--u", "1"}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"verify", "A2", "--parabolic", "1", "--suites", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "A2"}).code, 2);
  EXPECT_EQ(run({"qprod", "A2", "--u", "1", "--v", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"mult-table", "E6"}).code, 2);
  EXPECT_EQ(run({"grading-table", "A2", "--parabolic", "1", "--row-min", "-1000", "--row-max", "1000",
                 "--col-max", "1000"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, GradingTableMatchesTable) {
  CliRun r = run({"grading-table", "A2", "--parabolic", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "i,0,1,2,3,4,5,6");
  for (int i = 0; i < 7; ++i) {
    std::getline(in, line);
    std::string want = std::to_string(4 - i);
    for (const char* cell : table1::kCells[i]) {
      std::string c = cell;
      want += "," + (c.find(',') == std::string::npos ? c : "\"" + c + "\"");
    }
    EXPECT_EQ(line, want);
  }
  CliRun empty = run({"grading-table", "A2", "--parabolic", "1", "--row-min", "3", "--row-max", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(empty.out)["cells"].size(), 0u);
}

TEST(Cli, PwLift) {
  CliRun r = run({"pw", "A2", "--parabolic", "1", "--lambda", "2:1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lambda_B = a2^v\nDelta_P' = {}\nomega_P omega_P' = s[1]\n");
  CliRun zero = run({"pw", "A2", "--parabolic", "1", "--format", "json"});
  auto j = nlohmann::json::parse(zero.out);
  EXPECT_EQ(j["lambda_B"], (std::vector<int>{0, 0}));
  EXPECT_EQ(j["omega_factor"].size(), 0u);
  CliRun js = run({"pw", "B3", "--parabolic", "1,2", "--lambda", "{\"3\": 1}", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(js.out)["lambda_B"], (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(run({"pw", "A2", "--parabolic", "1", "--lambda", "5:1"}).code, 2);
}

TEST(Cli, QhpProjectivePlane) {
  CliRun r = run({"qhp", "A2", "--parabolic", "2", "--u", "1", "--v", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q1\n");
  EXPECT_EQ(run({"qhp", "A2", "--parabolic", "2", "--u", "2", "--v", "1"}).code, 2);
}

TEST(Cli, MultTableRows) {
  CliRun r = run({"mult-table", "A2", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["products"].size(), 21u);
}

TEST(Cli, VerifyWritesReport) {
  const std::string path = temp_path("qcoh_verify.json");
  CliRun r = run({"verify", "A2", "--parabolic", "1", "--suites", "all", "--out", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 8u);
  std::remove(path.c_str());
  EXPECT_EQ(run({"verify", "B3", "--parabolic", "1,2", "--suites", "key-lemma"}).code, 0);
}

TEST(Cli, ConfigFileAndOverrides) {
  const std::string path = temp_path("qcoh.cfg");
  {
    std::ofstream f(path);
    f << "# test\nsystem=A2\nparabolic = 1\nformat=json\n";
  }
  CliRun r = run({"qprod", "--config", path, "--u", "1", "--v", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
  CliRun over = run({"qprod", "--config", path, "--format", "markdown", "--u", "1", "--v", "2"});
  EXPECT_EQ(over.out, "s[1,2] + s[2,1]\n");
  {
    std::ofstream f(path);
    f << "sytem=A2\n";
  }
  CliRun bad = run({"qprod", "--config", path, "--u", "1", "--v", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("sytem"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Config, RoundTrip) {
  RunConfig c;
  c.system = "B3";
  c.parabolic = "1,2";
  c.order = "2,1";
  c.format = "csv";
  c.out = "/tmp/x.csv";
  c.max_q = 4;
  c.max_weyl = 1500;
  c.seed = 7;
  c.suites = "filtration,basics";
  EXPECT_EQ(parse_config(emit_config(c)), c);
  EXPECT_EQ(parse_config(emit_config(RunConfig{})), RunConfig{});
}

TEST(Config, NamesOffendingField) {
  try {
    parse_config("max_q = many\n");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("max_q"), std::string::npos);
  }
  EXPECT_THROW(parse_config("seed\n"), InvalidInput);
  EXPECT_THROW(parse_config("max_q = -1\n"), InvalidInput);
}
