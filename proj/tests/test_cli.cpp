#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lightspan/cli.hpp"

using namespace lightspan;
using namespace lightspan::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lightspan_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run_config(const RunConfig& c) {
    out_.str("");
    err_.str("");
    return run(c, out_, err_);
  }

  RunConfig config(Command command) const {
    RunConfig c;
    c.command = command;
    c.output_dir = dir_;
    c.input = dir_ / "graph.edges";
    c.spanner = dir_ / "spanner.json";
    return c;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(CliTest, PathGenBuildVerify) {
  auto gen = config(Command::gen);
  gen.family = GraphFamily::path;
  gen.generator.n = 5;
  ASSERT_EQ(run_config(gen), 0) << err_.str();
  ASSERT_TRUE(fs::exists(dir_ / "graph.edges"));

  auto build = config(Command::build);
  build.k = 1;
  ASSERT_EQ(run_config(build), 0) << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "spanner.json"));
  EXPECT_TRUE(fs::exists(dir_ / "spanner.edges"));

  auto verify = config(Command::verify);
  verify.lemmas = true;
  EXPECT_EQ(run_config(verify), 0) << err_.str();
  const auto stretch = nlohmann::json::parse(slurp(dir_ / "stretch.json"));
  EXPECT_TRUE(stretch.at("passed").get<bool>());
  EXPECT_EQ(stretch.at("pairs_checked").get<int>(), 10);
  EXPECT_TRUE(fs::exists(dir_ / "lightness.json"));
  EXPECT_TRUE(nlohmann::json::parse(slurp(dir_ / "lemmas.json")).at("passed").get<bool>());
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  auto gen = config(Command::gen);
  gen.generator.n = 120;
  gen.seed = 3;
  ASSERT_EQ(run_config(gen), 0);
  auto build = config(Command::build);
  build.seed = 5;
  ASSERT_EQ(run_config(build), 0);
  const std::string first = slurp(dir_ / "spanner.json");
  auto verify = config(Command::verify);
  ASSERT_EQ(run_config(verify), 0) << err_.str();
  const std::string report = slurp(dir_ / "stretch.json");
  ASSERT_EQ(run_config(build), 0);
  ASSERT_EQ(run_config(verify), 0);
  EXPECT_EQ(slurp(dir_ / "spanner.json"), first);
  EXPECT_EQ(slurp(dir_ / "stretch.json"), report);
  auto inspect = config(Command::inspect);
  ASSERT_EQ(run_config(inspect), 0);
  const std::string h = slurp(dir_ / "hierarchy.json");
  ASSERT_EQ(run_config(inspect), 0);
  EXPECT_EQ(slurp(dir_ / "hierarchy.json"), h);
}

TEST_F(CliTest, TamperedSpannerFailsVerification) {
  auto gen = config(Command::gen);
  gen.generator.n = 60;
  ASSERT_EQ(run_config(gen), 0);
  ASSERT_EQ(run_config(config(Command::build)), 0);
  auto j = nlohmann::json::parse(slurp(dir_ / "spanner.json"));
  // Keep a single edge: the spanner disconnects and distances become infinite.
  j["edges"] = nlohmann::json::array({j["edges"][0]});
  std::ofstream(dir_ / "spanner.json") << j.dump();
  EXPECT_EQ(run_config(config(Command::verify)), 1);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, ErrorsNameStageAndEchoConfig) {
  auto build = config(Command::build);
  build.input = dir_ / "missing.edges";
  EXPECT_EQ(run_config(build), 2);
  EXPECT_NE(err_.str().find("stage read_graph"), std::string::npos);
  EXPECT_NE(err_.str().find("eps=0.05"), std::string::npos);

  std::ofstream(dir_ / "graph.edges") << "3\n0 1 1\n1 2 -4\n";
  EXPECT_EQ(run_config(config(Command::build)), 2);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos);

  auto bad_eps = config(Command::build);
  bad_eps.eps = 0.1;
  EXPECT_EQ(run_config(bad_eps), 2);
  EXPECT_NE(err_.str().find("stage config"), std::string::npos);
  EXPECT_THROW(validate(bad_eps), ParameterError);
  bad_eps.unsafe_eps = true;
  EXPECT_NO_THROW(validate(bad_eps));

  auto bad_k = config(Command::build);
  bad_k.k = 0;
  EXPECT_THROW(validate(bad_k), ParameterError);
  EXPECT_THROW(parse_report_format("yaml"), ParameterError);
}

TEST_F(CliTest, SweepWritesOneRowPerCell) {
  auto sweep = config(Command::sweep);
  sweep.sweep_n = {48, 96};
  sweep.sweep_k = {2, 3};
  sweep.sweep_eps = {0.05};
  sweep.sweep_seeds = 2;
  ASSERT_EQ(run_config(sweep), 0) << err_.str();
  std::istringstream csv(slurp(dir_ / "sweep.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "# lightspan-sweep/1");
  std::getline(csv, line);
  EXPECT_EQ(line, "n,k,eps,seed,size,lightness,worst_mult,worst_slack,bound,runtime_ms");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 8);
}

TEST_F(CliTest, DimacsRoundTripBuild) {
  auto gen = config(Command::gen);
  gen.family = GraphFamily::erdos_renyi;
  gen.generator = {.n = 80, .p = 0.08, .min_weight = 1, .max_weight = 100};
  gen.graph_format = GraphFormat::dimacs;
  ASSERT_EQ(run_config(gen), 0) << err_.str();
  auto build = config(Command::build);
  build.input = dir_ / "graph.dimacs";
  build.graph_format = GraphFormat::dimacs;
  ASSERT_EQ(run_config(build), 0) << err_.str();
  auto verify = config(Command::verify);
  verify.input = build.input;
  verify.graph_format = GraphFormat::dimacs;
  EXPECT_EQ(run_config(verify), 0) << err_.str();
}

TEST_F(CliTest, WmaxOnHeavyPendant) {
  // Unit path on 0..15 and vertex 16 hung on an edge of weight 16: normalized W_max is 8.8 > sqrt(17).
  {
    std::ofstream f(dir_ / "graph.dimacs");
    f << "c heavy pendant\np sp 17 16\n";
    for (int i = 1; i <= 15; ++i) f << "a " << i << ' ' << i + 1 << " 1\n";
    f << "a 1 17 16\n";
  }
  auto build = config(Command::build_wmax);
  build.input = dir_ / "graph.dimacs";
  build.graph_format = GraphFormat::dimacs;
  ASSERT_EQ(run_config(build), 0) << err_.str();
  auto verify = config(Command::verify);
  verify.input = build.input;
  verify.graph_format = GraphFormat::dimacs;
  EXPECT_EQ(run_config(verify), 0) << err_.str();
  EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "stretch.json")).at("additive_scale"), "W_max");

  // Random weights in [1, 100] leave W_max far below sqrt(n) after normalization.
  auto gen = config(Command::gen);
  gen.family = GraphFamily::erdos_renyi;
  gen.generator = {.n = 80, .p = 0.08, .min_weight = 1, .max_weight = 100};
  ASSERT_EQ(run_config(gen), 0);
  EXPECT_EQ(run_config(config(Command::build_wmax)), 2);
}
