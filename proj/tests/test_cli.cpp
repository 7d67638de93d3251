#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "elastica_cli/cli.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using elastica::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "elastica");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("elastica_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, Thresholds) {
  const auto r = call({"thresholds"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["q_hat"].get<double>(), oracle::reference::q_hat, 5e-5);
  EXPECT_NEAR(j["lambda_hat"].get<double>(), oracle::reference::lambda_hat, 5e-5);
  EXPECT_NEAR(j["q_star"].get<double>(), oracle::reference::q_star, 5e-5);
  EXPECT_NEAR(j["h_star"].get<double>(), oracle::reference::h_star, 5e-5);
}

TEST_F(CliTest, ConstructRectSvgWithCsv) {
  const auto svg = path("fig.svg");
  ASSERT_EQ(call({"construct", "--family", "rect", "--svg", svg}).code, 0);
  ASSERT_TRUE(fs::exists(svg));
  ASSERT_TRUE(fs::exists(path("fig.csv")));
  std::ifstream csv(path("fig.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "s,x,y,k");
  double ymax = 0.0;
  while (std::getline(csv, line)) {
    std::stringstream ss(line);
    std::string f[4];
    for (auto& v : f) std::getline(ss, v, ',');
    ymax = std::max(ymax, std::stod(f[2]));
  }
  EXPECT_NEAR(ymax, 0.8346, 1e-4);
  EXPECT_NE(slurp(svg).find("<path"), std::string::npos);
}

TEST_F(CliTest, ConstructToStdoutAndBadFamily) {
  const auto r = call({"construct", "--family", "larc", "--lambda", "0.35", "-N", "16"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);
  EXPECT_EQ(call({"construct", "--family", "spiral"}).code, 2);
  EXPECT_EQ(call({"construct", "--family", "larc", "--lambda", "2", "--n", "1"}).code, 2);
}

TEST_F(CliTest, ConstructWithRhombObstacleOverlay) {
  const auto svg = path("scf.svg");
  const auto obs = R"({"kind":"cone","height":0.5,"mode":"rhomb"})";
  ASSERT_EQ(call({"construct", "--family", "scf", "--height", "0.5", "--obstacle", obs, "--svg", svg}).code, 0);
  EXPECT_NE(slurp(svg).find("<polygon"), std::string::npos);
}

TEST_F(CliTest, EnergyTable) {
  const auto r = call({"energy-table", "--lambdas", "0.2,0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("lambda,family,n,q,alpha,bending,length,energy\n", 0), 0u);
  EXPECT_NE(r.out.find("0.2,larc,1,"), std::string::npos);
  EXPECT_NE(r.out.find("0.5,leaf,2,"), std::string::npos);
}

TEST_F(CliTest, MinimizeTouchingReportIsReproducible) {
  const auto a = path("a.json"), b = path("b.json"), csv = path("c.csv");
  ASSERT_EQ(call({"minimize", "--obstacle", "cone:0.3", "--lambda", "2", "-N", "64", "--report", a, "--out", csv}).code, 0);
  ASSERT_EQ(call({"minimize", "--obstacle", "cone:0.3", "--lambda", "2", "-N", "64", "--report", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = json::parse(slurp(a));
  EXPECT_EQ(j["verdict"], "Touching");
  EXPECT_EQ(j["segments"], 64);
  EXPECT_TRUE(j["coincidence"]["touching"].get<bool>());
  EXPECT_EQ(slurp(csv).rfind("s,x,y,theta,k\n", 0), 0u);
  // Twelve significant digits at most.
  const std::regex long_number(R"([0-9]\.?[0-9]{13,})");
  EXPECT_FALSE(std::regex_search(slurp(a), long_number));
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("ELASTICA_SEED", "17", 1);
  EXPECT_EQ(elastica::cli::default_seed(), 17u);
  const auto r = call({"minimize", "--obstacle", "cone:0.3", "--lambda", "1", "-N", "32", "--multistarts", "2"});
  ::unsetenv("ELASTICA_SEED");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["seed"], 17);
  EXPECT_EQ(elastica::cli::default_seed(), 0u);
}

TEST_F(CliTest, DomainErrorsExitTwo) {
  auto r = call({"minimize", "--obstacle", "cone:0.3", "--lambda", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("lambda"), std::string::npos);
  EXPECT_EQ(call({"minimize", "--obstacle", "cone:0.2:0.3", "--lambda", "1"}).code, 2);
  EXPECT_EQ(call({"minimize", "--obstacle", "pyramid", "--lambda", "1"}).code, 2);
  EXPECT_EQ(call({"sweep", "--obstacle", "cone:0.3", "--lambdas", "0.1:0.1:5"}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
}

TEST_F(CliTest, IndeterminateExitsThree) {
  const auto r = call({"minimize", "--obstacle", "cone:0.3", "--lambda", "1", "-N", "64", "--multistarts", "1",
                       "--max-iterations", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["verdict"], "Indeterminate");
}

TEST_F(CliTest, ObstacleFromFile) {
  const auto f = path("o.json");
  std::ofstream(f) << R"({"kind":"lipschitz","nodes":[[0,-0.2],[0.5,0.2],[1,-0.2]],"lipschitz":0.8})";
  const auto o = elastica::cli::parse_obstacle(f);
  EXPECT_FALSE(o.is_cone());
  EXPECT_NEAR(o.peak_height(), 0.2, 1e-15);
}

TEST_F(CliTest, GridParsing) {
  const auto g = elastica::cli::parse_grid("0.02:0.05:1.4");
  ASSERT_EQ(g.size(), 28u);
  EXPECT_NEAR(g.back(), 1.37, 1e-12);
  EXPECT_EQ(elastica::cli::parse_grid("0.1,0.2").size(), 2u);
  EXPECT_THROW(elastica::cli::parse_grid("1:0:2"), std::invalid_argument);
  EXPECT_THROW(elastica::cli::parse_grid("a,b"), std::invalid_argument);
}

TEST_F(CliTest, SweepWritesCsv) {
  const auto csv = path("s.csv");
  const auto r = call({"sweep", "--obstacle", "cone:0.3", "--lambdas", "0.05,1.0", "-N", "64", "--out", csv});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 2u);
  EXPECT_TRUE(j["monotone"].get<bool>());
  EXPECT_NE(slurp(csv).find("Touching"), std::string::npos);
}

TEST_F(CliTest, ScfProbeAndViCheck) {
  auto r = call({"scf-probe", "--height", "0.3", "-N", "512"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)[0]["verdict"], "LocalMin-consistent");
  r = call({"vi-check", "--height", "1.5", "-N", "512"});
  ASSERT_EQ(r.code, 0);
  EXPECT_LT(json::parse(r.out)[0]["pairing"].get<double>(), 0.0);
  EXPECT_EQ(call({"scf-probe", "--height", "-1"}).code, 2);
}

TEST_F(CliTest, DropCheck) {
  const auto r = call({"drop-check", "--trials", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["lambda"].get<double>(), 1.0);
}
