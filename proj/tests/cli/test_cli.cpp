#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "graphfb/graph.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = GRAPHFB_CLI_PATH;
const fs::path kGolden = GRAPHFB_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("graphfb_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path tmp(const std::string& name) const { return dir_ / name; }

  // Runs the CLI with stdout captured into out_ and stderr into err_.
  int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " > " + tmp("stdout").string() + " 2> " +
                            tmp("stderr").string();
    const int status = std::system(cmd.c_str());
    out_ = slurp(tmp("stdout"));
    err_ = slurp(tmp("stderr"));
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string golden(const std::string& name) const { return (kGolden / name).string(); }

  fs::path dir_;
  std::string out_, err_;
};

TEST_F(Cli, RingMatchesGolden) {
  ASSERT_EQ(run("gen ring 5"), 0);
  EXPECT_EQ(out_, slurp(golden("ring5.graph")));
}

TEST_F(Cli, StepSignalMatchesGolden) {
  ASSERT_EQ(run("signal step 3"), 0);
  EXPECT_EQ(out_, slurp(golden("step3.signal")));
}

TEST_F(Cli, SensorGenerationIsDeterministic) {
  ASSERT_EQ(run("gen sensor 60 --seed 4 --radius 0.3"), 0);
  const std::string first = out_;
  ASSERT_EQ(run("gen sensor 60 --seed 4 --radius 0.3"), 0);
  EXPECT_EQ(out_, first);
  ASSERT_EQ(run("gen sensor 60 --seed 5 --radius 0.3"), 0);
  EXPECT_NE(out_, first);
}

TEST_F(Cli, IdealDesignOnFourVertexGraph) {
  ASSERT_EQ(run("design -g " + golden("four_vertex.graph") + " --design ideal"), 0);
  const auto j = nlohmann::json::parse(out_);
  const std::vector<double> lambda = j.at("eigenvalues");
  const std::vector<double> expected_lambda = {0, 4, 5, 7};
  ASSERT_EQ(lambda.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(lambda[i], expected_lambda[i], 1e-9);
  const std::vector<double> h0 = j.at("h0");
  const double r2 = std::sqrt(2.0);
  const std::vector<double> expected_h0 = {r2, r2, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(h0[i], expected_h0[i], 1e-12);
  EXPECT_EQ(j.at("kind"), "orthogonal");
}

TEST_F(Cli, AnalyzeSynthesizeRoundTrip) {
  ASSERT_EQ(run("gen ring 64 -o " + tmp("g").string()), 0);
  ASSERT_EQ(run("signal random 64 --seed 3 -o " + tmp("x").string()), 0);
  ASSERT_EQ(run("analyze -g " + tmp("g").string() + " -s " + tmp("x").string() +
                " --design local --depth 2 -o " + tmp("c").string()),
            0);
  const std::string coeffs = slurp(tmp("c"));
  EXPECT_EQ(coeffs.rfind("graphfb-coeffs v1 2 16 16 32\n", 0), 0u) << coeffs.substr(0, 40);
  ASSERT_EQ(run("synthesize -g " + tmp("g").string() + " -c " + tmp("c").string() +
                " --design local -o " + tmp("y").string()),
            0);
  const auto x = graphfb::read_signal(tmp("x"));
  const auto y = graphfb::read_signal(tmp("y"));
  ASSERT_EQ(x.size(), y.size());
  EXPECT_LE((x - y).norm() / x.norm(), 1e-9);

  ASSERT_EQ(run("metrics " + tmp("x").string() + " " + tmp("y").string()), 0);
  const auto j = nlohmann::json::parse(out_);
  EXPECT_LE(j.at("re").get<double>(), 1e-9);
}

TEST_F(Cli, MetricsAgainstHandValues) {
  ASSERT_EQ(run("metrics " + golden("ramp3.signal") + " " + golden("ramp3_perturbed.signal")), 0);
  const auto j = nlohmann::json::parse(out_);
  // |(0,0,1)| / |(1,2,3)| = 1/sqrt(14).
  EXPECT_NEAR(j.at("re").get<double>(), 1.0 / std::sqrt(14.0), 1e-14);
  EXPECT_NEAR(j.at("snr").get<double>(), 10.0 * std::log10(14.0), 1e-12);

  ASSERT_EQ(run("metrics --format csv " + golden("ramp3.signal") + " " +
                golden("ramp3_perturbed.signal")),
            0);
  EXPECT_EQ(out_.rfind("metric,value\n", 0), 0u);
}

TEST_F(Cli, MetricsOnIdenticalSignals) {
  ASSERT_EQ(run("metrics " + golden("ramp3.signal") + " " + golden("ramp3.signal")), 0);
  const auto j = nlohmann::json::parse(out_);
  EXPECT_EQ(j.at("re").get<double>(), 0.0);
  EXPECT_EQ(j.at("snr"), "inf");
}

TEST_F(Cli, LocalityOfIdentityBank) {
  ASSERT_EQ(run("gen ring 8 -o " + tmp("g").string()), 0);
  ASSERT_EQ(run("design -g " + tmp("g").string() + " --design local -o " + tmp("b").string()), 0);
  auto bank = nlohmann::json::parse(slurp(tmp("b")));
  // Replace h0 with the all-ones response: F_h0 becomes the identity.
  bank["h0"] = std::vector<double>(8, 1.0);
  std::ofstream(tmp("id")) << bank.dump();
  ASSERT_EQ(run("locality -g " + tmp("g").string() + " --bank " + tmp("id").string() +
                " --vertex 3"),
            0);
  std::istringstream csv(out_);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "vertex,hop,response");
  int rows = 0;
  while (std::getline(csv, line)) {
    int v = 0, hop = 0;
    double resp = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%lf", &v, &hop, &resp), 3) << line;
    EXPECT_EQ(hop, std::min(std::abs(v - 3), 8 - std::abs(v - 3)));
    EXPECT_NEAR(resp, v == 3 ? 1.0 : 0.0, 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 8);
  EXPECT_NE(err_.find("spread radius: 0"), std::string::npos) << err_;
}

TEST_F(Cli, PolyfitReportsBound) {
  ASSERT_EQ(run("gen ring 32 -o " + tmp("g").string()), 0);
  ASSERT_EQ(run("polyfit -g " + tmp("g").string() + " --design local -m 4"), 0);
  const auto j = nlohmann::json::parse(out_);
  EXPECT_EQ(j.at("degree"), 4);
  EXPECT_EQ(j.at("coefficients").size(), 5u);
  EXPECT_LE(j.at("sup_error").get<double>(), j.at("error_bound").get<double>());
}

TEST_F(Cli, VerifyPasses) {
  ASSERT_EQ(run("gen ring 16 -o " + tmp("g").string()), 0);
  EXPECT_EQ(run("verify -g " + tmp("g").string() + " --depth 2 --signals 3"), 0) << out_;
  EXPECT_EQ(out_.find("FAIL"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("gen ring 2"), 2);
  EXPECT_EQ(run("gen torus 10"), 2);
  EXPECT_EQ(run("design"), 2);
  EXPECT_EQ(run("analyze -g " + golden("ring5.graph") + " -s " + golden("step3.signal")), 2);
  EXPECT_EQ(run("design -g " + golden("disconnected.graph") + " --design local"), 2);
  EXPECT_EQ(run("design -g " + tmp("missing").string() + " --design local"), 2);
}

TEST_F(Cli, NumericFailureExitsThree) {
  EXPECT_EQ(run("metrics " + golden("zero3.signal") + " " + golden("ramp3.signal")), 3);
  EXPECT_FALSE(err_.empty());
}

}  // namespace
