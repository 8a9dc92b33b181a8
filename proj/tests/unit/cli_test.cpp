#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "avghaz/average_hazard.hpp"
#include "avghaz/io.hpp"
#include "cli.hpp"

namespace avghaz::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = AVGHAZ_DATA_DIR;
const std::string kSample = (kData / "sample10.csv").string();
const std::string kModel = (kData / "flat_gap_model.json").string();

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto c = line.find(',', pos);
      cells.push_back(line.substr(pos, c - pos));
      if (c == std::string::npos) break;
      pos = c + 1;
    }
    t.push_back(cells);
  }
  return t;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("avghaz_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  fs::path dir;
};

TEST_F(CliTest, EstimateAtEventTime) {
  const auto r = run_cli({"estimate", "--input", kSample, "--tau", "109"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (std::vector<std::string>{"tau", "cum_incidence", "rmst", "ah", "degenerate"}));
  EXPECT_NEAR(io::parse_double(t[1][3]), 0.7 / 69.9, 1e-15);
  EXPECT_EQ(t[1][4], "0");
}

TEST_F(CliTest, EstimateGridMatchesLibrary) {
  const auto r = run_cli({"estimate", "--input", kSample, "--tau-grid", "10:120:1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 112u);
  const auto fit = km_fit(io::read_survival_csv(fs::path(kSample)));
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double tau = io::parse_double(t[i][0]);
    const auto est = average_hazard(fit, tau);
    EXPECT_EQ(io::parse_double(t[i][1]), est.cum_incidence);
    EXPECT_EQ(io::parse_double(t[i][2]), est.rmst);
    EXPECT_EQ(io::parse_double(t[i][3]), est.value);
  }
}

TEST_F(CliTest, EstimateHarmonicColumn) {
  const auto r = run_cli({"estimate", "--input", kSample, "--tau", "21,50", "--harmonic"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].back(), "harmonic");
  EXPECT_NEAR(io::parse_double(t[1][5]), 0.2 / 19.9, 1e-15);
  EXPECT_EQ(t[2][5], "");
}

TEST_F(CliTest, BadStatusIsParseError) {
  const fs::path bad = dir / "bad.csv";
  std::ofstream(bad) << "time,status\n10,1\n20,2\n";
  const auto r = run_cli({"estimate", "--input", bad.string(), "--tau", "10"});
  EXPECT_EQ(r.code, kUsageOrParseError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, DomainErrorNamesTauAndWritesNothing) {
  const fs::path out = dir / "out.csv";
  const auto r = run_cli({"estimate", "--input", kSample, "--tau", "50,130", "--out", out.string()});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.err.find("tau=130"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(dir / "out.csv.tmp"));

  const auto cf = run_cli({"estimate", "--input", kSample, "--tau", "130",
                           "--extrapolation", "carry-forward"});
  EXPECT_EQ(cf.code, kOk) << cf.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsageOrParseError);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsageOrParseError);
  EXPECT_EQ(run_cli({"estimate", "--input", kSample}).code, kUsageOrParseError);
  EXPECT_EQ(run_cli({"estimate", "--input", (dir / "none.csv").string(), "--tau", "1"}).code,
            kUsageOrParseError);
  EXPECT_EQ(run_cli({"simulate", "--reps", "5"}).code, kUsageOrParseError);
  EXPECT_EQ(run_cli({"simulate", "--constant-hazard", "0.01", "--tau-grid", "10:130:10"}).code,
            kUsageOrParseError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, SimulateSingleReplication) {
  const fs::path out = dir / "sim.csv";
  const auto r = run_cli({"simulate", "--constant-hazard", "0.01", "--censor-at", "120",
                          "--n", "10,30", "--reps", "1", "--tau-grid", "10:120:5",
                          "--seed", "42", "--out", out.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("max |bias|"), std::string::npos);
  const auto t = parse_csv(slurp(out));
  ASSERT_EQ(t.size(), 1u + 2 * 23);
  EXPECT_EQ(t[0].size(), 8u);
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_EQ(t[i][2], "0.01");
    EXPECT_EQ(t[i][5], "0");
    EXPECT_EQ(std::stoul(t[i][6]) + std::stoul(t[i][7]), 1u);
  }
}

TEST_F(CliTest, SimulateIsByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::string> base{"simulate", "--constant-hazard", "0.01", "--n", "10,50",
                                      "--reps", "200", "--seed", "7"};
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "1", "3"}) {
    const fs::path out = dir / (std::string("sim_") + std::to_string(outputs.size()) + ".csv");
    auto args = base;
    args.insert(args.end(), {"--threads", threads, "--out", out.string()});
    ASSERT_EQ(run_cli(args).code, kOk);
    outputs.push_back(slurp(out));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
  EXPECT_FALSE(outputs[0].empty());
}

TEST_F(CliTest, SimulateModelErrors) {
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{\"cuts\": [1], \"hazards\": [1]}";
  EXPECT_EQ(run_cli({"simulate", "--hazard-model", bad.string(), "--reps", "2"}).code, kModelError);
  EXPECT_EQ(run_cli({"simulate", "--hazard-model", (dir / "missing.json").string()}).code,
            kModelError);
  EXPECT_EQ(run_cli({"simulate", "--constant-hazard", "-1"}).code, kModelError);
}

TEST_F(CliTest, OracleScenario) {
  auto r = run_cli({"oracle", "--hazard-model", kModel, "--what", "ah", "--tau", "2,5,3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 4u);
  const double e2 = std::exp(-2.0);
  EXPECT_NEAR(io::parse_double(t[1][1]), 1.0, 1e-12);
  EXPECT_NEAR(io::parse_double(t[2][1]), (1 - e2) / ((1 - e2) + 3 * e2), 1e-12);
  EXPECT_NEAR(io::parse_double(t[3][1]), 0.864665, 1e-6);

  r = run_cli({"oracle", "--hazard-model", kModel, "--what", "survival", "--tau", "3"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_DOUBLE_EQ(io::parse_double(parse_csv(r.out)[1][1]), e2);

  r = run_cli({"oracle", "--constant-hazard", "0.01", "--what", "cumhaz", "--tau", "100"});
  EXPECT_DOUBLE_EQ(io::parse_double(parse_csv(r.out)[1][1]), 1.0);

  EXPECT_EQ(run_cli({"oracle", "--hazard-model", kModel, "--tau", "0"}).code, kDomainError);
  EXPECT_EQ(run_cli({"oracle", "--hazard-model", kModel, "--tau", "1", "--what", "nope"}).code,
            kUsageOrParseError);
}

}  // namespace
}  // namespace avghaz::cli
