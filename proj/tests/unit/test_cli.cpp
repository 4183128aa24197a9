#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "umbilic/cli.hpp"
#include "umbilic/errors.hpp"

using namespace umbilic::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nk6");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nk6_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Config, Defaults) {
  const auto cfg = default_config();
  ASSERT_EQ(cfg.r_values.size(), 4u);
  EXPECT_DOUBLE_EQ(cfg.r_values[3], 1.0 / std::sqrt(2.0));
  EXPECT_EQ(cfg.samples, 500u);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, Parsing) {
  EXPECT_EQ(parse_real_list("-0.5, 0,1/sqrt2").size(), 3u);
  EXPECT_THROW(parse_real("abc"), umbilic::ConfigError);
  EXPECT_THROW(parse_real("0.5x"), umbilic::ConfigError);
  EXPECT_THROW(parse_count("-3"), umbilic::ConfigError);
  RunConfig cfg = default_config();
  apply_setting(cfg, "tol.hopf", "1e-3");
  EXPECT_EQ(cfg.tolerance_overrides.at("hopf"), 1e-3);
  EXPECT_THROW(apply_setting(cfg, "colour", "red"), umbilic::ConfigError);
  cfg.r_values = {0.995};
  EXPECT_THROW(cfg.validate(), umbilic::ConfigError);
}

TEST(Cli, TableText) {
  const auto r = run({"table"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("+3"), std::string::npos);
  EXPECT_NE(r.out.find("-0"), std::string::npos);
  EXPECT_NE(r.out.find("fingerprint"), std::string::npos);
}

TEST(Cli, TableJson) {
  const auto r = run({"table", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["labels"][0][1], "+3");
  EXPECT_EQ(j["signed_matrix"][0][6], -6);
  EXPECT_EQ(j["fingerprint"].get<std::string>().size(), 16u);
}

TEST(Cli, VerifyDefaultPasses) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.contains("config"));
  EXPECT_TRUE(doc.contains("table_fingerprint"));
  EXPECT_EQ(doc["reports"].size(), 15u * 4u);
  bool saw_natural = false;
  for (const auto& rep : doc["reports"]) {
    if (rep["check_id"] == "contact_metric_natural") {
      saw_natural = true;
      EXPECT_EQ(rep["verdict"], "pass");
      EXPECT_EQ(rep["criterion"], "min_at_least");
    }
  }
  EXPECT_TRUE(saw_natural);
}

TEST(Cli, ReportsSortedByCheckThenR) {
  const auto r = run({"verify", "--samples", "5"});
  const auto doc = nlohmann::json::parse(r.out);
  for (std::size_t i = 1; i < doc["reports"].size(); ++i) {
    const auto& a = doc["reports"][i - 1];
    const auto& b = doc["reports"][i];
    const bool ordered = a["check_id"] < b["check_id"] ||
                         (a["check_id"] == b["check_id"] && a["r"] < b["r"]);
    EXPECT_TRUE(ordered) << i;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "--samples", "0"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--r", "0.995"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--r", "zero"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--check", "nonexistent"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--h1", "0"}).code, kExitConfig);
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "--check", "nearly_kahler", "--tol", "nearly_kahler=1e-20"}).code,
            kExitFailed);
  EXPECT_EQ(run({"verify", "--check", "nearly_kahler,hopf", "--samples", "20"}).code, kExitOk);
}

TEST(Cli, ConfigFile) {
  const auto path = temp_file("cfg.txt");
  {
    std::ofstream f(path);
    f << "# small run\nr = 0, 0.5\nsamples = 10  # few\nseed = 7\nformat = csv\ncheck = hopf\n";
  }
  const auto r = run({"verify", "--config", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("check_id,r,samples", 0), 0u);
  EXPECT_NE(r.out.find("hopf,0.5,10,"), std::string::npos);

  // Flags override file settings.
  const auto over = run({"verify", "--config", path.string(), "--samples", "0"});
  EXPECT_EQ(over.code, kExitConfig);

  {
    std::ofstream f(path);
    f << "samples = 10\nunknown_key = 3\n";
  }
  EXPECT_EQ(run({"verify", "--config", path.string()}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--config", "/nonexistent/nk6.cfg"}).code, kExitConfig);
  std::filesystem::remove(path);
}

TEST(Cli, DeterministicReports) {
  const auto a = temp_file("a.json");
  const auto b = temp_file("b.json");
  ASSERT_EQ(run({"verify", "--samples", "50", "--out", a.string()}).code, kExitOk);
  ASSERT_EQ(run({"verify", "--samples", "50", "--out", b.string()}).code, kExitOk);
  const auto body = slurp(a);
  EXPECT_FALSE(body.empty());
  EXPECT_EQ(body, slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, EvalExamples) {
  auto value = [](std::vector<std::string> args) {
    args.insert(args.begin(), "eval");
    const auto r = run(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return r.out;
  };
  EXPECT_EQ(value({"--r", "0", "--point", "1,0,0,0,0,0", "--quantity", "xi"}),
            "(0, 0, 0, 0, 0, -1, 0)\n");
  EXPECT_EQ(value({"--r", "0.6", "--point", "0.8,0,0,0,0,0", "--quantity", "shape"}), "-0.75\n");
  EXPECT_EQ(value({"--r", "0", "--quantity", "tau"}), "20\n");
  EXPECT_EQ(value({"--r", "0.6", "--point", "0.8,0,0,0,0,0", "--quantity", "nu"}),
            "(0.6, 0, 0, 0, 0, 0, -0.8)\n");
  EXPECT_EQ(value({"--r", "0", "--point", "1,0,0,0,0,0", "--quantity", "phi_prime", "--v",
                   "0,1,0,0,0,0,0"}),
            "(0, 0, 0, 0, 1, 0, 0)\n");
  const auto inv = value({"--r", "0.6", "--quantity", "invariants"});
  EXPECT_NE(inv.find("tau = 31.25"), std::string::npos);

  const auto j = nlohmann::json::parse(
      value({"--r", "0", "--point", "1,0,0,0,0,0", "--quantity", "eta", "--format", "json"}));
  EXPECT_EQ(j["value"][5], -1.0);

  EXPECT_EQ(run({"eval", "--quantity", "phi"}).code, kExitConfig);
  EXPECT_EQ(run({"eval", "--quantity", "colour"}).code, kExitConfig);
  EXPECT_EQ(run({"eval", "--r", "0", "--point", "1,0,0,0,0,0", "--quantity", "phi", "--v",
                 "1,0,0,0,0,0,0"})
                .code,
            kExitConfig);
}

TEST(Cli, Sweep) {
  const auto r = run({"sweep", "--r", "0,0.6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row0, row6;
  std::getline(lines, header);
  std::getline(lines, row0);
  std::getline(lines, row6);
  EXPECT_EQ(header, "r,tau,f,alpha,identity_residual,curvature_estimate,umbilicity_residual");
  EXPECT_EQ(row0.rfind("0,20,0,0,0,", 0), 0u);
  auto column = [](const std::string& row, int idx) {
    std::stringstream ss(row);
    std::string cell;
    for (int i = 0; i <= idx; ++i) std::getline(ss, cell, ',');
    return std::stod(cell);
  };
  EXPECT_NEAR(column(row0, 5), 1.0, 1e-3);
  EXPECT_LE(column(row0, 6), 1e-6);
  EXPECT_NEAR(column(row6, 5), 1.5625, 1e-3);
  EXPECT_NEAR(column(row6, 1), 31.25, 1e-12);

  const auto grid = run({"sweep", "--grid", "1001"});
  ASSERT_EQ(grid.code, kExitOk);
  std::istringstream g(grid.out);
  std::string line;
  std::getline(g, line);
  int rows = 0;
  while (std::getline(g, line)) {
    ++rows;
    EXPECT_LE(std::abs(column(line, 4)), 1e-12);
  }
  EXPECT_EQ(rows, 1001);
}
