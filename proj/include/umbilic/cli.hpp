#pragma once
/**
 * @file cli.hpp
 * @brief The `nk6` batch verification harness.
 *
 * Subcommands: table, verify, eval, sweep. Exit codes: 0 when every
 * non-informational check passes, 1 when any fails, 2 on a usage or
 * configuration error.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "umbilic/report.hpp"

namespace umbilic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::vector<double> r_values;
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  double h1 = 1e-5;
  double h2 = 1e-3;
  std::map<std::string, double> tolerance_overrides;
  std::string out;              ///< empty: standard output
  std::string format = "json";  ///< json | csv | text
  std::vector<std::string> checks;  ///< empty: every registered check

  /// @throws ConfigError on any violated invariant.
  void validate() const;
  nlohmann::json to_json() const;
};

/// r in {-0.6, 0, 0.6, 1/sqrt2}, 500 samples, seed 42.
RunConfig default_config();

/// Comma separated reals; the tokens `1/sqrt2` and `-1/sqrt2` are accepted.
/// @throws ConfigError on malformed input.
std::vector<double> parse_real_list(const std::string& text);
double parse_real(const std::string& text);
std::uint64_t parse_count(const std::string& text);

/// Applies one `key = value` setting (keys as in the config file).
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
/// Flat key = value file, `#` starts a comment.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Runs every selected (check, r) task; reports sorted by (check_id, r).
std::vector<CheckReport> run_verify(const RunConfig& cfg);
bool all_passed(const std::vector<CheckReport>& reports);

nlohmann::json verify_document(const RunConfig& cfg, const std::vector<CheckReport>& reports);
std::string render_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports);

/// Shortest round-trip decimal form of x.
std::string format_real(double x);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace umbilic::cli
