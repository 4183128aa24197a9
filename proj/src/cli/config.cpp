#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "umbilic/checks.hpp"
#include "umbilic/cli.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/hypersphere.hpp"

namespace umbilic::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t == "1/sqrt2") return 1.0 / std::sqrt(2.0);
  if (t == "-1/sqrt2") return -1.0 / std::sqrt(2.0);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ConfigError("not a real number: '" + text + "'");
  }
  return value;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split_commas(text)) values.push_back(parse_real(part));
  if (values.empty()) throw ConfigError("empty list of reals");
  return values;
}

std::uint64_t parse_count(const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("not a non-negative integer: '" + text + "'");
  }
  return value;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.r_values = {-0.6, 0.0, 0.6, 1.0 / std::sqrt(2.0)};
  return cfg;
}

void RunConfig::validate() const {
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (r_values.empty()) throw ConfigError("at least one r value is required");
  for (double r : r_values) {
    if (!(std::abs(r) < hypersphere::kMaxAbsR)) {
      throw ConfigError("r = " + format_real(r) + " lies outside (-0.99, 0.99)");
    }
  }
  try {
    geometry::DiffConfig{h1, h2}.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  if (format != "json" && format != "csv" && format != "text") {
    throw ConfigError("format must be json, csv or text, not '" + format + "'");
  }
  for (const auto& id : checks) {
    if (!checks::find_check(id)) throw ConfigError("unknown check id '" + id + "'");
  }
  for (const auto& [id, tol] : tolerance_overrides) {
    if (!checks::find_check(id)) throw ConfigError("tolerance override for unknown check '" + id + "'");
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
      throw ConfigError("tolerance for '" + id + "' must be finite and non-negative");
    }
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["r_values"] = r_values;
  j["samples"] = samples;
  j["seed"] = seed;
  j["h1"] = h1;
  j["h2"] = h2;
  j["tolerance_overrides"] = tolerance_overrides;
  j["format"] = format;
  j["checks"] = checks;
  return j;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "r") {
    cfg.r_values = parse_real_list(value);
  } else if (key == "samples") {
    cfg.samples = static_cast<std::size_t>(parse_count(value));
  } else if (key == "seed") {
    cfg.seed = parse_count(value);
  } else if (key == "h1") {
    cfg.h1 = parse_real(value);
  } else if (key == "h2") {
    cfg.h2 = parse_real(value);
  } else if (key == "format") {
    cfg.format = trim(value);
  } else if (key == "out") {
    cfg.out = trim(value);
  } else if (key == "check") {
    cfg.checks = split_commas(value);
    std::erase(cfg.checks, std::string{});
  } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
    cfg.tolerance_overrides[key.substr(4)] = parse_real(value);
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace umbilic::cli
