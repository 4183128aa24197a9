#pragma once
/**
 * @file report.hpp
 * @brief Named residual records produced by every check.
 *
 * A check collects one scalar per sample. The criterion decides which
 * statistic is compared against the threshold:
 *   max_at_most    identity expected:          pass iff max <= threshold
 *   min_at_least   inequality at every sample: pass iff min >= threshold
 *   max_at_least   identity expected to fail:  pass iff max >= threshold
 *   informational  reported only, never fails
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "umbilic/vec.hpp"

namespace umbilic {

enum class Criterion { max_at_most, min_at_least, max_at_least, informational };
enum class Verdict { pass, fail, informational };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);

struct Expectation {
  Criterion criterion;
  double threshold;

  static Expectation holds(double tol) { return {Criterion::max_at_most, tol}; }
  static Expectation violated_everywhere(double margin) { return {Criterion::min_at_least, margin}; }
  static Expectation violated_somewhere(double margin) { return {Criterion::max_at_least, margin}; }
  static Expectation informational() { return {Criterion::informational, 0.0}; }
};

Verdict decide(Criterion c, double max_residual, double min_residual, double threshold);

/// The sample that determined the verdict.
struct Witness {
  Vec7 point;
  std::optional<Vec7> vector;
  double value;
};

struct CheckReport {
  std::string check_id;
  double r = 0.0;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double min_residual = 0.0;
  double tolerance = 0.0;
  Criterion criterion = Criterion::max_at_most;
  Verdict verdict = Verdict::fail;
  std::optional<Witness> witness;
  std::vector<std::pair<std::string, double>> observations;

  bool passed() const { return verdict != Verdict::fail; }
  std::optional<double> observation(std::string_view key) const;
};

/// Running max/min of per-sample residuals with their arguments.
class ResidualAccumulator {
 public:
  void add(double residual, const Vec7& point, std::optional<Vec7> vector = std::nullopt);
  std::size_t count() const { return count_; }
  double max() const { return max_; }
  double min() const { return min_; }

  CheckReport finish(std::string check_id, double r, const Expectation& expect) const;

 private:
  std::size_t count_ = 0;
  double max_ = 0.0;
  double min_ = 0.0;
  std::optional<Witness> arg_max_;
  std::optional<Witness> arg_min_;
};

nlohmann::json to_json(const CheckReport& report);

}  // namespace umbilic
