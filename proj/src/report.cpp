#include "umbilic/report.hpp"

#include <cmath>
#include <limits>

namespace umbilic {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::max_at_most: return "max_at_most";
    case Criterion::min_at_least: return "min_at_least";
    case Criterion::max_at_least: return "max_at_least";
    case Criterion::informational: return "informational";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::informational: return "informational";
  }
  return "unknown";
}

Verdict decide(Criterion c, double max_residual, double min_residual, double threshold) {
  // NaN residuals never pass.
  switch (c) {
    case Criterion::max_at_most:
      return max_residual <= threshold ? Verdict::pass : Verdict::fail;
    case Criterion::min_at_least:
      return min_residual >= threshold ? Verdict::pass : Verdict::fail;
    case Criterion::max_at_least:
      return max_residual >= threshold ? Verdict::pass : Verdict::fail;
    case Criterion::informational:
      return Verdict::informational;
  }
  return Verdict::fail;
}

std::optional<double> CheckReport::observation(std::string_view key) const {
  for (const auto& [k, v] : observations) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void ResidualAccumulator::add(double residual, const Vec7& point, std::optional<Vec7> vector) {
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  if (count_ == 0 || residual > max_) {
    max_ = residual;
    arg_max_ = Witness{point, vector, residual};
  }
  if (count_ == 0 || residual < min_) {
    min_ = residual;
    arg_min_ = Witness{point, vector, residual};
  }
  ++count_;
}

CheckReport ResidualAccumulator::finish(std::string check_id, double r,
                                        const Expectation& expect) const {
  CheckReport rep;
  rep.check_id = std::move(check_id);
  rep.r = r;
  rep.samples = count_;
  rep.max_residual = max_;
  rep.min_residual = min_;
  rep.tolerance = expect.threshold;
  rep.criterion = expect.criterion;
  rep.verdict = count_ == 0 ? Verdict::fail : decide(expect.criterion, max_, min_, expect.threshold);
  if (expect.criterion == Criterion::informational) rep.verdict = Verdict::informational;
  rep.witness = expect.criterion == Criterion::min_at_least ? arg_min_ : arg_max_;
  return rep;
}

namespace {

nlohmann::json vec_json(const Vec7& v) {
  auto arr = nlohmann::json::array();
  for (int i = 0; i < 7; ++i) arr.push_back(v(i));
  return arr;
}

// JSON has no infinity; non-finite values are written as strings.
nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j;
  j["check_id"] = report.check_id;
  j["r"] = number(report.r);
  j["samples"] = report.samples;
  j["max_residual"] = number(report.max_residual);
  j["min_residual"] = number(report.min_residual);
  j["tolerance"] = number(report.tolerance);
  j["criterion"] = std::string(to_string(report.criterion));
  j["verdict"] = std::string(to_string(report.verdict));
  if (report.witness) {
    nlohmann::json w;
    w["point"] = vec_json(report.witness->point);
    if (report.witness->vector) w["vector"] = vec_json(*report.witness->vector);
    w["value"] = number(report.witness->value);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::json obs = nlohmann::json::object();
  for (const auto& [k, v] : report.observations) obs[k] = number(v);
  j["observations"] = obs;
  return j;
}

}  // namespace umbilic
