#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "umbilic/acms.hpp"
#include "umbilic/cayley.hpp"
#include "umbilic/checks.hpp"
#include "umbilic/cli.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/hypersphere.hpp"

namespace umbilic::cli {

using hypersphere::MPoint;
using hypersphere::Param;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("?");
}

namespace {

std::string format_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_vec(const Vec7& v) {
  std::string s = "(";
  for (int i = 0; i < 7; ++i) {
    if (i) s += ", ";
    s += format_short(v(i));
  }
  return s + ")";
}

nlohmann::json vec_json(const Vec7& v) {
  auto arr = nlohmann::json::array();
  for (int i = 0; i < 7; ++i) arr.push_back(v(i) == 0.0 ? 0.0 : v(i));
  return arr;
}

void write_output(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << body;
}

// Evaluates task(i) for i < n on a bounded pool; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& task) {
  std::vector<T> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = task(i);
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(hw, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

std::vector<CheckReport> run_verify(const RunConfig& cfg) {
  cfg.validate();
  std::vector<const checks::CheckDefinition*> selected;
  if (cfg.checks.empty()) {
    for (const auto& d : checks::registry()) selected.push_back(&d);
  } else {
    for (const auto& id : cfg.checks) selected.push_back(checks::find_check(id));
  }

  struct Task {
    const checks::CheckDefinition* def;
    checks::RunParams params;
    double r;
  };
  std::vector<Task> tasks;
  for (const auto* def : selected) {
    checks::RunParams params;
    params.samples = cfg.samples;
    params.seed = cfg.seed;
    params.diff = {cfg.h1, cfg.h2};
    if (auto it = cfg.tolerance_overrides.find(def->id); it != cfg.tolerance_overrides.end()) {
      params.tolerance_override = it->second;
    }
    for (double r : cfg.r_values) tasks.push_back({def, params, r});
  }
  auto reports = parallel_map<CheckReport>(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    try {
      return t.def->run(Param(t.r), t.params);
    } catch (const std::exception& e) {
      CheckReport failed;
      failed.check_id = t.def->id;
      failed.r = t.r;
      failed.max_residual = std::numeric_limits<double>::quiet_NaN();
      failed.min_residual = failed.max_residual;
      failed.verdict = Verdict::fail;
      failed.observations.emplace_back(std::string("error: ") + e.what(), 0.0);
      return failed;
    }
  });
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return a.check_id != b.check_id ? a.check_id < b.check_id : a.r < b.r;
  });
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

nlohmann::json verify_document(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  nlohmann::json doc;
  doc["config"] = cfg.to_json();
  doc["table_fingerprint"] = cayley::FanoTable::canonical().fingerprint();
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["reports"] = arr;
  return doc;
}

std::string render_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  if (cfg.format == "json") {
    os << verify_document(cfg, reports).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "check_id,r,samples,max_residual,min_residual,tolerance,criterion,verdict\n";
    for (const auto& r : reports) {
      os << r.check_id << ',' << format_real(r.r) << ',' << r.samples << ','
         << format_real(r.max_residual) << ',' << format_real(r.min_residual) << ','
         << format_real(r.tolerance) << ',' << to_string(r.criterion) << ','
         << to_string(r.verdict) << '\n';
    }
  } else {
    os << "table " << cayley::FanoTable::canonical().fingerprint() << '\n';
    for (const auto& r : reports) {
      char line[256];
      std::snprintf(line, sizeof line, "%-14s %-24s r=%-10.6g max=%-12.4g min=%-12.4g %s %g\n",
                    std::string(to_string(r.verdict)).c_str(), r.check_id.c_str(), r.r,
                    r.max_residual, r.min_residual, std::string(to_string(r.criterion)).c_str(),
                    r.tolerance);
      os << line;
      for (const auto& [k, v] : r.observations) os << "    " << k << " = " << format_short(v) << '\n';
    }
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return !r.passed(); });
    os << reports.size() << " reports, " << failed << " failed\n";
  }
  return os.str();
}

namespace {

int cmd_table(const std::string& format, std::ostream& out, std::ostream& err) {
  const auto triples = cayley::FanoTable::canonical_triples();
  const auto diag = cayley::validate_table(triples);
  const auto& table = cayley::FanoTable::canonical();
  if (!diag.ok()) {
    err << "multiplication table failed validation\n";
    for (const auto& s : diag.structural) err << "  " << s << '\n';
    return kExitFailed;
  }
  const auto labels = table.signed_matrix_labels();
  const auto signs = table.signed_matrix();
  if (format == "json") {
    nlohmann::json j;
    j["labels"] = labels;
    auto sign = nlohmann::json::array();
    auto index = nlohmann::json::array();
    for (int i = 1; i <= 7; ++i) {
      auto srow = nlohmann::json::array();
      auto irow = nlohmann::json::array();
      for (int k = 1; k <= 7; ++k) {
        const auto p = table.product(i, k);
        srow.push_back(p.sign);
        irow.push_back(p.index);
      }
      sign.push_back(srow);
      index.push_back(irow);
    }
    j["signed_matrix"] = signs;
    j["signs"] = sign;
    j["indices"] = index;
    auto tri = nlohmann::json::array();
    for (const auto& t : triples) tri.push_back({t.i, t.j, t.k});
    j["triples"] = tri;
    j["fingerprint"] = table.fingerprint();
    out << j.dump(2) << '\n';
  } else {
    out << "      ";
    for (int k = 1; k <= 7; ++k) out << "  e" << k;
    out << '\n';
    for (int i = 0; i < 7; ++i) {
      out << "  e" << i + 1 << ' ';
      for (int k = 0; k < 7; ++k) {
        char cell[8];
        std::snprintf(cell, sizeof cell, "%4s", labels[i][k].c_str());
        out << cell;
      }
      out << '\n';
    }
    out << "fingerprint " << table.fingerprint() << '\n';
  }
  return kExitOk;
}

std::array<double, 6> parse_point(const std::string& text) {
  const auto values = parse_real_list(text);
  if (values.size() != 6) throw ConfigError("--point needs six coordinates x1..x6");
  std::array<double, 6> x{};
  std::copy(values.begin(), values.end(), x.begin());
  return x;
}

Vec7 parse_vector(const std::string& text) {
  const auto values = parse_real_list(text);
  if (values.size() != 7) throw ConfigError("--v needs seven components");
  Vec7 v;
  for (int i = 0; i < 7; ++i) v(i) = values[static_cast<std::size_t>(i)];
  return v;
}

struct EvalArgs {
  std::string r = "0";
  std::string point;
  std::string v;
  std::string quantity;
  std::string format = "text";
  std::string h1 = "1e-5";
  std::string h2 = "1e-3";
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const double rv = parse_real(a.r);
  if (!(std::abs(rv) < hypersphere::kMaxAbsR)) throw ConfigError("r must lie in (-0.99, 0.99)");
  const Param r(rv);
  const geometry::DiffConfig diff{parse_real(a.h1), parse_real(a.h2)};
  try {
    diff.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }

  MPoint x = MPoint::project(r, Vec7::Unit(0));
  if (!a.point.empty()) {
    const auto coords = parse_point(a.point);
    try {
      x = MPoint::renormalized(r, coords);
    } catch (const PreconditionError&) {
      Vec7 q = Vec7::Zero();
      for (int i = 0; i < 6; ++i) q(i) = coords[static_cast<std::size_t>(i)];
      x = MPoint::project(r, q);
      err << "note: point rescaled onto M_r\n";
    }
  }
  std::optional<Vec7> v;
  if (!a.v.empty()) {
    v = parse_vector(a.v);
    if (!hypersphere::is_tangent(x, *v)) throw ConfigError("--v is not tangent to M_r at the point");
  }
  auto need_v = [&]() -> const Vec7& {
    if (!v) throw ConfigError("quantity '" + a.quantity + "' needs --v");
    return *v;
  };

  std::optional<double> scalar;
  std::optional<Vec7> vector;
  nlohmann::json object;
  const auto& q = a.quantity;
  if (q == "nu") {
    vector = hypersphere::unit_normal(x);
  } else if (q == "N") {
    vector = x.on_sphere().position();
  } else if (q == "xi") {
    vector = acms::xi(x);
  } else if (q == "eta") {
    if (v) scalar = acms::eta(x, *v);
    else vector = acms::xi_closed_form(x);
  } else if (q == "shape") {
    if (v) {
      vector = hypersphere::shape_operator(x, *v, diff);
    } else {
      hypersphere::Sampler sampler(r, 0);
      double trace = 0.0;
      for (const auto& e : sampler.orthonormal_frame(x)) {
        trace += hypersphere::shape_operator(x, e, diff).dot(e);
      }
      scalar = trace / 5.0;
    }
  } else if (q == "tau") {
    scalar = hypersphere::scalar_invariants(r).tau;
  } else if (q == "f") {
    scalar = hypersphere::scalar_invariants(r).f;
  } else if (q == "alpha") {
    scalar = hypersphere::scalar_invariants(r).alpha;
  } else if (q == "invariants") {
    const auto inv = hypersphere::scalar_invariants(r);
    object = {{"tau", inv.tau},
              {"f", inv.f},
              {"alpha", inv.alpha},
              {"identity_residual", inv.identity_residual}};
  } else if (q == "phi") {
    vector = acms::phi_natural(x, need_v());
  } else if (q == "phi_prime") {
    vector = acms::phi_prime(x, need_v());
  } else if (q == "psi") {
    vector = acms::psi(x, need_v(), diff);
  } else {
    throw ConfigError("unknown quantity '" + q +
                      "' (nu, N, xi, eta, shape, tau, f, alpha, invariants, phi, phi_prime, psi)");
  }

  if (a.format == "json") {
    nlohmann::json j;
    j["quantity"] = q;
    j["r"] = rv;
    j["point"] = vec_json(x.position());
    if (scalar) j["value"] = *scalar;
    else if (vector) j["value"] = vec_json(*vector);
    else j["value"] = object;
    out << j.dump(2) << '\n';
  } else if (a.format == "text") {
    if (scalar) {
      out << format_short(*scalar) << '\n';
    } else if (vector) {
      out << format_vec(*vector) << '\n';
    } else {
      for (const auto& [k, val] : object.items()) out << k << " = " << format_short(val) << '\n';
    }
  } else {
    throw ConfigError("eval format must be text or json");
  }
  return kExitOk;
}

struct SweepArgs {
  std::string r;
  std::size_t grid = 19;
  std::string samples = "20";
  std::string seed = "42";
  std::string h1 = "1e-5";
  std::string h2 = "1e-3";
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  std::vector<double> rs;
  if (!a.r.empty()) {
    rs = parse_real_list(a.r);
  } else {
    if (a.grid < 1) throw ConfigError("--grid must be at least 1");
    for (std::size_t i = 0; i < a.grid; ++i) {
      rs.push_back(a.grid == 1 ? 0.0
                               : -0.9 + 1.8 * static_cast<double>(i) / static_cast<double>(a.grid - 1));
    }
  }
  RunConfig cfg = default_config();
  cfg.r_values = rs;
  cfg.samples = static_cast<std::size_t>(parse_count(a.samples));
  cfg.seed = parse_count(a.seed);
  cfg.h1 = parse_real(a.h1);
  cfg.h2 = parse_real(a.h2);
  cfg.validate();

  const geometry::DiffConfig diff{cfg.h1, cfg.h2};
  const auto rows = parallel_map<std::string>(rs.size(), [&](std::size_t i) {
    const double rv = rs[i];
    const Param r(rv);
    const auto inv = hypersphere::scalar_invariants(r);
    const auto curv =
        checks::curvature(r, cfg.samples, checks::derive_seed(cfg.seed, "curvature", rv), diff);
    const auto umb =
        checks::umbilicity(r, cfg.samples, checks::derive_seed(cfg.seed, "umbilicity", rv), diff);
    return format_real(rv) + ',' + format_real(inv.tau) + ',' + format_real(inv.f) + ',' +
           format_real(inv.alpha) + ',' + format_real(inv.identity_residual) + ',' +
           format_real(*curv.observation("mean_curvature")) + ',' + format_real(umb.max_residual) +
           '\n';
  });
  std::string body = "r,tau,f,alpha,identity_residual,curvature_estimate,umbilicity_residual\n";
  for (const auto& row : rows) body += row;
  write_output(a.out, body, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of the almost contact structures on the hyperspheres of S^6",
               "nk6"};
  app.require_subcommand(1);

  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Print the validated signed basis-product matrix");
  table->add_option("--format", table_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::map<std::string, std::string> flags;
  std::vector<std::string> tol_flags;
  std::vector<std::string> check_flags;
  std::string config_path;
  auto* verify = app.add_subcommand("verify", "Run the check registry over an r-grid");
  for (const char* key : {"r", "samples", "seed", "h1", "h2", "format", "out"}) {
    verify->add_option(std::string("--") + key, flags[key]);
  }
  verify->add_option("--check", check_flags, "Check ids, comma separated or repeated");
  verify->add_option("--tol", tol_flags, "Tolerance override id=value, repeatable");
  verify->add_option("--config", config_path, "Flat key = value config file");
  bool list_checks = false;
  verify->add_flag("--list", list_checks, "List the registered checks and exit");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one quantity at a point of M_r");
  eval->add_option("--r", eval_args.r);
  eval->add_option("--point", eval_args.point, "x1..x6, comma separated");
  eval->add_option("--v", eval_args.v, "Tangent vector, seven components");
  eval->add_option("--quantity", eval_args.quantity)->required();
  eval->add_option("--format", eval_args.format, "text | json");
  eval->add_option("--h1", eval_args.h1);
  eval->add_option("--h2", eval_args.h2);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "CSV of the scalar invariants over an r-grid");
  sweep->add_option("--r", sweep_args.r, "Explicit r values; overrides --grid");
  sweep->add_option("--grid", sweep_args.grid, "Evenly spaced r values in [-0.9, 0.9]");
  sweep->add_option("--samples", sweep_args.samples);
  sweep->add_option("--seed", sweep_args.seed);
  sweep->add_option("--h1", sweep_args.h1);
  sweep->add_option("--h2", sweep_args.h2);
  sweep->add_option("--out", sweep_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*table) return cmd_table(table_format, out, err);
    if (*eval) return cmd_eval(eval_args, out, err);
    if (*sweep) return cmd_sweep(sweep_args, out);

    if (list_checks) {
      for (const auto& d : checks::registry()) out << d.id << "  " << d.description << '\n';
      return kExitOk;
    }
    RunConfig cfg = default_config();
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const auto& [key, value] : flags) {
      if (verify->get_option("--" + key)->count() > 0) apply_setting(cfg, key, value);
    }
    if (!check_flags.empty()) {
      std::string joined;
      for (const auto& c : check_flags) joined += (joined.empty() ? "" : ",") + c;
      apply_setting(cfg, "check", joined);
    }
    for (const auto& t : tol_flags) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ConfigError("--tol expects id=value, got '" + t + "'");
      apply_setting(cfg, "tol." + t.substr(0, eq), t.substr(eq + 1));
    }
    cfg.validate();

    const auto reports = run_verify(cfg);
    const std::string body = render_reports(cfg, reports);
    write_output(cfg.out, body, out);
    const bool ok = all_passed(reports);
    if (!cfg.out.empty()) {
      const auto failed = std::count_if(reports.begin(), reports.end(),
                                        [](const auto& r) { return !r.passed(); });
      out << reports.size() << " reports written to " << cfg.out << ", " << failed << " failed\n";
    }
    for (const auto& r : reports) {
      if (!r.passed()) err << "FAIL " << r.check_id << " r=" << format_real(r.r) << '\n';
    }
    return ok ? kExitOk : kExitFailed;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace umbilic::cli
