#include "umbilic/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "umbilic/cayley.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/nk6.hpp"

namespace umbilic::checks {

using acms::AcmStructure;
using hypersphere::MPoint;
using hypersphere::Sampler;

namespace {

void require_samples(std::size_t n) {
  if (n == 0) throw ParameterError("sample count must be at least 1");
}

}  // namespace

CheckReport composition_law(std::size_t n, std::uint64_t seed, Expectation expect) {
  require_samples(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    cayley::Octonion a, b;
    for (int i = 0; i < 8; ++i) a[i] = normal(rng);
    for (int i = 0; i < 8; ++i) b[i] = normal(rng);
    const double nn = cayley::norm(a) * cayley::norm(b);
    const double res = std::abs(cayley::norm(cayley::multiply(a, b)) - nn) / (1.0 + nn);
    acc.add(res, a.imag());
  }
  return acc.finish("composition_law", 0.0, expect);
}

CheckReport nearly_kahler(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                          Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const auto p = sampler.point().on_sphere();
    const Vec7 v = sampler.unit_sphere_tangent(p);
    const auto X = nk6::tangent_extension(p, v);
    acc.add(nk6::G(p, X, X, cfg).norm(), p.position(), v);
  }
  return acc.finish("nearly_kahler", r.r(), expect);
}

CheckReport umbilicity(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                       Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 v = sampler.unit_tangent(x);
    const Vec7 Av = hypersphere::shape_operator(x, v, cfg);
    acc.add((Av + r.umbilic_factor() * v).norm(), x.position(), v);
  }
  auto rep = acc.finish("umbilicity", r.r(), expect);
  rep.observations.emplace_back("expected_eigenvalue", -r.umbilic_factor());
  return rep;
}

CheckReport curvature(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                      Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  const double expected = 1.0 / (1.0 - r.r() * r.r());
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const auto [u, v] = sampler.orthonormal_pair(x);
    const double K = hypersphere::sectional_curvature(x, u, v, cfg);
    sum += K;
    acc.add(std::abs(K - expected), x.position(), u);
  }
  auto rep = acc.finish("curvature", r.r(), expect);
  rep.observations.emplace_back("expected_curvature", expected);
  rep.observations.emplace_back("mean_curvature", sum / static_cast<double>(n));
  return rep;
}

CheckReport scalar_identity(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                            Expectation expect) {
  require_samples(n);
  const auto inv = hypersphere::scalar_invariants(r);
  Sampler sampler(r, seed);
  double f_dev = 0.0;
  double alpha_dev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 xi = acms::xi(x);
    f_dev = std::max(f_dev, std::abs(hypersphere::shape_operator(x, xi, cfg).dot(xi) - inv.f));
    double trace = 0.0;
    for (const auto& e : sampler.orthonormal_frame(x)) {
      trace += hypersphere::shape_operator(x, e, cfg).dot(e);
    }
    alpha_dev = std::max(alpha_dev, std::abs(trace / 5.0 - inv.alpha));
  }
  ResidualAccumulator acc;
  Vec7 origin = Vec7::Zero();
  origin(6) = r.r();
  acc.add(std::abs(inv.identity_residual), origin);
  auto rep = acc.finish("scalar_identity", r.r(), expect);
  rep.observations = {{"tau", inv.tau},
                      {"f", inv.f},
                      {"alpha", inv.alpha},
                      {"f_numeric_deviation", f_dev},
                      {"alpha_numeric_deviation", alpha_dev}};
  return rep;
}

CheckReport acms_axioms(const AcmStructure& S, Param r, std::size_t n, std::uint64_t seed,
                        Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const auto [u, v] = [&] {
      Vec7 a = sampler.unit_tangent(x);
      Vec7 b = sampler.unit_tangent(x);
      return std::pair{a, b};
    }();
    const Vec7 xi = S.xi(x);
    const Vec7 nu = hypersphere::unit_normal(x);
    const double eu = S.eta(x, u);
    const double ev = S.eta(x, v);
    const Vec7 pu = S.phi(x, u);
    const Vec7 pv = S.phi(x, v);
    const double residuals[] = {
        (S.phi(x, pu) + u - eu * xi).norm(),             // phi^2 = -I + eta (x) xi
        std::abs(S.eta(x, xi) - 1.0),                    // eta(xi) = 1
        S.phi(x, xi).norm(),                             // phi xi = 0
        std::abs(S.eta(x, pu)),                          // eta o phi = 0
        std::abs(pu.dot(pv) - u.dot(v) + eu * ev),       // g(phi u, phi v)
        std::abs(pu.dot(v) + u.dot(pv)),                 // skew
        std::max(std::abs(pu.dot(x.position())), std::abs(pu.dot(nu))),  // tangency
    };
    acc.add(*std::max_element(std::begin(residuals), std::end(residuals)), x.position(), u);
  }
  return acc.finish("axioms_" + S.name, r.r(), expect);
}

CheckReport contact_form(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                         const geometry::OneForm& eta, Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const auto frame = sampler.orthonormal_frame(x);
    acc.add(std::abs(geometry::contact_volume(eta, x.position(), frame, cfg)), x.position(),
            frame[0]);
  }
  return acc.finish("contact_form", r.r(), expect);
}

CheckReport contact_metric(const AcmStructure& S, Param r, std::size_t n, std::uint64_t seed,
                           const DiffConfig& cfg, Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  const auto eta = acms::eta_form();
  ResidualAccumulator acc;
  double witness_max = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const auto curl = geometry::curl_matrix(eta, x.position(), cfg);
    auto gap = [&](const Vec7& a, const Vec7& b) {
      return std::abs(geometry::two_form_value(curl, a, b) - a.dot(S.phi(x, b)));
    };
    const Vec7 u = sampler.unit_tangent(x);
    const Vec7 v = sampler.unit_tangent(x);
    acc.add(gap(u, v), x.position(), u);

    const Vec7 xi = S.xi(x);
    auto horizontal = [&](int b) {
      const Vec7 X = hypersphere::coordinate_tangent(1, b, x);
      return Vec7(X - S.eta(x, X) * xi);
    };
    const Vec7 y12 = horizontal(2);
    for (int b = 2; b <= 6; ++b) {
      const Vec7 y1b = horizontal(b);
      const double w = std::max(b > 2 ? gap(y12, y1b) : 0.0, gap(y1b, xi));
      witness_max = std::max(witness_max, w);
      acc.add(w, x.position(), y1b);
    }
  }
  auto rep = acc.finish("contact_metric_" + S.name, r.r(), expect);
  rep.observations.emplace_back("witness_pairs_max", witness_max);
  return rep;
}

std::pair<int, int> witness_partners(int a) {
  if (a < 1 || a > 6) throw IndexError("witness index must lie in [1,6]");
  // eta pairs the coordinates (1,6), (2,5), (3,4).
  auto paired = [](int i, int j) { return i + j == 7; };
  for (const auto& t : cayley::FanoTable::canonical().triples()) {
    const std::array<int, 3> idx{t.i, t.j, t.k};
    if (std::find(idx.begin(), idx.end(), 7) != idx.end()) continue;
    if (paired(t.i, t.j) || paired(t.j, t.k) || paired(t.i, t.k)) continue;
    if (std::find(idx.begin(), idx.end(), a) == idx.end()) continue;
    std::array<int, 2> rest{};
    std::size_t m = 0;
    for (int i : idx) {
      if (i != a) rest[m++] = i;
    }
    return {std::min(rest[0], rest[1]), std::max(rest[0], rest[1])};
  }
  throw IndexError("no witness triple for index " + std::to_string(a));
}

CheckReport theorem_c_witness(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                              Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  const auto eta = acms::eta_form();
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const int a = 1 + static_cast<int>(k % 6);
    const auto [c, d] = witness_partners(a);
    const auto x = sampler.point_with_coordinate_at_least(a, 0.3);
    const Vec7 X = hypersphere::coordinate_tangent(a, c, x);
    const Vec7 Y = hypersphere::coordinate_tangent(a, d, x);
    const double deta = geometry::exterior_derivative(eta, x.position(), X, Y, cfg);
    const double g = X.dot(acms::phi_natural(x, Y));
    acc.add(std::abs(deta - g), x.position(), Y);
  }
  return acc.finish("contact_metric_natural", r.r(), expect);
}

CheckReport sasakian(const AcmStructure& S, Param r, std::size_t n, std::uint64_t seed,
                     const DiffConfig& cfg, Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 u = sampler.unit_tangent(x);
    const Vec7 v = sampler.unit_tangent(x);
    const auto X = hypersphere::killing_extension(x, u);
    const auto Y = hypersphere::killing_extension(x, v);
    const auto phiY = acms::apply_phi(S, r, Y);
    const Vec7 nabla_phi =
        hypersphere::nabla_m(X, phiY, x, cfg) - S.phi(x, hypersphere::nabla_m(X, Y, x, cfg));
    const Vec7 res = nabla_phi - u.dot(v) * S.xi(x) + S.eta(x, v) * u;
    acc.add(res.norm(), x.position(), u);
  }
  return acc.finish("sasakian_" + S.name, r.r(), expect);
}

CheckReport theorem_b(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  double max_g = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 u = sampler.unit_tangent(x);
    const Vec7 v = sampler.unit_tangent(x);
    const Vec7 pu = acms::phi_natural(x, u);
    const Vec7 lhs = hypersphere::shape_operator(x, pu, cfg) +
                     acms::phi_natural(x, hypersphere::shape_operator(x, u, cfg));
    max_g = std::max(max_g, std::abs(pu.dot(v)));
    acc.add(std::abs(lhs.dot(v) + 2.0 * pu.dot(v)), x.position(), u);
  }
  auto rep = acc.finish("theorem_b", r.r(), Expectation::informational());
  const double factor = std::abs(2.0 - 2.0 * r.umbilic_factor());
  rep.observations = {{"predicted_factor", factor},
                      {"max_abs_g_phi", max_g},
                      {"predicted_max_residual", factor * max_g}};
  return rep;
}

CheckReport hopf(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                 const geometry::VectorField& xi, Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  double geodesic = 0.0;
  double principal = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 xv = xi(x.position());
    const double g = hypersphere::nabla_m(xi, xi, x, cfg).norm();
    const double p =
        (hypersphere::shape_operator(x, xv, cfg) + r.umbilic_factor() * xv).norm();
    geodesic = std::max(geodesic, g);
    principal = std::max(principal, p);
    acc.add(std::max(g, p), x.position(), xv);
  }
  auto rep = acc.finish("hopf", r.r(), expect);
  rep.observations = {{"max_nabla_xi_xi", geodesic}, {"max_principal_residual", principal}};
  return rep;
}

CheckReport psi_phi_prime(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                          Expectation expect) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  double on_xi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const Vec7 v = sampler.unit_tangent(x);
    acc.add((acms::psi(x, v, cfg) - acms::phi_prime(x, v)).norm(), x.position(), v);
    const Vec7 xi = acms::xi(x);
    const double d = (acms::psi(x, xi, cfg) - acms::phi_prime(x, xi)).norm();
    on_xi = std::max(on_xi, d);
    acc.add(d, x.position(), xi);
  }
  auto rep = acc.finish("psi_phi_prime", r.r(), expect);
  rep.observations.emplace_back("max_on_xi", on_xi);
  return rep;
}

CheckReport pullback(Param r, std::size_t n, std::uint64_t seed) {
  require_samples(n);
  Sampler sampler(r, seed);
  ResidualAccumulator acc;
  double sum = 0.0;
  double sum_sq = 0.0;
  double xi_scale = 0.0;
  double eta_scale = 0.0;
  double collinearity = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = sampler.point();
    const auto y = hypersphere::F_map(x);
    const Vec7 u = sampler.unit_tangent(x);
    const double factor = hypersphere::F_pushforward(r, u).squaredNorm() / u.squaredNorm();
    sum += factor;
    sum_sq += factor * factor;

    const Vec7 xi = acms::xi(x);
    const Vec7 pulled_xi = hypersphere::F_inverse_pushforward(r, acms::xi(y));
    xi_scale = pulled_xi.dot(xi) / xi.squaredNorm();
    collinearity = std::max(collinearity, (pulled_xi - xi_scale * xi).norm());

    const double eta_u = acms::eta(x, u);
    const double pulled_eta_u = acms::eta(y, hypersphere::F_pushforward(r, u));
    if (std::abs(eta_u) > 1e-3) eta_scale = pulled_eta_u / eta_u;

    acc.add(std::max((pulled_xi - xi).norm(), std::abs(pulled_eta_u - eta_u)), x.position(), u);
  }
  const double mean = sum / static_cast<double>(n);
  auto rep = acc.finish("pullback", r.r(), Expectation::informational());
  rep.observations = {{"conformal_factor", mean},
                      {"conformal_factor_variance",
                       std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean)},
                      {"xi_scale", xi_scale},
                      {"xi_collinearity_residual", collinearity},
                      {"eta_scale", eta_scale}};
  return rep;
}

namespace {

Expectation with_override(Expectation e, const RunParams& p) {
  if (p.tolerance_override && e.criterion != Criterion::informational) {
    e.threshold = *p.tolerance_override;
  }
  return e;
}

std::vector<CheckDefinition> build_registry() {
  using E = Expectation;
  auto seed_for = [](const RunParams& p, const char* id, Param r) {
    return derive_seed(p.seed, id, r.r());
  };
  std::vector<CheckDefinition> defs;
  defs.push_back({"axioms_natural", "almost contact metric axioms, natural phi",
                  [=](Param r, const RunParams& p) {
                    return acms_axioms(acms::natural_structure(), r, p.samples,
                                       seed_for(p, "axioms_natural", r),
                                       with_override(E::holds(1e-9), p));
                  }});
  defs.push_back({"axioms_prime", "almost contact metric axioms, phi'",
                  [=](Param r, const RunParams& p) {
                    return acms_axioms(acms::prime_structure(), r, p.samples,
                                       seed_for(p, "axioms_prime", r),
                                       with_override(E::holds(1e-9), p));
                  }});
  defs.push_back({"contact_form", "eta ^ (d eta)^2 nonzero on tangent frames",
                  [=](Param r, const RunParams& p) {
                    return contact_form(r, p.samples, seed_for(p, "contact_form", r), p.diff,
                                        acms::eta_form(),
                                        with_override(E::violated_everywhere(1e-3), p));
                  }});
  defs.push_back({"contact_metric_natural", "natural structure is not contact metric",
                  [=](Param r, const RunParams& p) {
                    return theorem_c_witness(r, p.samples,
                                             seed_for(p, "contact_metric_natural", r), p.diff,
                                             with_override(E::violated_everywhere(0.02), p));
                  }});
  defs.push_back({"contact_metric_prime", "phi' is contact metric exactly when r = 0",
                  [=](Param r, const RunParams& p) {
                    const E e = r.r() == 0.0 ? E::holds(1e-8) : E::violated_somewhere(1e-2);
                    return contact_metric(acms::prime_structure(), r, p.samples,
                                          seed_for(p, "contact_metric_prime", r), p.diff,
                                          with_override(e, p));
                  }});
  defs.push_back({"sasakian_natural", "natural structure is not Sasakian",
                  [=](Param r, const RunParams& p) {
                    return sasakian(acms::natural_structure(), r, p.samples,
                                    seed_for(p, "sasakian_natural", r), p.diff,
                                    with_override(E::violated_somewhere(1e-2), p));
                  }});
  defs.push_back({"sasakian_prime", "phi' is Sasakian exactly when r = 0",
                  [=](Param r, const RunParams& p) {
                    const E e = r.r() == 0.0 ? E::holds(1e-5) : E::violated_somewhere(1e-2);
                    return sasakian(acms::prime_structure(), r, p.samples,
                                    seed_for(p, "sasakian_prime", r), p.diff, with_override(e, p));
                  }});
  defs.push_back({"theorem_b", "g((A phi + phi A)X, Y) + 2 g(phi X, Y), reported only",
                  [=](Param r, const RunParams& p) {
                    return theorem_b(r, p.samples, seed_for(p, "theorem_b", r), p.diff);
                  }});
  defs.push_back({"hopf", "xi is geodesic and principal",
                  [=](Param r, const RunParams& p) {
                    return hopf(r, p.samples, seed_for(p, "hopf", r), p.diff, acms::xi_field(),
                                with_override(E::holds(1e-6), p));
                  }});
  defs.push_back({"umbilicity", "A = -(r/sqrt(1-r^2)) I",
                  [=](Param r, const RunParams& p) {
                    return umbilicity(r, p.samples, seed_for(p, "umbilicity", r), p.diff,
                                      with_override(E::holds(1e-6), p));
                  }});
  defs.push_back({"curvature", "sectional curvature 1/(1-r^2)",
                  [=](Param r, const RunParams& p) {
                    return curvature(r, p.samples, seed_for(p, "curvature", r), p.diff,
                                     with_override(E::holds(1e-3), p));
                  }});
  defs.push_back({"scalar_identity", "tau = 20 + 5 alpha (5 alpha - f)",
                  [=](Param r, const RunParams& p) {
                    return scalar_identity(r, std::min<std::size_t>(p.samples, 50),
                                           seed_for(p, "scalar_identity", r), p.diff,
                                           with_override(E::holds(1e-12), p));
                  }});
  defs.push_back({"nearly_kahler", "(nabla_X J) X = 0 on S^6",
                  [=](Param r, const RunParams& p) {
                    return nearly_kahler(r, p.samples, seed_for(p, "nearly_kahler", r), p.diff,
                                         with_override(E::holds(1e-5), p));
                  }});
  defs.push_back({"psi_phi_prime", "psi = phi' on M_0, reported elsewhere",
                  [=](Param r, const RunParams& p) {
                    const E e = r.r() == 0.0 ? E::holds(1e-5) : E::informational();
                    return psi_phi_prime(r, p.samples, seed_for(p, "psi_phi_prime", r), p.diff,
                                         with_override(e, p));
                  }});
  defs.push_back({"pullback", "F_r pullback of the M_0 structure, reported only",
                  [=](Param r, const RunParams& p) {
                    return pullback(r, p.samples, seed_for(p, "pullback", r));
                  }});
  return defs;
}

}  // namespace

const std::vector<CheckDefinition>& registry() {
  static const std::vector<CheckDefinition> defs = build_registry();
  return defs;
}

const CheckDefinition* find_check(const std::string& id) {
  for (const auto& d : registry()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& check_id, double r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : check_id) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed ^ h ^ std::bit_cast<std::uint64_t>(r == 0.0 ? 0.0 : r);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace umbilic::checks
