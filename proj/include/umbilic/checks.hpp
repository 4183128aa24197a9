#pragma once
/**
 * @file checks.hpp
 * @brief Seeded sample checks of every identity and inequality on M_r.
 *
 * Each check draws its samples from a Sampler seeded with `seed`, reduces the
 * per-sample residuals by max/min, and judges them with the given Expectation.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umbilic/acms.hpp"
#include "umbilic/hypersphere.hpp"
#include "umbilic/report.hpp"

namespace umbilic::checks {

using geometry::DiffConfig;
using hypersphere::Param;

/// | |ab| - |a||b| | / (1 + |a||b|) over n random octonion pairs.
CheckReport composition_law(std::size_t n, std::uint64_t seed,
                            Expectation expect = Expectation::holds(1e-12));

/// |G(X, X)| at n points of M_r (viewed on S^6) with unit X tangent to S^6.
CheckReport nearly_kahler(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                          Expectation expect = Expectation::holds(1e-5));

/// |A v + (r/sqrt(1-r^2)) v| for unit tangent v.
CheckReport umbilicity(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                       Expectation expect = Expectation::holds(1e-6));

/// |K(u, v) - 1/(1-r^2)| over orthonormal tangent pairs.
CheckReport curvature(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                      Expectation expect = Expectation::holds(1e-3));

/// |tau - (20 + 5 alpha (5 alpha - f))|; f and alpha are also recomputed from
/// the numerical shape operator at n points and reported as observations.
CheckReport scalar_identity(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                            Expectation expect = Expectation::holds(1e-12));

/// Max over samples of the structure axioms, the metric compatibility, the
/// skewness of phi and the tangency of phi v.
CheckReport acms_axioms(const acms::AcmStructure& S, Param r, std::size_t n, std::uint64_t seed,
                        Expectation expect = Expectation::holds(1e-9));

/// |(eta ^ d eta ^ d eta)(frame)| on orthonormal tangent frames.
CheckReport contact_form(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                         const geometry::OneForm& eta = acms::eta_form(),
                         Expectation expect = Expectation::violated_everywhere(1e-3));

/// |d eta(u, v) - g(u, phi v)| over random unit tangent pairs and, at each
/// point, the pairs (Y_{1,2}, Y_{1,b}) and (Y_{1,b}, xi), Y_{1,b} = X_{1,b} - eta(X_{1,b}) xi.
CheckReport contact_metric(const acms::AcmStructure& S, Param r, std::size_t n,
                           std::uint64_t seed, const DiffConfig& cfg, Expectation expect);

/// Witness that the natural structure is not contact metric: for each
/// a = 1..6 in turn, a point with |x_a| >= 0.3 and the pair (X_{a,c}, X_{a,d})
/// where {a, c, d} spans a quaternion subalgebra free of eta's pairings.
/// Residual |d eta(X_{a,c}, X_{a,d}) - g(X_{a,c}, phi X_{a,d})|.
CheckReport theorem_c_witness(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                              Expectation expect = Expectation::violated_everywhere(0.02));

/// The (c, d) partner indices used by theorem_c_witness for index a.
std::pair<int, int> witness_partners(int a);

/// |(nabla_X phi) Y - g(X,Y) xi + eta(Y) X| for unit tangent X, Y.
CheckReport sasakian(const acms::AcmStructure& S, Param r, std::size_t n, std::uint64_t seed,
                     const DiffConfig& cfg, Expectation expect);

/// |g((A phi + phi A) X, Y) + 2 g(phi X, Y)| with A from the numerical shape
/// operator; always informational.
CheckReport theorem_b(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg);

/// max(|nabla_xi xi|, |A xi + (r/sqrt(1-r^2)) xi|) for the given unit field.
CheckReport hopf(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                 const geometry::VectorField& xi = acms::xi_field(),
                 Expectation expect = Expectation::holds(1e-6));

/// |psi v - phi' v| over unit tangents v and v = xi.
CheckReport psi_phi_prime(Param r, std::size_t n, std::uint64_t seed, const DiffConfig& cfg,
                          Expectation expect = Expectation::holds(1e-5));

/// Pullback of the M_0 structure by F_r: conformal factor of F_r^* g_0, and the
/// residuals of (F_r^{-1})_* xi_0 against xi and F_r^* eta_0 against eta.
/// Always informational.
CheckReport pullback(Param r, std::size_t n, std::uint64_t seed);

struct RunParams {
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  DiffConfig diff{};
  std::optional<double> tolerance_override;
};

struct CheckDefinition {
  std::string id;
  std::string description;
  std::function<CheckReport(Param, const RunParams&)> run;
};

/// Every check run by `nk6 verify`, each with the outcome the geometry
/// predicts at the given r.
const std::vector<CheckDefinition>& registry();
const CheckDefinition* find_check(const std::string& id);

/// Seed for one (check, r) task, derived deterministically from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& check_id, double r);

}  // namespace umbilic::checks
