#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "umbilic/checks.hpp"
#include "umbilic/errors.hpp"

using namespace umbilic;
using namespace umbilic::checks;
using hypersphere::MPoint;
using hypersphere::Sampler;

namespace {

const DiffConfig kCfg{};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

acms::AcmStructure scaled(acms::AcmStructure S, double factor) {
  auto phi = S.phi;
  S.name += "_scaled";
  S.phi = [phi, factor](const MPoint& x, const Vec7& v) { return Vec7(factor * phi(x, v)); };
  return S;
}

}  // namespace

TEST(Report, DecideCriteria) {
  EXPECT_EQ(decide(Criterion::max_at_most, 1e-7, 0.0, 1e-6), Verdict::pass);
  EXPECT_EQ(decide(Criterion::max_at_most, 1e-5, 0.0, 1e-6), Verdict::fail);
  EXPECT_EQ(decide(Criterion::max_at_most, std::nan(""), 0.0, 1e-6), Verdict::fail);
  EXPECT_EQ(decide(Criterion::min_at_least, 1.0, 0.05, 0.02), Verdict::pass);
  EXPECT_EQ(decide(Criterion::min_at_least, 1.0, 0.01, 0.02), Verdict::fail);
  EXPECT_EQ(decide(Criterion::max_at_least, 0.5, 0.0, 0.01), Verdict::pass);
  EXPECT_EQ(decide(Criterion::max_at_least, 0.001, 0.0, 0.01), Verdict::fail);
  EXPECT_EQ(decide(Criterion::informational, 1e9, 0.0, 0.0), Verdict::informational);
}

TEST(Report, AccumulatorWitnessAndEmpty) {
  ResidualAccumulator acc;
  EXPECT_EQ(acc.finish("x", 0.0, Expectation::holds(1.0)).verdict, Verdict::fail);
  acc.add(0.5, basis7(1));
  acc.add(2.0, basis7(2));
  acc.add(0.1, basis7(3));
  const auto hi = acc.finish("x", 0.0, Expectation::holds(1.0));
  EXPECT_EQ(hi.verdict, Verdict::fail);
  EXPECT_EQ(hi.witness->point, basis7(2));
  const auto lo = acc.finish("x", 0.0, Expectation::violated_everywhere(0.2));
  EXPECT_EQ(lo.verdict, Verdict::fail);
  EXPECT_EQ(lo.witness->point, basis7(3));
  acc.add(std::nan(""), basis7(4));
  EXPECT_TRUE(std::isinf(acc.max()));
}

TEST(Report, JsonHasSchemaFields) {
  const auto rep = umbilicity(hypersphere::Param(0.6), 5, 1, kCfg);
  const auto j = to_json(rep);
  for (const char* key : {"check_id", "r", "samples", "max_residual", "tolerance", "verdict",
                          "witness", "criterion", "observations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Checks, ZeroSamplesRejected) {
  EXPECT_THROW(umbilicity(hypersphere::Param(0.0), 0, 1, kCfg), ParameterError);
  EXPECT_THROW(composition_law(0, 1), ParameterError);
}

TEST(Checks, CompositionLaw) {
  EXPECT_TRUE(composition_law(10000, 42).passed());
}

TEST(Checks, AxiomsHoldForBothStructures) {
  for (double r : {-0.6, 0.0, 0.6, kInvSqrt2}) {
    EXPECT_EQ(acms_axioms(acms::natural_structure(), hypersphere::Param(r), 500, 1).verdict,
              Verdict::pass);
    EXPECT_EQ(acms_axioms(acms::prime_structure(), hypersphere::Param(r), 500, 1).verdict,
              Verdict::pass);
  }
}

TEST(NegativeControl, CorruptedPhiFailsAxioms) {
  for (const auto& S : {acms::natural_structure(), acms::prime_structure()}) {
    const auto rep = acms_axioms(scaled(S, 1.1), hypersphere::Param(0.3), 200, 2);
    EXPECT_EQ(rep.verdict, Verdict::fail) << S.name;
    EXPECT_GT(rep.max_residual, 0.1);
  }
}

TEST(NegativeControl, ClosedOneFormIsNotContact) {
  const geometry::OneForm constant("constant", [](const Vec7&) {
    Vec7 c;
    c << 0.3, -0.1, 0.7, 0.2, 0.0, 1.0, 0.0;
    return c;
  });
  const auto rep = contact_form(hypersphere::Param(0.0), 100, 3, kCfg, constant);
  EXPECT_EQ(rep.verdict, Verdict::fail);
  EXPECT_LT(rep.max_residual, 1e-6);
}

TEST(NegativeControl, NormalizedX12IsNotHopf) {
  const geometry::VectorField x12("X12/|X12|", [](const Vec7& q) {
    Vec7 v = Vec7::Zero();
    v(0) = -q(1);
    v(1) = q(0);
    return Vec7(v / v.norm());
  });
  const auto rep = hopf(hypersphere::Param(0.0), 100, 4, kCfg, x12);
  EXPECT_EQ(rep.verdict, Verdict::fail);
  EXPECT_GT(rep.max_residual, 1e-2);
}

TEST(Checks, ContactFormForAllR) {
  for (double r : {-0.9, 0.0, 0.9}) {
    const auto rep = contact_form(hypersphere::Param(r), 300, 5, kCfg);
    EXPECT_EQ(rep.verdict, Verdict::pass) << r;
  }
}

TEST(Witness, PartnersSpanEtaFreeQuaternionTriples) {
  EXPECT_EQ(witness_partners(1), (std::pair{2, 3}));
  EXPECT_EQ(witness_partners(2), (std::pair{1, 3}));
  EXPECT_EQ(witness_partners(3), (std::pair{1, 2}));
  EXPECT_EQ(witness_partners(4), (std::pair{1, 5}));
  EXPECT_EQ(witness_partners(5), (std::pair{1, 4}));
  EXPECT_EQ(witness_partners(6), (std::pair{3, 5}));
  EXPECT_THROW(witness_partners(7), IndexError);
}

TEST(Witness, GapMatchesClosedForm) {
  // |d eta(X_ac, X_ad) - g(X_ac, phi X_ad)| = |x_a| (x_a^2 + x_c^2 + x_d^2), d eta = 0.
  const auto eta = acms::eta_form();
  for (double r : {-0.7, 0.0, 0.7, kInvSqrt2}) {
    Sampler sampler(hypersphere::Param(r), 6);
    for (int a = 1; a <= 6; ++a) {
      const auto [c, d] = witness_partners(a);
      for (int k = 0; k < 20; ++k) {
        const auto x = sampler.point();
        const Vec7 X = hypersphere::coordinate_tangent(a, c, x);
        const Vec7 Y = hypersphere::coordinate_tangent(a, d, x);
        const double deta = geometry::exterior_derivative(eta, x.position(), X, Y, kCfg);
        EXPECT_NEAR(deta, 0.0, 1e-8);
        const double expected = std::abs(x[a]) * (x[a] * x[a] + x[c] * x[c] + x[d] * x[d]);
        EXPECT_NEAR(std::abs(deta - X.dot(acms::phi_natural(x, Y))), expected, 1e-8);
      }
    }
  }
}

TEST(Witness, NaturalStructureNeverContactMetric) {
  for (double r : {-0.7, 0.0, kInvSqrt2, 0.7}) {
    const auto rep = theorem_c_witness(hypersphere::Param(r), 1000, 7, kCfg);
    EXPECT_EQ(rep.verdict, Verdict::pass) << r;
    EXPECT_GE(rep.min_residual, 0.027 - 1e-9) << r;
  }
}

TEST(Checks, PrimeContactMetricOnlyAtZero) {
  const auto at0 = contact_metric(acms::prime_structure(), hypersphere::Param(0.0), 1000, 8, kCfg,
                                  Expectation::holds(1e-8));
  EXPECT_EQ(at0.verdict, Verdict::pass);
  const auto at5 = contact_metric(acms::prime_structure(), hypersphere::Param(0.5), 1000, 8, kCfg,
                                  Expectation::violated_somewhere(1e-2));
  EXPECT_EQ(at5.verdict, Verdict::pass);
  EXPECT_GT(*at5.observation("witness_pairs_max"), 1e-2);
}

TEST(Checks, SasakianOnlyForPrimeAtZero) {
  const hypersphere::Param zero(0.0), half(0.5);
  EXPECT_LE(sasakian(acms::prime_structure(), zero, 300, 9, kCfg, Expectation::holds(1e-5)).max_residual,
            1e-5);
  EXPECT_GE(sasakian(acms::prime_structure(), half, 300, 9, kCfg, Expectation::holds(1e-5)).max_residual,
            1e-2);
  EXPECT_GE(sasakian(acms::natural_structure(), zero, 300, 9, kCfg, Expectation::holds(1e-5)).max_residual,
            1e-2);
}

TEST(Checks, AnticommutatorResidualScalesWithFactor) {
  for (double r : {0.0, 0.3, kInvSqrt2}) {
    const hypersphere::Param p(r);
    const auto rep = theorem_b(p, 200, 10, kCfg);
    EXPECT_EQ(rep.verdict, Verdict::informational);
    const double factor = std::abs(2.0 - 2.0 * p.umbilic_factor());
    EXPECT_NEAR(*rep.observation("predicted_factor"), factor, 1e-15);
    EXPECT_NEAR(rep.max_residual, factor * *rep.observation("max_abs_g_phi"), 1e-7);
  }
  EXPECT_LE(theorem_b(hypersphere::Param(kInvSqrt2), 200, 10, kCfg).max_residual, 1e-8);
  EXPECT_GT(theorem_b(hypersphere::Param(0.0), 200, 10, kCfg).max_residual, 0.5);
}

TEST(Checks, HopfForAllR) {
  for (double r : {-0.8, 0.0, 0.8}) {
    EXPECT_EQ(hopf(hypersphere::Param(r), 200, 11, kCfg).verdict, Verdict::pass) << r;
  }
}

TEST(Checks, Pullback) {
  const auto id = pullback(hypersphere::Param(0.0), 100, 12);
  EXPECT_EQ(id.verdict, Verdict::informational);
  EXPECT_NEAR(*id.observation("conformal_factor"), 1.0, 1e-15);
  EXPECT_LE(id.max_residual, 1e-12);
  const auto rep = pullback(hypersphere::Param(0.6), 100, 12);
  EXPECT_NEAR(*rep.observation("conformal_factor"), 1.5625, 1e-12);
  EXPECT_LE(*rep.observation("conformal_factor_variance"), 1e-10);
  EXPECT_LE(*rep.observation("xi_collinearity_residual"), 1e-10);
  EXPECT_NEAR(*rep.observation("xi_scale"), 0.8, 1e-12);
  EXPECT_NEAR(*rep.observation("eta_scale"), 1.25, 1e-9);
}

TEST(Checks, ScalarIdentityObservations) {
  const auto rep = scalar_identity(hypersphere::Param(0.6), 20, 13, kCfg);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_NEAR(*rep.observation("tau"), 31.25, 1e-12);
  EXPECT_LE(*rep.observation("f_numeric_deviation"), 1e-8);
  EXPECT_LE(*rep.observation("alpha_numeric_deviation"), 1e-8);
}

TEST(Registry, IdsAreUniqueAndSeedsDeterministic) {
  std::set<std::string> ids;
  for (const auto& d : registry()) EXPECT_TRUE(ids.insert(d.id).second) << d.id;
  EXPECT_EQ(ids.size(), 15u);
  EXPECT_NE(find_check("hopf"), nullptr);
  EXPECT_EQ(find_check("nope"), nullptr);
  EXPECT_EQ(derive_seed(42, "hopf", 0.6), derive_seed(42, "hopf", 0.6));
  EXPECT_NE(derive_seed(42, "hopf", 0.6), derive_seed(42, "hopf", -0.6));
  EXPECT_NE(derive_seed(42, "hopf", 0.6), derive_seed(43, "hopf", 0.6));
  EXPECT_EQ(derive_seed(42, "hopf", 0.0), derive_seed(42, "hopf", -0.0));
}

TEST(Registry, ToleranceOverrideReplacesThreshold) {
  RunParams p;
  p.samples = 20;
  p.tolerance_override = 1e-20;
  const auto rep = find_check("nearly_kahler")->run(hypersphere::Param(0.0), p);
  EXPECT_EQ(rep.tolerance, 1e-20);
  EXPECT_EQ(rep.verdict, Verdict::fail);
}

TEST(Registry, SameSeedSameReport) {
  RunParams p;
  p.samples = 50;
  for (const auto& d : registry()) {
    const auto a = to_json(d.run(hypersphere::Param(0.6), p)).dump();
    const auto b = to_json(d.run(hypersphere::Param(0.6), p)).dump();
    EXPECT_EQ(a, b) << d.id;
  }
}
