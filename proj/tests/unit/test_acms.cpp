#include <gtest/gtest.h>

#include <cmath>

#include "umbilic/acms.hpp"
#include "umbilic/cayley.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/hypersphere.hpp"

using namespace umbilic;
using namespace umbilic::acms;
using hypersphere::MPoint;
using hypersphere::Param;
using hypersphere::Sampler;

namespace {

const geometry::DiffConfig kCfg{};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

MPoint e1_on_m0() { return MPoint::from_coords(Param(0.0), {1, 0, 0, 0, 0, 0}); }

}  // namespace

TEST(Xi, Examples) {
  EXPECT_LE((xi(e1_on_m0()) + basis7(6)).norm(), 1e-15);
}

TEST(Xi, ClosedFormUnitAndTangent) {
  for (double r : {-0.9, -0.6, 0.0, 0.6, kInvSqrt2, 0.9}) {
    Sampler sampler(Param(r), 1);
    for (int k = 0; k < 200; ++k) {
      const auto x = sampler.point();
      const Vec7 v = xi(x);
      EXPECT_LE((v - xi_closed_form(x)).norm(), 1e-12);
      EXPECT_LE((v - xi_field()(x.position())).norm(), 1e-12);
      EXPECT_NEAR(v.norm(), 1.0, 1e-12);
      EXPECT_NEAR(v.dot(x.position()), 0.0, 1e-12);
      EXPECT_NEAR(v.dot(hypersphere::unit_normal(x)), 0.0, 1e-12);
      // xi = -J nu
      EXPECT_LE((v + nk6::J(x.on_sphere(), hypersphere::unit_normal(x))).norm(), 1e-12);
    }
  }
}

TEST(Eta, Examples) {
  const auto x = e1_on_m0();
  EXPECT_LE((eta_form().coefficients(x.position()) + basis7(6)).norm(), 1e-15);
  EXPECT_EQ(eta(x, basis7(2)), 0.0);
  Sampler sampler(Param(0.4), 2);
  for (int k = 0; k < 100; ++k) {
    const auto p = sampler.point();
    EXPECT_NEAR(eta(p, xi(p)), 1.0, 1e-12);
    EXPECT_NEAR(eta(p, hypersphere::unit_normal(p)), 0.0, 1e-12);
    const Vec7 v = sampler.unit_tangent(p);
    EXPECT_NEAR(eta(p, v), v.dot(xi(p)), 1e-15);
  }
  Vec7 pole = Vec7::Zero();
  pole(6) = 1.0;
  EXPECT_THROW(eta_form().coefficients(pole), DomainError);
  EXPECT_THROW(xi_field()(pole), DomainError);
}

TEST(PhiNatural, WitnessValue) {
  const auto x = MPoint::from_coords(Param(0.0), {0.6, 0.8, 0, 0, 0, 0});
  const Vec7 X12 = hypersphere::coordinate_tangent(1, 2, x);
  const Vec7 X13 = hypersphere::coordinate_tangent(1, 3, x);
  EXPECT_NEAR(X12.dot(phi_natural(x, X13)), -0.6, 1e-12);
}

TEST(PhiNatural, RejectsNonTangent) {
  EXPECT_THROW(phi_natural(e1_on_m0(), basis7(1)), PreconditionError);
  EXPECT_THROW(phi_prime(e1_on_m0(), basis7(7)), PreconditionError);
}

TEST(PhiPrime, Examples) {
  const auto x = e1_on_m0();
  EXPECT_LE((phi_prime(x, basis7(2)) - basis7(5)).norm(), 1e-15);
  EXPECT_LE((phi_natural(x, basis7(2)) - basis7(3)).norm(), 1e-15);
  EXPECT_GT((phi_prime(x, basis7(2)) - phi_natural(x, basis7(2))).norm(), 1.0);
  EXPECT_LE(phi_prime(x, xi(x)).norm(), 1e-15);
}

TEST(Structures, AxiomsAtSampledPoints) {
  for (const auto& S : {natural_structure(), prime_structure()}) {
    for (double r : {-0.6, 0.0, 0.6, kInvSqrt2}) {
      Sampler sampler(Param(r), 3);
      for (int k = 0; k < 200; ++k) {
        const auto x = sampler.point();
        const Vec7 u = sampler.unit_tangent(x);
        const Vec7 w = sampler.unit_tangent(x);
        const Vec7 z = S.xi(x);
        const Vec7 pu = S.phi(x, u);
        EXPECT_LE((S.phi(x, pu) + u - S.eta(x, u) * z).norm(), 1e-10) << S.name;
        EXPECT_LE(S.phi(x, z).norm(), 1e-12) << S.name;
        EXPECT_NEAR(S.eta(x, pu), 0.0, 1e-10) << S.name;
        EXPECT_NEAR(pu.dot(hypersphere::unit_normal(x)), 0.0, 1e-10) << S.name;
        EXPECT_NEAR(pu.dot(x.position()), 0.0, 1e-10) << S.name;
        EXPECT_NEAR(pu.dot(S.phi(x, w)), u.dot(w) - S.eta(x, u) * S.eta(x, w), 1e-9) << S.name;
        EXPECT_NEAR(pu.dot(w) + u.dot(S.phi(x, w)), 0.0, 1e-9) << S.name;
      }
    }
  }
}

TEST(PhiPrime, IsMinusNuTimesHorizontalPart) {
  // Independent route: the octonion product of nu and the horizontal part.
  Sampler sampler(Param(0.0), 4);
  for (int k = 0; k < 100; ++k) {
    const auto x = sampler.point();
    const Vec7 v = sampler.unit_tangent(x);
    const Vec7 y = v - eta(x, v) * xi(x);
    const auto prod = cayley::multiply(cayley::Octonion::imaginary(hypersphere::unit_normal(x)),
                                       cayley::Octonion::imaginary(y));
    EXPECT_NEAR(prod.re(), 0.0, 1e-12);
    EXPECT_LE((phi_prime(x, v) + prod.imag()).norm(), 1e-12);
  }
}

TEST(Psi, MatchesPhiPrimeOnM0) {
  Sampler sampler(Param(0.0), 5);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto x = sampler.point();
    const Vec7 v = sampler.unit_tangent(x);
    const Vec7 pv = psi(x, v, kCfg);
    worst = std::max(worst, (pv - phi_prime(x, v)).norm());
    EXPECT_NEAR(pv.dot(v), 0.0, 1e-5);
  }
  EXPECT_LE(worst, 1e-5);
  EXPECT_LE(psi(e1_on_m0(), xi(e1_on_m0()), kCfg).norm(), 1e-5);
}

TEST(ApplyPhi, AgreesWithPointwisePhiOnTheManifold) {
  const Param r(0.5);
  Sampler sampler(r, 6);
  const auto Y = hypersphere::coordinate_tangent_field(2, 3);
  const auto phiY = apply_phi(prime_structure(), r, Y);
  for (int k = 0; k < 50; ++k) {
    const auto x = sampler.point();
    EXPECT_LE((phiY(x.position()) - phi_prime(x, Y(x.position()))).norm(), 1e-12);
  }
}
