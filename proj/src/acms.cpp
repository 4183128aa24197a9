#include "umbilic/acms.hpp"

#include <cmath>

#include "umbilic/cayley.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/nk6.hpp"

namespace umbilic::acms {

namespace {

Vec7 xi_coordinates(const Vec7& q, double s) {
  Vec7 v;
  v << q(5), q(4), q(3), -q(2), -q(1), -q(0), 0.0;
  return v / s;
}

double height_radius(const Vec7& q) {
  const double r = q(6);
  if (!(std::abs(r) < 1.0)) throw DomainError("xi and eta are undefined where |x7| >= 1");
  return std::sqrt(1.0 - r * r);
}

}  // namespace

Vec7 xi(const MPoint& x) {
  return -cayley::cross(x.position(), hypersphere::unit_normal(x));
}

Vec7 xi_closed_form(const MPoint& x) { return xi_coordinates(x.position(), x.param().s()); }

VectorField xi_field() {
  return VectorField("xi", [](const Vec7& q) { return xi_coordinates(q, height_radius(q)); });
}

OneForm eta_form() {
  return OneForm("eta", [](const Vec7& q) { return xi_coordinates(q, height_radius(q)); });
}

double eta(const MPoint& x, const Vec7& v) { return xi_closed_form(x).dot(v); }

Vec7 phi_natural(const MPoint& x, const Vec7& v) {
  hypersphere::require_tangent(x, v, "phi");
  return nk6::J(x.on_sphere(), v) - eta(x, v) * hypersphere::unit_normal(x);
}

Vec7 phi_prime(const MPoint& x, const Vec7& v) {
  hypersphere::require_tangent(x, v, "phi'");
  const Vec7 horizontal = v - eta(x, v) * xi_closed_form(x);
  // nu and the horizontal part are orthogonal, so the product is the cross product.
  return -cayley::cross(hypersphere::unit_normal(x), horizontal);
}

Vec7 psi(const MPoint& x, const Vec7& v, const DiffConfig& cfg) {
  hypersphere::require_tangent(x, v, "psi");
  const auto p = x.on_sphere();
  return nk6::G(p, nk6::tangent_extension(p, v), hypersphere::unit_normal_field(), cfg);
}

AcmStructure natural_structure() {
  return {"natural", phi_natural, xi_closed_form, eta};
}

AcmStructure prime_structure() {
  return {"prime", phi_prime, xi_closed_form, eta};
}

VectorField apply_phi(const AcmStructure& S, hypersphere::Param r, const VectorField& Y) {
  return VectorField("phi" + Y.name(), [S, r, Y](const Vec7& q) {
    const auto x = MPoint::project(r, q);
    return S.phi(x, hypersphere::tangent_project(x, Y(x.position())));
  });
}

}  // namespace umbilic::acms
