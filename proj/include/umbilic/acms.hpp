#pragma once
/**
 * @file acms.hpp
 * @brief Almost contact metric structures (phi, xi, eta, g) on M_r.
 *
 * Two structures share xi = -J nu and its dual 1-form eta:
 *  - natural: phi X = J X - eta(X) nu
 *  - prime:   phi' X = -nu (X - eta(X) xi), with phi' xi = 0
 * g is the restriction of the Euclidean inner product.
 */

#include <functional>
#include <string>

#include "umbilic/geometry.hpp"
#include "umbilic/hypersphere.hpp"

namespace umbilic::acms {

using geometry::DiffConfig;
using geometry::OneForm;
using geometry::VectorField;
using hypersphere::MPoint;

/// xi = -N x nu, computed through the octonion product.
Vec7 xi(const MPoint& x);
/// (x6, x5, x4, -x3, -x2, -x1, 0) / sqrt(1 - r^2).
Vec7 xi_closed_form(const MPoint& x);
/// xi as an ambient field, r read from x7.
VectorField xi_field();

/// eta = (x6 dx1 + x5 dx2 + x4 dx3 - x3 dx4 - x2 dx5 - x1 dx6) / sqrt(1 - r^2).
OneForm eta_form();
double eta(const MPoint& x, const Vec7& v);

/// @throws PreconditionError if v is not tangent to M_r at x.
Vec7 phi_natural(const MPoint& x, const Vec7& v);
/// @throws PreconditionError if v is not tangent to M_r at x.
Vec7 phi_prime(const MPoint& x, const Vec7& v);

/// psi v = G(v, nu), with v extended by a rotation of S^6 and nu by its
/// ambient closed form.
Vec7 psi(const MPoint& x, const Vec7& v, const DiffConfig& cfg);

struct AcmStructure {
  using Endomorphism = std::function<Vec7(const MPoint&, const Vec7&)>;

  std::string name;
  Endomorphism phi;
  std::function<Vec7(const MPoint&)> xi;
  std::function<double(const MPoint&, const Vec7&)> eta;
};

AcmStructure natural_structure();
AcmStructure prime_structure();

/// The field q -> phi(project(q), Y(q)) on M_r.
VectorField apply_phi(const AcmStructure& S, hypersphere::Param r, const VectorField& Y);

}  // namespace umbilic::acms
