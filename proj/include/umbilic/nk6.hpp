#pragma once
/**
 * @file nk6.hpp
 * @brief The unit 6-sphere in Im(O) with J_x y = x x y.
 *
 * Fields on S^6 are handled as ambient fields; J is extended off the sphere by
 * radial normalization so difference stencils stay well defined. Every
 * reported value is taken at a sphere point.
 */

#include "umbilic/geometry.hpp"
#include "umbilic/vec.hpp"

namespace umbilic::nk6 {

using geometry::DiffConfig;
using geometry::VectorField;

class SpherePoint {
 public:
  /// @throws PreconditionError unless ||x| - 1| <= 1e-12.
  static SpherePoint from(const Vec7& x);
  /// x / |x|. @throws PreconditionError if x == 0.
  static SpherePoint normalize(const Vec7& x);

  const Vec7& position() const { return x_; }

 private:
  explicit SpherePoint(const Vec7& x) : x_(x) {}
  Vec7 x_;
};

/// v - <v, p> p.
Vec7 tangent_project(const SpherePoint& p, const Vec7& v);

/// J_p y = p x y. Inputs with |<y,p>| <= 1e-8 (1 + |y|) are re-projected
/// onto T_p S^6 first.
/// @throws PreconditionError if y is farther from tangent than that.
Vec7 J(const SpherePoint& p, const Vec7& y);

/// The field q -> J_{q/|q|}(P_{q/|q|} Y(q)).
VectorField J_field(const VectorField& Y);

/// Levi-Civita connection of the induced metric: P_p(D_{X(p)} Y).
Vec7 nabla_bar(const VectorField& X, const VectorField& Y, const SpherePoint& p,
               const DiffConfig& cfg);

/// G(X, Y) = (nabla_X J) Y = nabla_X(JY) - J(nabla_X Y) at p.
Vec7 G(const SpherePoint& p, const VectorField& X, const VectorField& Y, const DiffConfig& cfg);

/// Rotation field q -> (v p^T - p v^T) q, tangent to every sphere about the
/// origin and equal to v at p. v is projected onto T_p S^6 first.
VectorField tangent_extension(const SpherePoint& p, const Vec7& v);

}  // namespace umbilic::nk6
