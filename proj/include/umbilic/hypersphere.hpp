#pragma once
/**
 * @file hypersphere.hpp
 * @brief The hyperspheres M_r = S^6 ∩ {x7 = r}, -1 < r < 1.
 *
 * A point of M_r is sum_{i<=6} x_i e_i + r e7 with sum x_i^2 = 1 - r^2.
 * Tangent fields are ambient closed-form fields; connections are obtained by
 * differentiating them in E^7 and projecting back, the outer derivative of
 * an iterated connection using the coarser step h2.
 */

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "umbilic/geometry.hpp"
#include "umbilic/nk6.hpp"
#include "umbilic/vec.hpp"

namespace umbilic::hypersphere {

using geometry::DiffConfig;
using geometry::VectorField;

/// |r| at or beyond this bound is rejected: 1/sqrt(1-r^2) blows up.
inline constexpr double kMaxAbsR = 0.99;

class Param {
 public:
  /// @throws ParameterError unless |r| < kMaxAbsR.
  explicit Param(double r);

  double r() const { return r_; }
  /// sqrt(1 - r^2), the radius of the x-block.
  double s() const { return s_; }
  /// r / sqrt(1 - r^2). The shape operator is minus this times the identity.
  double umbilic_factor() const { return r_ / s_; }

 private:
  double r_;
  double s_;
};

class MPoint {
 public:
  /// @throws PreconditionError unless |sum x_i^2 - (1 - r^2)| <= 1e-12.
  static MPoint from_coords(Param r, const std::array<double, 6>& x);
  /// Like from_coords, but rescales the x-block when the invariant fails by
  /// at most `tol`. @throws PreconditionError beyond that.
  static MPoint renormalized(Param r, const std::array<double, 6>& x, double tol = 1e-8);
  /// Nearest point: x-block of q scaled to radius sqrt(1-r^2), x7 = r.
  /// @throws DomainError if the x-block of q vanishes.
  static MPoint project(Param r, const Vec7& q);

  Param param() const { return r_; }
  double r() const { return r_.r(); }
  const Vec7& position() const { return x_; }
  double operator[](int i) const { return x_(i - 1); }  ///< 1-based x_i
  nk6::SpherePoint on_sphere() const { return nk6::SpherePoint::normalize(x_); }

 private:
  MPoint(Param r, const Vec7& x) : r_(r), x_(x) {}
  Param r_;
  Vec7 x_;
};

/// (cos t) e7 + (sin t / sqrt(1-r^2)) sum x_i e_i, 0 <= t <= pi.
/// @throws ParameterError for t outside [0, pi].
nk6::SpherePoint meridian_curve(const MPoint& x, double t);
/// Derivative of the meridian curve in t.
Vec7 meridian_velocity(const MPoint& x, double t);

/// nu = (r/sqrt(1-r^2)) sum x_i e_i - sqrt(1-r^2) e7.
Vec7 unit_normal(const MPoint& x);
/// nu as an ambient field, with r read from the point's x7 coordinate.
VectorField unit_normal_field();
/// Outward normal of S^6 (the position vector), as a field.
VectorField position_field();

/// X_{a,b} = -x_b e_a + x_a e_b, 1 <= a, b <= 6, a != b.
/// @throws IndexError otherwise.
Vec7 coordinate_tangent(int a, int b, const MPoint& x);
VectorField coordinate_tangent_field(int a, int b);

/// Removes the N and nu components of v at x.
Vec7 tangent_project(const MPoint& x, const Vec7& v);
bool is_tangent(const MPoint& x, const Vec7& v, double tol = 1e-8);
/// @throws PreconditionError unless is_tangent(x, v).
void require_tangent(const MPoint& x, const Vec7& v, const char* what);

/// The field q -> Y(project(q)), so that stencils sample Y on M_r only.
VectorField restrict_to(Param r, const VectorField& Y);

/// A v = -(D_v nu)^T. @throws PreconditionError if v is not tangent.
Vec7 shape_operator(const MPoint& x, const Vec7& v, const DiffConfig& cfg);

/// Induced connection: tangential part of D_{X(x)} Y.
Vec7 nabla_m(const VectorField& X, const VectorField& Y, const MPoint& x, const DiffConfig& cfg);

/// The field q -> nabla_m(X, Y, project(q)).
VectorField connection_field(Param r, const VectorField& X, const VectorField& Y,
                             const DiffConfig& cfg);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
Vec7 riemann(const VectorField& X, const VectorField& Y, const VectorField& Z, const MPoint& x,
             const DiffConfig& cfg);

/// <R(U,V)V, U> / (|u|^2 |v|^2 - <u,v>^2) with U, V the rotation extensions of u, v.
double sectional_curvature(const MPoint& x, const Vec7& u, const Vec7& v, const DiffConfig& cfg);

/// Rotation of the x-block, tangent to every M_r, equal to v at x.
VectorField killing_extension(const MPoint& x, const Vec7& v);

struct ScalarInvariants {
  double tau;    ///< scalar curvature 20 / (1 - r^2)
  double f;      ///< g(A xi, xi)
  double alpha;  ///< tr(A) / 5
  double identity_residual;  ///< tau - (20 + 5 alpha (5 alpha - f))
};
ScalarInvariants scalar_invariants(Param r);

/// F_r(x) = x-block / sqrt(1 - r^2), a point of M_0.
MPoint F_map(const MPoint& x);
MPoint F_inverse(const MPoint& y, Param r);
/// Differential of F_r at any point: x-block scaled by 1/sqrt(1-r^2).
Vec7 F_pushforward(Param r, const Vec7& v);
Vec7 F_inverse_pushforward(Param r, const Vec7& w);

/// Seeded generator of points and tangent vectors on one M_r.
class Sampler {
 public:
  Sampler(Param r, std::uint64_t seed);

  Param param() const { return r_; }

  /// Uniform on M_r: six standard normals scaled to radius sqrt(1-r^2).
  MPoint point();
  /// A point with |x_a| >= min_abs; otherwise-uniform points are kept and
  /// the rest get x_a redrawn uniformly in [min_abs, sqrt(1-r^2)].
  /// @throws ParameterError if min_abs >= sqrt(1-r^2).
  MPoint point_with_coordinate_at_least(int a, double min_abs);

  Vec7 unit_tangent(const MPoint& x);
  /// Unit tangent orthogonal to xi as well.
  Vec7 unit_horizontal(const MPoint& x, const Vec7& xi);
  std::pair<Vec7, Vec7> orthonormal_pair(const MPoint& x);
  std::array<Vec7, 5> orthonormal_frame(const MPoint& x);
  /// Unit vector tangent to S^6 at p.
  Vec7 unit_sphere_tangent(const nk6::SpherePoint& p);

  double uniform(double lo, double hi);
  Vec7 gaussian7();

 private:
  Param r_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::vector<MPoint> sample_points(Param r, std::size_t n, std::uint64_t seed);

}  // namespace umbilic::hypersphere
