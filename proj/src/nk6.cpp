#include "umbilic/nk6.hpp"

#include <cmath>

#include "umbilic/cayley.hpp"
#include "umbilic/errors.hpp"

namespace umbilic::nk6 {

SpherePoint SpherePoint::from(const Vec7& x) {
  if (std::abs(x.norm() - 1.0) > 1e-12) {
    throw PreconditionError("point is not on the unit 6-sphere");
  }
  return SpherePoint(x);
}

SpherePoint SpherePoint::normalize(const Vec7& x) {
  const double n = x.norm();
  if (!(n > 0.0)) throw PreconditionError("cannot normalize the origin onto S^6");
  return SpherePoint(x / n);
}

Vec7 tangent_project(const SpherePoint& p, const Vec7& v) {
  const Vec7& x = p.position();
  return v - v.dot(x) * x;
}

Vec7 J(const SpherePoint& p, const Vec7& y) {
  const double off = std::abs(y.dot(p.position()));
  if (off > 1e-8 * (1.0 + y.norm())) {
    throw PreconditionError("J applied to a vector that is not tangent to S^6");
  }
  return cayley::cross(p.position(), tangent_project(p, y));
}

VectorField J_field(const VectorField& Y) {
  return VectorField("J(" + Y.name() + ")", [Y](const Vec7& q) {
    const auto p = SpherePoint::normalize(q);
    return J(p, tangent_project(p, Y(q)));
  });
}

Vec7 nabla_bar(const VectorField& X, const VectorField& Y, const SpherePoint& p,
               const DiffConfig& cfg) {
  const Vec7 dir = X(p.position());
  if (dir.squaredNorm() == 0.0) return Vec7::Zero();
  return tangent_project(p, geometry::directional_derivative(Y, p.position(), dir, cfg));
}

Vec7 G(const SpherePoint& p, const VectorField& X, const VectorField& Y, const DiffConfig& cfg) {
  return nabla_bar(X, J_field(Y), p, cfg) - J(p, nabla_bar(X, Y, p, cfg));
}

VectorField tangent_extension(const SpherePoint& p, const Vec7& v) {
  const Vec7& x = p.position();
  const Vec7 t = tangent_project(p, v);
  const Eigen::Matrix<double, 7, 7> omega = t * x.transpose() - x * t.transpose();
  return VectorField("rot", [omega](const Vec7& q) -> Vec7 { return omega * q; });
}

}  // namespace umbilic::nk6
