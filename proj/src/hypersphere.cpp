#include "umbilic/hypersphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "umbilic/errors.hpp"

namespace umbilic::hypersphere {

Param::Param(double r) : r_(r), s_(0.0) {
  if (!std::isfinite(r) || std::abs(r) >= kMaxAbsR) {
    throw ParameterError("hypersphere parameter r must satisfy |r| < 0.99");
  }
  s_ = std::sqrt(1.0 - r * r);
}

namespace {

Vec7 embed(Param r, const std::array<double, 6>& x) {
  Vec7 v;
  for (int i = 0; i < 6; ++i) v(i) = x[static_cast<std::size_t>(i)];
  v(6) = r.r();
  return v;
}

double block_norm_sq(const Vec7& v) { return v.head<6>().squaredNorm(); }

}  // namespace

MPoint MPoint::from_coords(Param r, const std::array<double, 6>& x) {
  const Vec7 v = embed(r, x);
  if (std::abs(block_norm_sq(v) - r.s() * r.s()) > 1e-12) {
    throw PreconditionError("coordinates do not lie on M_r");
  }
  return MPoint(r, v);
}

MPoint MPoint::renormalized(Param r, const std::array<double, 6>& x, double tol) {
  const Vec7 v = embed(r, x);
  if (std::abs(block_norm_sq(v) - r.s() * r.s()) > tol) {
    throw PreconditionError("coordinates are too far from M_r to renormalize");
  }
  return project(r, v);
}

MPoint MPoint::project(Param r, const Vec7& q) {
  const double n = q.head<6>().norm();
  if (!(n > 0.0)) throw DomainError("projection onto M_r from the e7 axis");
  Vec7 v;
  v.head<6>() = q.head<6>() * (r.s() / n);
  v(6) = r.r();
  return MPoint(r, v);
}

nk6::SpherePoint meridian_curve(const MPoint& x, double t) {
  if (!(t >= 0.0 && t <= std::numbers::pi)) {
    throw ParameterError("meridian parameter t must lie in [0, pi]");
  }
  const double s = x.param().s();
  Vec7 g = (std::sin(t) / s) * x.position();
  g(6) = std::cos(t);
  return nk6::SpherePoint::normalize(g);
}

Vec7 meridian_velocity(const MPoint& x, double t) {
  const double s = x.param().s();
  Vec7 g = (std::cos(t) / s) * x.position();
  g(6) = -std::sin(t);
  return g;
}

Vec7 unit_normal(const MPoint& x) {
  const Param p = x.param();
  Vec7 n = p.umbilic_factor() * x.position();
  n(6) = -p.s();
  return n;
}

VectorField unit_normal_field() {
  return VectorField("nu", [](const Vec7& q) -> Vec7 {
    const double r = q(6);
    if (!(std::abs(r) < 1.0)) throw DomainError("nu is undefined where |x7| >= 1");
    const double s = std::sqrt(1.0 - r * r);
    Vec7 n = (r / s) * q;
    n(6) = -s;
    return n;
  });
}

VectorField position_field() {
  return VectorField("N", [](const Vec7& q) { return q; });
}

namespace {

void check_indices(int a, int b) {
  if (a < 1 || a > 6 || b < 1 || b > 6 || a == b) {
    throw IndexError("X_{a,b} needs distinct indices in [1,6], got " + std::to_string(a) + "," +
                     std::to_string(b));
  }
}

}  // namespace

Vec7 coordinate_tangent(int a, int b, const MPoint& x) {
  check_indices(a, b);
  Vec7 v = Vec7::Zero();
  v(a - 1) = -x[b];
  v(b - 1) = x[a];
  return v;
}

VectorField coordinate_tangent_field(int a, int b) {
  check_indices(a, b);
  return VectorField("X" + std::to_string(a) + std::to_string(b), [a, b](const Vec7& q) {
    Vec7 v = Vec7::Zero();
    v(a - 1) = -q(b - 1);
    v(b - 1) = q(a - 1);
    return v;
  });
}

Vec7 tangent_project(const MPoint& x, const Vec7& v) {
  const Vec7& n = x.position();
  const Vec7 nu = unit_normal(x);
  return v - v.dot(n) * n - v.dot(nu) * nu;
}

bool is_tangent(const MPoint& x, const Vec7& v, double tol) {
  const double bound = tol * (1.0 + v.norm());
  return std::abs(v.dot(x.position())) <= bound && std::abs(v.dot(unit_normal(x))) <= bound;
}

void require_tangent(const MPoint& x, const Vec7& v, const char* what) {
  if (!is_tangent(x, v)) {
    throw PreconditionError(std::string(what) + ": vector is not tangent to M_r");
  }
}

VectorField restrict_to(Param r, const VectorField& Y) {
  return VectorField(Y.name(), [r, Y](const Vec7& q) { return Y(MPoint::project(r, q).position()); });
}

Vec7 shape_operator(const MPoint& x, const Vec7& v, const DiffConfig& cfg) {
  require_tangent(x, v, "shape_operator");
  if (v.squaredNorm() == 0.0) return Vec7::Zero();
  const Vec7 dnu = geometry::directional_derivative(unit_normal_field(), x.position(), v, cfg);
  return -tangent_project(x, dnu);
}

Vec7 nabla_m(const VectorField& X, const VectorField& Y, const MPoint& x, const DiffConfig& cfg) {
  const Vec7 dir = X(x.position());
  if (dir.squaredNorm() == 0.0) return Vec7::Zero();
  const auto restricted = restrict_to(x.param(), Y);
  return tangent_project(x, geometry::directional_derivative(restricted, x.position(), dir, cfg));
}

VectorField connection_field(Param r, const VectorField& X, const VectorField& Y,
                             const DiffConfig& cfg) {
  return VectorField("nabla_" + X.name() + Y.name(), [r, X, Y, cfg](const Vec7& q) {
    return nabla_m(X, Y, MPoint::project(r, q), cfg);
  });
}

namespace {

// Tangential part of D_dir W, differentiated with step h.
Vec7 covariant_along(const MPoint& x, const Vec7& dir, const VectorField& W, double h) {
  if (dir.squaredNorm() == 0.0) return Vec7::Zero();
  return tangent_project(x, geometry::directional_derivative(W, x.position(), dir, h));
}

}  // namespace

Vec7 riemann(const VectorField& X, const VectorField& Y, const VectorField& Z, const MPoint& x,
             const DiffConfig& cfg) {
  const Param r = x.param();
  const auto Xr = restrict_to(r, X);
  const auto Yr = restrict_to(r, Y);
  const auto Zr = restrict_to(r, Z);
  const Vec7 xv = X(x.position());
  const Vec7 yv = Y(x.position());
  const Vec7 nabla_x_nabla_y = covariant_along(x, xv, connection_field(r, Y, Z, cfg), cfg.h2);
  const Vec7 nabla_y_nabla_x = covariant_along(x, yv, connection_field(r, X, Z, cfg), cfg.h2);
  const Vec7 bracket = tangent_project(x, geometry::lie_bracket(Xr, Yr, x.position(), cfg));
  const Vec7 nabla_bracket = covariant_along(x, bracket, Zr, cfg.h1);
  return nabla_x_nabla_y - nabla_y_nabla_x - nabla_bracket;
}

VectorField killing_extension(const MPoint& x, const Vec7& v) {
  const Eigen::Matrix<double, 6, 1> xb = x.position().head<6>();
  const Eigen::Matrix<double, 6, 1> vb = tangent_project(x, v).head<6>();
  const Eigen::Matrix<double, 6, 6> omega =
      (vb * xb.transpose() - xb * vb.transpose()) / xb.squaredNorm();
  return VectorField("rot", [omega](const Vec7& q) -> Vec7 {
    Vec7 out;
    out.head<6>() = omega * q.head<6>();
    out(6) = 0.0;
    return out;
  });
}

double sectional_curvature(const MPoint& x, const Vec7& u, const Vec7& v, const DiffConfig& cfg) {
  const auto U = killing_extension(x, u);
  const auto V = killing_extension(x, v);
  const Vec7 uu = U(x.position());
  const Vec7 vv = V(x.position());
  const double area = uu.squaredNorm() * vv.squaredNorm() - std::pow(uu.dot(vv), 2);
  if (!(area > 0.0)) throw PreconditionError("sectional curvature of a degenerate plane");
  return riemann(U, V, V, x, cfg).dot(uu) / area;
}

ScalarInvariants scalar_invariants(Param r) {
  ScalarInvariants out{};
  out.tau = 20.0 / (1.0 - r.r() * r.r());
  out.f = -r.umbilic_factor();
  out.alpha = -r.umbilic_factor();
  out.identity_residual = out.tau - (20.0 + 5.0 * out.alpha * (5.0 * out.alpha - out.f));
  return out;
}

MPoint F_map(const MPoint& x) {
  Vec7 y = x.position() / x.param().s();
  y(6) = 0.0;
  return MPoint::project(Param(0.0), y);
}

MPoint F_inverse(const MPoint& y, Param r) {
  Vec7 x = y.position() * r.s();
  x(6) = r.r();
  return MPoint::project(r, x);
}

Vec7 F_pushforward(Param r, const Vec7& v) {
  Vec7 w = v / r.s();
  w(6) = 0.0;
  return w;
}

Vec7 F_inverse_pushforward(Param r, const Vec7& w) {
  Vec7 v = w * r.s();
  v(6) = 0.0;
  return v;
}

Sampler::Sampler(Param r, std::uint64_t seed) : r_(r), rng_(seed) {}

Vec7 Sampler::gaussian7() {
  Vec7 v;
  for (int i = 0; i < 7; ++i) v(i) = normal_(rng_);
  return v;
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

MPoint Sampler::point() {
  while (true) {
    Vec7 g = Vec7::Zero();
    for (int i = 0; i < 6; ++i) g(i) = normal_(rng_);
    if (g.head<6>().norm() > 1e-8) return MPoint::project(r_, g);
  }
}

MPoint Sampler::point_with_coordinate_at_least(int a, double min_abs) {
  if (a < 1 || a > 6) throw IndexError("coordinate index must lie in [1,6]");
  if (!(min_abs < r_.s())) {
    throw ParameterError("M_r is too small for the requested coordinate bound");
  }
  MPoint x = point();
  if (std::abs(x[a]) >= min_abs) return x;
  const double t = uniform(min_abs, r_.s());
  const double sign = x[a] < 0.0 ? -1.0 : 1.0;
  Vec7 v = x.position();
  v(a - 1) = 0.0;
  v(6) = 0.0;
  const double rest = v.norm();
  v *= std::sqrt(std::max(0.0, r_.s() * r_.s() - t * t)) / rest;
  v(a - 1) = sign * t;
  v(6) = r_.r();
  return MPoint::project(r_, v);
}

Vec7 Sampler::unit_tangent(const MPoint& x) {
  while (true) {
    const Vec7 v = tangent_project(x, gaussian7());
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

Vec7 Sampler::unit_horizontal(const MPoint& x, const Vec7& xi) {
  while (true) {
    Vec7 v = tangent_project(x, gaussian7());
    v -= v.dot(xi) * xi;
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

std::pair<Vec7, Vec7> Sampler::orthonormal_pair(const MPoint& x) {
  const Vec7 u = unit_tangent(x);
  while (true) {
    Vec7 v = unit_tangent(x);
    v -= v.dot(u) * u;
    const double n = v.norm();
    if (n > 1e-6) return {u, v / n};
  }
}

std::array<Vec7, 5> Sampler::orthonormal_frame(const MPoint& x) {
  std::array<Vec7, 5> frame;
  std::size_t filled = 0;
  while (filled < frame.size()) {
    Vec7 v = unit_tangent(x);
    for (std::size_t k = 0; k < filled; ++k) v -= v.dot(frame[k]) * frame[k];
    const double n = v.norm();
    if (n > 1e-6) frame[filled++] = v / n;
  }
  return frame;
}

Vec7 Sampler::unit_sphere_tangent(const nk6::SpherePoint& p) {
  while (true) {
    const Vec7 v = nk6::tangent_project(p, gaussian7());
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

std::vector<MPoint> sample_points(Param r, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ParameterError("sample count must be at least 1");
  Sampler sampler(r, seed);
  std::vector<MPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.point());
  return out;
}

}  // namespace umbilic::hypersphere
