#include "umbilic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/LU>

#include "umbilic/errors.hpp"

namespace umbilic::geometry {

void DiffConfig::validate() const {
  if (!(h1 > 0.0 && h1 < 1.0)) throw ParameterError("h1 must lie in (0, 1)");
  if (!(h2 > 0.0)) throw ParameterError("h2 must be positive");
}

VectorField::VectorField(std::string name, Evaluator f, double radius)
    : name_(std::move(name)), f_(std::move(f)), radius_(radius) {}

OneForm::OneForm(std::string name, Coefficients c) : name_(std::move(name)), c_(std::move(c)) {}

VectorField constant_field(const Vec7& v, std::string name) {
  return VectorField(std::move(name), [v](const Vec7&) { return v; });
}

Vec7 directional_derivative(const VectorField& F, const Vec7& p, const Vec7& v, double h) {
  const double len = v.norm();
  if (!(len > 0.0)) throw PreconditionError("directional derivative along a zero vector");
  if (h * len > F.radius()) {
    throw DomainError("stencil for field '" + F.name() + "' leaves its domain");
  }
  return (F(p + h * v) - F(p - h * v)) / (2.0 * h);
}

Vec7 directional_derivative(const VectorField& F, const Vec7& p, const Vec7& v,
                            const DiffConfig& cfg) {
  return directional_derivative(F, p, v, cfg.h1);
}

namespace {

// D_v F with D_0 F = 0, for use where a field value may vanish.
Vec7 derivative_or_zero(const VectorField& F, const Vec7& p, const Vec7& v, double h) {
  if (v.squaredNorm() == 0.0) return Vec7::Zero();
  return directional_derivative(F, p, v, h);
}

}  // namespace

Vec7 lie_bracket(const VectorField& X, const VectorField& Y, const Vec7& p,
                 const DiffConfig& cfg) {
  return derivative_or_zero(Y, p, X(p), cfg.h1) - derivative_or_zero(X, p, Y(p), cfg.h1);
}

Eigen::Matrix<double, 7, 7> curl_matrix(const OneForm& w, const Vec7& p, const DiffConfig& cfg) {
  // jac(j, i) = d_i w_j
  Eigen::Matrix<double, 7, 7> jac;
  for (int i = 0; i < 7; ++i) {
    Vec7 step = Vec7::Zero();
    step(i) = cfg.h1;
    jac.col(i) = (w.coefficients(p + step) - w.coefficients(p - step)) / (2.0 * cfg.h1);
  }
  Eigen::Matrix<double, 7, 7> curl = Eigen::Matrix<double, 7, 7>::Zero();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      curl(i, j) = jac(j, i) - jac(i, j);
      curl(j, i) = -curl(i, j);
    }
  }
  return curl;
}

double two_form_value(const Eigen::Matrix<double, 7, 7>& curl, const Vec7& u, const Vec7& v) {
  double s = 0.0;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) s += curl(i, j) * (u(i) * v(j) - u(j) * v(i));
  }
  return 0.5 * s;
}

double exterior_derivative(const OneForm& w, const Vec7& p, const Vec7& u, const Vec7& v,
                           const DiffConfig& cfg) {
  return two_form_value(curl_matrix(w, p, cfg), u, v);
}

namespace {

int permutation_sign(const std::array<int, 5>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

double contact_volume(const OneForm& eta, const Vec7& p, const std::array<Vec7, 5>& frame,
                      const DiffConfig& cfg) {
  const auto curl = curl_matrix(eta, p, cfg);
  std::array<double, 5> eta_v{};
  Eigen::Matrix<double, 5, 5> d;
  for (std::size_t a = 0; a < 5; ++a) {
    eta_v[a] = eta(p, frame[a]);
    for (std::size_t b = 0; b < 5; ++b) {
      d(static_cast<int>(a), static_cast<int>(b)) = two_form_value(curl, frame[a], frame[b]);
    }
  }
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  double sum = 0.0;
  do {
    sum += permutation_sign(perm) * eta_v[static_cast<std::size_t>(perm[0])] *
           d(perm[1], perm[2]) * d(perm[3], perm[4]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / 120.0;
}

double coordinate_five_form(const std::array<int, 5>& indices, const std::array<Vec7, 5>& frame) {
  Eigen::Matrix<double, 5, 5> m;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      m(a, b) = frame[static_cast<std::size_t>(b)](indices[static_cast<std::size_t>(a)] - 1);
    }
  }
  return m.determinant() / 120.0;
}

}  // namespace umbilic::geometry
