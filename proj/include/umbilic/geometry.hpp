#pragma once
/**
 * @file geometry.hpp
 * @brief Finite-difference calculus on E^7 for fields given in closed form.
 *
 * Forms are evaluated with the alternation convention: a k-form wedge is
 * Alt of the tensor product, so (dx_i ^ dx_j)(u, v) = (u_i v_j - u_j v_i) / 2
 * and d omega(u, v) = (1/2) sum_{i<j} (d_i w_j - d_j w_i)(u_i v_j - u_j v_i).
 */

#include <array>
#include <functional>
#include <limits>
#include <string>

#include "umbilic/vec.hpp"

namespace umbilic::geometry {

/// Steps for central differences. h1 drives first derivatives, h2 the outer
/// derivative of an already differentiated field.
struct DiffConfig {
  double h1 = 1e-5;
  double h2 = 1e-3;

  /// @throws ParameterError unless 0 < h1 < 1 and 0 < h2.
  void validate() const;
};

class VectorField {
 public:
  using Evaluator = std::function<Vec7(const Vec7&)>;

  VectorField(std::string name, Evaluator f,
              double radius = std::numeric_limits<double>::infinity());

  Vec7 operator()(const Vec7& p) const { return f_(p); }
  const std::string& name() const { return name_; }
  /// Largest displacement a difference stencil may take from a base point.
  double radius() const { return radius_; }

 private:
  std::string name_;
  Evaluator f_;
  double radius_;
};

/// sum_i w_i(p) dx_i, stored as its coefficient vector field.
class OneForm {
 public:
  using Coefficients = std::function<Vec7(const Vec7&)>;

  OneForm(std::string name, Coefficients c);

  Vec7 coefficients(const Vec7& p) const { return c_(p); }
  double operator()(const Vec7& p, const Vec7& v) const { return c_(p).dot(v); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Coefficients c_;
};

/// Constant vector field p -> v.
VectorField constant_field(const Vec7& v, std::string name = "const");

/// (F(p + h v) - F(p - h v)) / (2h).
/// @throws PreconditionError if |v| == 0; DomainError if h|v| exceeds F.radius().
Vec7 directional_derivative(const VectorField& F, const Vec7& p, const Vec7& v, double h);
Vec7 directional_derivative(const VectorField& F, const Vec7& p, const Vec7& v,
                            const DiffConfig& cfg);

/// D_X Y - D_Y X at p.
Vec7 lie_bracket(const VectorField& X, const VectorField& Y, const Vec7& p,
                 const DiffConfig& cfg);

/// Matrix of d_i w_j - d_j w_i at p, entries (i, j) for i < j populated.
Eigen::Matrix<double, 7, 7> curl_matrix(const OneForm& w, const Vec7& p, const DiffConfig& cfg);

/// Value of the 2-form with antisymmetric coefficient matrix `curl` on (u, v).
/// Swapping u and v negates the result exactly.
double two_form_value(const Eigen::Matrix<double, 7, 7>& curl, const Vec7& u, const Vec7& v);

double exterior_derivative(const OneForm& w, const Vec7& p, const Vec7& u, const Vec7& v,
                           const DiffConfig& cfg);

/// (eta ^ d eta ^ d eta)(frame) = (1/5!) sum over S_5 of
/// sgn(s) eta(v_s1) d eta(v_s2, v_s3) d eta(v_s4, v_s5).
double contact_volume(const OneForm& eta, const Vec7& p, const std::array<Vec7, 5>& frame,
                      const DiffConfig& cfg);

/// (dx_{i1} ^ ... ^ dx_{i5})(frame) = det / 5! for the given coordinate indices (1-based).
double coordinate_five_form(const std::array<int, 5>& indices, const std::array<Vec7, 5>& frame);

}  // namespace umbilic::geometry
