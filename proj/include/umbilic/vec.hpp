#pragma once

#include <Eigen/Core>

namespace umbilic {

/// A point or vector of E^7, identified with the pure imaginary octonions
/// (index 0 <-> e1, ..., index 6 <-> e7).
using Vec7 = Eigen::Matrix<double, 7, 1>;

/// Basis vector e_i (1-based, 1 <= i <= 7).
inline Vec7 basis7(int i) {
  Vec7 v = Vec7::Zero();
  v(i - 1) = 1.0;
  return v;
}

}  // namespace umbilic
