#pragma once
/**
 * @file cayley.hpp
 * @brief Cayley algebra (octonions) over the basis {1, e1, ..., e7}.
 *
 * Multiplication is driven by a FanoTable: seven oriented triples (i,j,k)
 * meaning e_i e_j = e_k, closed under cyclic rotation, with e_i^2 = -1 and
 * e_i e_j = -e_j e_i for i != j.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "umbilic/vec.hpp"

namespace umbilic::cayley {

class Octonion {
 public:
  constexpr Octonion() = default;
  explicit constexpr Octonion(const std::array<double, 8>& c) : c_(c) {}

  /// e_i for 1 <= i <= 7, and the unit 1 for i = 0.
  static Octonion unit(int i);
  static Octonion real(double a);
  /// The pure imaginary octonion sum_i v(i-1) e_i.
  static Octonion imaginary(const Vec7& v);

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 8>& components() const { return c_; }

  double re() const { return c_[0]; }
  Vec7 imag() const;

  bool is_pure_imaginary(double tol = 0.0) const;
  bool is_finite() const;

  friend bool operator==(const Octonion&, const Octonion&) = default;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);

 private:
  std::array<double, 8> c_{};
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator-(Octonion a);
Octonion operator*(double s, Octonion a);
Octonion operator*(Octonion a, double s);

struct FanoTriple {
  int i;
  int j;
  int k;
  friend bool operator==(const FanoTriple&, const FanoTriple&) = default;
};

/// e_i e_j = sign * e_index, with index 0 standing for the unit.
struct BasisProduct {
  int sign;
  int index;
};

/// Returns every structural defect of a triple list: wrong count, indices out
/// of [1,7], repeated indices, and unordered pairs covered zero or 2+ times.
std::vector<std::string> structural_errors(std::span<const FanoTriple> triples);

class FanoTable {
 public:
  /// @throws StructureError if structural_errors() is non-empty.
  explicit FanoTable(std::vector<FanoTriple> triples);

  /// (1,2,3) (1,4,5) (1,6,7) (2,5,7) (3,4,7) (3,5,6) (2,6,4).
  static const FanoTable& canonical();
  static std::vector<FanoTriple> canonical_triples();

  const std::vector<FanoTriple>& triples() const { return triples_; }

  /// Product of basis elements, 0 <= i, j <= 7.
  BasisProduct product(int i, int j) const {
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Signed 7x7 imaginary product matrix: entry [i-1][j-1] = sign * k when
  /// e_i e_j = sign * e_k (i != j); diagonal entries are 0 (e_i^2 = -1).
  std::array<std::array<int, 7>, 7> signed_matrix() const;

  /// Same matrix rendered as "+k" / "-k", diagonal rendered as "-0".
  std::array<std::array<std::string, 7>, 7> signed_matrix_labels() const;

  /// FNV-1a hash of the rendered signed matrix, as 16 hex digits.
  std::string fingerprint() const;

 private:
  std::vector<FanoTriple> triples_;
  std::array<std::array<BasisProduct, 8>, 8> table_{};
};

Octonion multiply(const Octonion& a, const Octonion& b,
                  const FanoTable& table = FanoTable::canonical());
Octonion conjugate(const Octonion& a);
double inner(const Octonion& a, const Octonion& b);
double norm(const Octonion& a);

/// x x y = xy + <x,y> 1 for pure imaginary x, y.
/// @throws PreconditionError if either argument has a nonzero real part.
Octonion cross(const Octonion& x, const Octonion& y,
               const FanoTable& table = FanoTable::canonical());

/// Cross product of E^7 vectors through the imaginary identification.
Vec7 cross(const Vec7& x, const Vec7& y);

/// Imaginary part of the product of two E^7 vectors; the real part
/// -<x,y> is dropped. Equals cross(x, y).
Vec7 imag_product(const Vec7& x, const Vec7& y);

/// All sums sum_i eps_i e_i (i = 0..7, eps_i in {-1,0,1}) with between one
/// and max_terms nonzero terms, in a fixed order.
std::vector<Octonion> signed_basis_sums(int max_terms);

struct PairViolation {
  std::uint32_t lhs;  ///< index into signed_basis_sums(3)
  std::uint32_t rhs;
  double residual;
};

struct TableDiagnostics {
  std::vector<std::string> structural;
  std::vector<PairViolation> norm_violations;
  std::vector<PairViolation> alternativity_violations;
  std::vector<std::string> equation_mismatches;
  std::size_t pairs_checked = 0;

  bool ok() const {
    return structural.empty() && norm_violations.empty() &&
           alternativity_violations.empty() && equation_mismatches.empty();
  }
};

/// Brute-force validation of a candidate table: norm multiplicativity and
/// left/right alternativity on all pairs from signed_basis_sums(3), plus
/// coefficient matching of the xi and J X_{1,3} coordinate expansions.
TableDiagnostics validate_table(std::span<const FanoTriple> triples);

}  // namespace umbilic::cayley
