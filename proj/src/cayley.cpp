#include "umbilic/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "umbilic/errors.hpp"

namespace umbilic::cayley {

Octonion Octonion::unit(int i) {
  if (i < 0 || i > 7) throw IndexError("octonion basis index out of range");
  Octonion o;
  o.c_[static_cast<std::size_t>(i)] = 1.0;
  return o;
}

Octonion Octonion::real(double a) {
  Octonion o;
  o.c_[0] = a;
  return o;
}

Octonion Octonion::imaginary(const Vec7& v) {
  Octonion o;
  for (int i = 0; i < 7; ++i) o.c_[static_cast<std::size_t>(i) + 1] = v(i);
  return o;
}

Vec7 Octonion::imag() const {
  Vec7 v;
  for (int i = 0; i < 7; ++i) v(i) = c_[static_cast<std::size_t>(i) + 1];
  return v;
}

bool Octonion::is_pure_imaginary(double tol) const { return std::abs(c_[0]) <= tol; }

bool Octonion::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double x) { return std::isfinite(x); });
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
Octonion operator-(Octonion a) { return a *= -1.0; }
Octonion operator*(double s, Octonion a) { return a *= s; }
Octonion operator*(Octonion a, double s) { return a *= s; }

std::vector<std::string> structural_errors(std::span<const FanoTriple> triples) {
  std::vector<std::string> errors;
  if (triples.size() != 7) {
    errors.push_back("expected 7 triples, got " + std::to_string(triples.size()));
  }
  std::array<std::array<int, 8>, 8> cover{};
  for (const auto& t : triples) {
    const std::array<int, 3> idx{t.i, t.j, t.k};
    bool in_range = true;
    for (int v : idx) in_range = in_range && v >= 1 && v <= 7;
    std::ostringstream name;
    name << "(" << t.i << "," << t.j << "," << t.k << ")";
    if (!in_range) {
      errors.push_back("triple " + name.str() + " has an index outside [1,7]");
      continue;
    }
    if (t.i == t.j || t.j == t.k || t.i == t.k) {
      errors.push_back("triple " + name.str() + " repeats an index");
      continue;
    }
    for (auto [a, b] : {std::pair{t.i, t.j}, std::pair{t.j, t.k}, std::pair{t.i, t.k}}) {
      ++cover[static_cast<std::size_t>(std::min(a, b))][static_cast<std::size_t>(std::max(a, b))];
    }
  }
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      const int n = cover[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (n != 1) {
        errors.push_back("pair {" + std::to_string(a) + "," + std::to_string(b) + "} covered " +
                         std::to_string(n) + " times");
      }
    }
  }
  return errors;
}

FanoTable::FanoTable(std::vector<FanoTriple> triples) : triples_(std::move(triples)) {
  if (auto errs = structural_errors(triples_); !errs.empty()) {
    std::string msg = "malformed Fano table:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw StructureError(msg);
  }
  auto set = [this](int i, int j, int sign, int k) {
    table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {sign, k};
  };
  set(0, 0, 1, 0);
  for (int i = 1; i <= 7; ++i) {
    set(0, i, 1, i);
    set(i, 0, 1, i);
    set(i, i, -1, 0);
  }
  for (const auto& t : triples_) {
    for (auto [a, b, c] : {std::array{t.i, t.j, t.k}, std::array{t.j, t.k, t.i},
                           std::array{t.k, t.i, t.j}}) {
      set(a, b, 1, c);
      set(b, a, -1, c);
    }
  }
}

std::vector<FanoTriple> FanoTable::canonical_triples() {
  return {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}, {2, 6, 4}};
}

const FanoTable& FanoTable::canonical() {
  static const FanoTable table(canonical_triples());
  return table;
}

std::array<std::array<int, 7>, 7> FanoTable::signed_matrix() const {
  std::array<std::array<int, 7>, 7> m{};
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const auto p = product(i, j);
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = p.sign * p.index;
    }
  }
  return m;
}

std::array<std::array<std::string, 7>, 7> FanoTable::signed_matrix_labels() const {
  std::array<std::array<std::string, 7>, 7> m{};
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const auto p = product(i, j);
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          (p.sign < 0 ? "-" : "+") + std::to_string(p.index);
    }
  }
  return m;
}

std::string FanoTable::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& row : signed_matrix_labels()) {
    for (const auto& cell : row) {
      for (char ch : cell + ";") {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Octonion multiply(const Octonion& a, const Octonion& b, const FanoTable& table) {
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0.0) continue;
      const auto p = table.product(i, j);
      out[p.index] += p.sign * a[i] * b[j];
    }
  }
  return out;
}

Octonion conjugate(const Octonion& a) {
  Octonion out = -a;
  out[0] = a[0];
  return out;
}

double inner(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

double norm(const Octonion& a) { return std::sqrt(inner(a, a)); }

Octonion cross(const Octonion& x, const Octonion& y, const FanoTable& table) {
  if (!x.is_pure_imaginary() || !y.is_pure_imaginary()) {
    throw PreconditionError("cross product requires pure imaginary octonions");
  }
  Octonion out = multiply(x, y, table);
  out[0] += inner(x, y);
  return out;
}

Vec7 imag_product(const Vec7& x, const Vec7& y) {
  const auto& t = FanoTable::canonical();
  Vec7 out = Vec7::Zero();
  for (int i = 1; i <= 7; ++i) {
    const double xi = x(i - 1);
    if (xi == 0.0) continue;
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const auto p = t.product(i, j);
      out(p.index - 1) += p.sign * xi * y(j - 1);
    }
  }
  return out;
}

Vec7 cross(const Vec7& x, const Vec7& y) { return imag_product(x, y); }

std::vector<Octonion> signed_basis_sums(int max_terms) {
  std::vector<Octonion> out;
  // Enumerate ternary digit strings in lexicographic order of (-1, 0, 1).
  std::array<int, 8> eps{};
  eps.fill(-1);
  while (true) {
    int nonzero = 0;
    for (int e : eps) nonzero += (e != 0);
    if (nonzero >= 1 && nonzero <= max_terms) {
      Octonion o;
      for (int i = 0; i < 8; ++i) o[i] = eps[static_cast<std::size_t>(i)];
      out.push_back(o);
    }
    int pos = 7;
    while (pos >= 0 && eps[static_cast<std::size_t>(pos)] == 1) {
      eps[static_cast<std::size_t>(pos)] = -1;
      --pos;
    }
    if (pos < 0) break;
    ++eps[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {

// Monomial x_a x_b (a <= b, index 7 is the height r) -> integer coefficient.
using Poly = std::map<std::pair<int, int>, int>;

Poly prune(Poly p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

std::string describe(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p) {
    s += (c < 0 ? " -" : " +") + std::to_string(std::abs(c)) + "*x" + std::to_string(m.first) +
         "*x" + std::to_string(m.second);
  }
  return s;
}

std::vector<std::string> equation_mismatches(const FanoTable& t) {
  std::vector<std::string> out;

  // xi direction: (sum_i x_i e_i) x e7 = x6 e1 + x5 e2 + x4 e3 - x3 e4 - x2 e5 - x1 e6.
  const std::array<BasisProduct, 6> times_e7{
      {{-1, 6}, {-1, 5}, {-1, 4}, {1, 3}, {1, 2}, {1, 1}}};
  for (int i = 1; i <= 6; ++i) {
    const auto got = t.product(i, 7);
    const auto want = times_e7[static_cast<std::size_t>(i - 1)];
    if (got.sign != want.sign || got.index != want.index) {
      out.push_back("e" + std::to_string(i) + "*e7 does not match the xi expansion");
    }
  }

  // J X_{1,3} = x * (-x3 e1 + x1 e3), x = sum_{i<=6} x_i e_i + r e7, expanded
  // symbolically and matched against the displayed d_1..d_6 coefficients.
  std::array<Poly, 8> got;
  for (int i = 1; i <= 7; ++i) {
    for (auto [var, basis, coeff] : {std::array{3, 1, -1}, std::array{1, 3, 1}}) {
      const auto p = t.product(i, basis);
      got[static_cast<std::size_t>(p.index)][{std::min(i, var), std::max(i, var)}] +=
          p.sign * coeff;
    }
  }
  const std::array<Poly, 6> want{{
      {{{1, 2}, 1}},
      {{{1, 1}, -1}, {{3, 3}, -1}},
      {{{2, 3}, 1}},
      {{{3, 5}, -1}, {{1, 7}, 1}},
      {{{1, 6}, 1}, {{3, 4}, 1}},
      {{{3, 7}, -1}, {{1, 5}, -1}},
  }};
  for (int k = 1; k <= 6; ++k) {
    const Poly g = prune(got[static_cast<std::size_t>(k)]);
    const Poly& w = want[static_cast<std::size_t>(k - 1)];
    if (g != w) {
      out.push_back("J X_{1,3} coefficient of d" + std::to_string(k) + ":" + describe(g) +
                    " expected" + describe(w));
    }
  }
  return out;
}

}  // namespace

TableDiagnostics validate_table(std::span<const FanoTriple> triples) {
  TableDiagnostics diag;
  diag.structural = structural_errors(triples);
  if (!diag.structural.empty()) return diag;

  const FanoTable table(std::vector<FanoTriple>(triples.begin(), triples.end()));
  const auto elems = signed_basis_sums(3);
  std::vector<double> norms(elems.size());
  std::vector<Octonion> squares(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    norms[i] = norm(elems[i]);
    squares[i] = multiply(elems[i], elems[i], table);
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& a = elems[i];
    const Octonion& aa = squares[i];
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto& b = elems[j];
      const Octonion ab = multiply(a, b, table);
      const double nn = norms[i] * norms[j];
      const double norm_res = std::abs(norm(ab) - nn);
      if (norm_res > 1e-12 * (1.0 + nn)) {
        diag.norm_violations.push_back(
            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), norm_res});
      }
      const double left = norm(multiply(a, ab, table) - multiply(aa, b, table));
      const double right =
          norm(multiply(ab, b, table) - multiply(a, squares[j], table));
      const double alt_res = std::max(left, right);
      if (alt_res > 1e-12 * (1.0 + nn * nn)) {
        diag.alternativity_violations.push_back(
            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), alt_res});
      }
      ++diag.pairs_checked;
    }
  }
  diag.equation_mismatches = equation_mismatches(table);
  return diag;
}

}  // namespace umbilic::cayley
