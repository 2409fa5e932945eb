#include "zetalab/curvette.hpp"

#include <numeric>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

TheoremReport check_theorems(const CurvetteMatrix& a, int dim) {
  TheoremReport r;
  r.det = a.square() ? determinant(a) : BigInt(0);
  r.symmetric = a.symmetric();
  r.positive = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      g = std::gcd(g, a(i, j));
      if (a(i, j) < 1) r.positive = false;
    }
    r.column_gcds.push_back(g);
  }
  bool gcds = true;
  for (auto g : r.column_gcds) gcds = gcds && g == 1;
  r.pass = a.square() && r.det == 1 && gcds && (dim != 2 || r.symmetric);
  return r;
}

CurvetteMatrix curvette_matrix_2d(const IntersectionMatrix& M) {
  if (!M.square()) throw MathError("non-unimodular intersection matrix");
  const IntMatrix neg = -M;
  if (determinant(neg) != 1) throw MathError("non-unimodular intersection matrix");
  const auto inv = rational_inverse(neg);
  CurvetteMatrix a(M.rows(), M.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!inv[i][j].is_integer()) throw MathError("non-integer curvette matrix entry");
      a(i, j) = to_int64(inv[i][j].numerator());
    }
  }
  const auto report = check_theorems(a, 2);
  if (!report.pass || !report.positive) throw MathError("curvette matrix violates the unimodularity theorem");
  if (neg * a != IntMatrix::identity(a.rows())) throw MathError("curvette matrix is not the inverse of -M");
  return a;
}

CurvetteMatrix curvette_matrix_hd(const std::vector<std::vector<int>>& J_sets,
                                  const std::vector<std::vector<std::int64_t>>& lower_rows) {
  const std::size_t m = J_sets.size();
  if (lower_rows.size() != m) throw MathError("inconsistent lower-row data");
  CurvetteMatrix a(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    if (lower_rows[k].size() != k) throw MathError("inconsistent lower-row data");
    for (int j : J_sets[k])
      if (j < 1 || static_cast<std::size_t>(j) > k) throw MathError("inconsistent lower-row data");
    if (k > 0 && J_sets[k].empty()) throw MathError("inconsistent lower-row data");
    for (std::size_t j = 0; j < k; ++j) a(k, j) = lower_rows[k][j];
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t s = 0;
      for (int j : J_sets[k]) s += a(i, static_cast<std::size_t>(j - 1));
      a(i, k) = s;
    }
    std::int64_t d = 1;
    for (int j : J_sets[k]) d += a(k, static_cast<std::size_t>(j - 1));
    a(k, k) = d;
  }
  const auto report = check_theorems(a, 3);
  if (!report.pass || !report.positive) throw MathError("inconsistent lower-row data");
  return a;
}

}  // namespace zetalab
