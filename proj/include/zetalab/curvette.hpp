#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/big_rational.hpp"
#include "zetalab/blowup.hpp"
#include "zetalab/int_matrix.hpp"

namespace zetalab {

/// Row i holds the multiplicities a_ij of E_j in the pullback of the image
/// of a curvette of E_i.
using CurvetteMatrix = IntMatrix;

/// a = (-M)^{-1}. Throws MathError("non-unimodular intersection matrix")
/// unless det(-M) = 1.
CurvetteMatrix curvette_matrix_2d(const IntersectionMatrix& M);

/// Column recursion over the centers. J_sets[k] are the 1-based ids of the
/// components through center k+1 and lower_rows[k] = (a_{k+1,1}, ...,
/// a_{k+1,k}). Throws MathError("inconsistent lower-row data").
CurvetteMatrix curvette_matrix_hd(const std::vector<std::vector<int>>& J_sets,
                                  const std::vector<std::vector<std::int64_t>>& lower_rows);

struct TheoremReport {
  BigInt det;
  std::vector<std::int64_t> column_gcds;
  bool symmetric = false;
  bool positive = false;
  bool pass = false;
};

TheoremReport check_theorems(const CurvetteMatrix& a, int dim);

}  // namespace zetalab
