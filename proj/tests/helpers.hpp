#pragma once

#include "dilp/linalg.hpp"
#include "dilp/rng.hpp"

namespace testutil {

using namespace dilp;

inline IntMat random_matrix(Rng& r, int rows, int cols, long lo, long hi) {
  IntMat M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = r.uniform(lo, hi);
  return M;
}

inline IntMat random_full_rank(Rng& r, int rows, int cols, long lo, long hi) {
  for (;;) {
    IntMat M = random_matrix(r, rows, cols, lo, hi);
    if (rank(M) == std::min(rows, cols)) return M;
  }
}

// Laplace expansion along the first row; independent of elimination code.
inline Int cofactor_det(const IntMat& M) {
  const int n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Int s = 0;
  for (int j = 0; j < n; ++j) {
    std::vector<int> rows, cols;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Int c = cofactor_det(M.select_rows(rows).select_cols(cols));
    s += (j % 2 ? -1 : 1) * M(0, j) * c;
  }
  return s;
}

}  // namespace testutil
