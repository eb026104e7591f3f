#include "dilp/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dilp {

IntVec SnfResult::diagonal() const {
  IntVec d(S.rows());
  for (int i = 0; i < S.rows(); ++i) d[i] = S(i, i);
  return d;
}

Int SnfResult::det() const {
  Int p = 1;
  for (int i = 0; i < S.rows(); ++i) p *= S(i, i);
  return p;
}

Int det(const IntMat& M) {
  if (!M.square()) fail(ErrorKind::Dimension, "det of a non-square matrix");
  const int n = M.rows();
  if (n == 0) return 1;
  IntMat a = M;
  Int prev = 1;
  int sgn_ = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      sgn_ = -sgn_;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sgn_ * a(n - 1, n - 1);
}

Rat det(const RatMat& M) {
  if (!M.square()) fail(ErrorKind::Dimension, "det of a non-square matrix");
  RatMat a = M;
  const int n = a.rows();
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      d = -d;
    }
    d *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

int rank(const RatMat& A) {
  RatMat a = A;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

int rank(const IntMat& A) { return rank(to_rat(A)); }

RatMat inverse(const RatMat& M) {
  if (!M.square()) fail(ErrorKind::Dimension, "inverse of a non-square matrix");
  const int n = M.rows();
  RatMat a = M, inv = RatMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorKind::Rank, "singular matrix");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rat piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMat inverse(const IntMat& M) { return inverse(to_rat(M)); }

IntMat unimodular_inverse(const IntMat& U) {
  RatMat inv = inverse(U);
  return to_int(inv);
}

RatVec solve_square(const IntMat& A, const RatVec& b) { return inverse(A) * b; }

IntMat adjugate(const IntMat& M) {
  if (!M.square()) fail(ErrorKind::Dimension, "adjugate of a non-square matrix");
  const int n = M.rows();
  if (n == 0) return IntMat(0, 0);
  if (n == 1) return IntMat{{Int(1)}};
  Int d = det(M);
  if (d != 0) {
    RatMat inv = inverse(M);
    IntMat r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat v = inv(i, j) * d;
        r(i, j) = v.get_num();
      }
    return r;
  }
  IntMat r(n, n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < n; ++i) {
    std::vector<int> ri;
    for (int k = 0; k < n; ++k)
      if (k != i) ri.push_back(k);
    IntMat Mi = M.select_rows(ri);
    for (int j = 0; j < n; ++j) {
      std::vector<int> cj;
      for (int k = 0; k < n; ++k)
        if (k != j) cj.push_back(k);
      Int c = det(Mi.select_cols(cj));
      r(j, i) = ((i + j) % 2 ? -c : c);
    }
  }
  return r;
}

EchelonResult column_echelon(const IntMat& A) {
  const int rows = A.rows(), n = A.cols();
  IntMat T = A, U = IntMat::identity(n);
  int k = 0;
  for (int i = 0; i < rows && k < n; ++i) {
    for (int j = k + 1; j < n; ++j) {
      if (T(i, j) == 0) continue;
      Int a = T(i, k), b = T(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int ag = a / g, bg = b / g;
      for (int r = 0; r < rows; ++r) {
        Int ck = T(r, k), cj = T(r, j);
        T(r, k) = s * ck + t * cj;
        T(r, j) = -bg * ck + ag * cj;
      }
      for (int r = 0; r < n; ++r) {
        Int ck = U(r, k), cj = U(r, j);
        U(r, k) = s * ck + t * cj;
        U(r, j) = -bg * ck + ag * cj;
      }
    }
    if (T(i, k) == 0) continue;
    if (T(i, k) < 0) {
      T.negate_col(k);
      U.negate_col(k);
    }
    for (int j = 0; j < k; ++j) {
      Int f = floor_div(T(i, j), T(i, k));
      if (f == 0) continue;
      T.add_col(j, k, -f);
      U.add_col(j, k, -f);
    }
    ++k;
  }
  return {T, U, k};
}

HnfResult hnf(const IntMat& A) {
  if (A.cols() == 0) fail(ErrorKind::Dimension, "hnf of an empty matrix");
  EchelonResult e = column_echelon(A);
  if (e.rank != A.cols()) fail(ErrorKind::Rank, "hnf requires full column rank");
  return {e.L, unimodular_inverse(e.U)};
}

IntMat integer_kernel(const IntMat& A) {
  EchelonResult e = column_echelon(A);
  std::vector<int> idx;
  for (int j = e.rank; j < A.cols(); ++j) idx.push_back(j);
  return e.U.select_cols(idx);
}

SnfResult snf(const IntMat& A) {
  const int r = A.rows(), n = A.cols();
  if (n == 0 || r < n) fail(ErrorKind::Dimension, "snf expects rows >= cols >= 1");
  if (rank(A) != n) fail(ErrorKind::Rank, "snf requires full column rank");
  IntMat D = A, P = IntMat::identity(r), Pinv = IntMat::identity(r);
  IntMat Q = IntMat::identity(n), Qinv = IntMat::identity(n);

  auto row_swap = [&](int i, int k) { D.swap_rows(i, k); P.swap_cols(i, k); Pinv.swap_rows(i, k); };
  auto col_swap = [&](int j, int k) { D.swap_cols(j, k); Q.swap_rows(j, k); Qinv.swap_cols(j, k); };
  // row i += f * row k
  auto row_add = [&](int i, int k, const Int& f) { D.add_row(i, k, f); P.add_col(k, i, -f); Pinv.add_row(i, k, f); };
  // col j += f * col k
  auto col_add = [&](int j, int k, const Int& f) { D.add_col(j, k, f); Q.add_row(k, j, -f); Qinv.add_col(j, k, f); };

  for (int t = 0; t < n; ++t) {
    for (;;) {
      int bp = -1, bq = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) != 0 && (bp < 0 || abs(D(i, j)) < abs(D(bp, bq)))) bp = i, bq = j;
      if (bp < 0) fail(ErrorKind::Rank, "snf requires full column rank");
      row_swap(t, bp);
      col_swap(t, bq);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Int f = D(i, t) / D(t, t);
        row_add(i, t, -f);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int f = D(t, j) / D(t, t);
        col_add(j, t, -f);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      P.negate_col(t);
      Pinv.negate_row(t);
    }
  }
  return {D.block(0, 0, n, n), P, Q, Pinv, Qinv};
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

MinorStats minor_stats(const IntMat& A, int k) {
  if (k < 1 || k > std::min(A.rows(), A.cols())) fail(ErrorKind::Dimension, "minor order out of range");
  MinorStats s;
  s.order = k;
  for_each_subset(A.rows(), k, [&](const std::vector<int>& ri) {
    IntMat R = A.select_rows(ri);
    for_each_subset(A.cols(), k, [&](const std::vector<int>& ci) {
      Int d = abs(det(R.select_cols(ci)));
      if (d == 0) return true;
      ++s.nonzero;
      if (s.degenerate) {
        s.delta = s.delta_gcd = s.delta_lcm = d;
        s.degenerate = false;
      } else {
        if (d > s.delta) s.delta = d;
        s.delta_gcd = gcd(s.delta_gcd, d);
        s.delta_lcm = lcm(s.delta_lcm, d);
      }
      return true;
    });
    return true;
  });
  return s;
}

Int delta(const IntMat& A) {
  if (A.rows() == 0 || A.cols() == 0) return 1;
  if (A.rows() >= A.cols() && A.cols() > 0) {
    // maximal minors only vary over row subsets
    Int best = 0;
    for_each_subset(A.rows(), A.cols(), [&](const std::vector<int>& ri) {
      Int d = abs(det(A.select_rows(ri)));
      if (d > best) best = d;
      return true;
    });
    return best;
  }
  return minor_stats(A, std::min(A.rows(), A.cols())).delta;
}

Int delta_gcd(const IntMat& A) {
  if (A.rows() == 0 || A.cols() == 0) return 1;
  MinorStats s = minor_stats(A, std::min(A.rows(), A.cols()));
  return s.degenerate ? Int(0) : s.delta_gcd;
}

std::vector<IntVec> enumerate_parallelepiped(const IntMat& A, const RatVec& p, const Rat& gamma) {
  if (!A.square()) fail(ErrorKind::Dimension, "parallelepiped matrix must be square");
  const int n = A.rows();
  if (static_cast<int>(p.size()) != n) fail(ErrorKind::Dimension, "centre size mismatch");
  if (gamma < 0) fail(ErrorKind::Parameter, "negative radius");
  if (det(A) == 0) fail(ErrorKind::Rank, "singular parallelepiped matrix");
  std::vector<IntVec> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  SnfResult sn = snf(A);
  RatMat Ainv = inverse(A);
  IntVec d = sn.diagonal();
  IntVec w(n, Int(0));
  for (;;) {
    IntVec y = sn.P * w;
    RatVec x0 = Ainv * to_rat(y);
    RatVec r(n);
    IntVec fl(n);
    for (int i = 0; i < n; ++i) {
      fl[i] = rat_floor(x0[i]);
      r[i] = x0[i] - fl[i];
    }
    IntVec base = y;  // A r = y - A floor(x0)
    IntVec Afl = A * fl;
    for (int i = 0; i < n; ++i) base[i] -= Afl[i];
    IntVec lo(n), hi(n);
    bool empty = false;
    for (int i = 0; i < n; ++i) {
      lo[i] = rat_ceil(p[i] - gamma - r[i]);
      hi[i] = rat_floor(p[i] + gamma - r[i]);
      if (lo[i] > hi[i]) empty = true;
    }
    if (!empty) {
      IntVec z = lo;
      for (;;) {
        IntVec Az = A * z;
        for (int i = 0; i < n; ++i) Az[i] += base[i];
        out.push_back(std::move(Az));
        int i = n - 1;
        while (i >= 0 && z[i] == hi[i]) {
          z[i] = lo[i];
          --i;
        }
        if (i < 0) break;
        ++z[i];
      }
    }
    int i = n - 1;
    while (i >= 0 && w[i] + 1 == d[i]) {
      w[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

static BaseSelection greedy_base(const IntMat& A) {
  const int N = A.rows(), n = A.cols();
  std::vector<int> B;
  for (int i = 0; i < N && static_cast<int>(B.size()) < n; ++i) {
    std::vector<int> t = B;
    t.push_back(i);
    if (rank(A.select_rows(t)) == static_cast<int>(t.size())) B = t;
  }
  if (static_cast<int>(B.size()) != n) fail(ErrorKind::Rank, "matrix is not of full column rank");
  Int cur = abs(det(A.select_rows(B)));
  for (;;) {
    Int best = cur;
    int bi = -1, bj = -1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < N; ++j) {
        if (std::find(B.begin(), B.end(), j) != B.end()) continue;
        std::vector<int> t = B;
        t[i] = j;
        std::sort(t.begin(), t.end());
        Int d = abs(det(A.select_rows(t)));
        if (d > best) best = d, bi = i, bj = j;
      }
    if (bi < 0) break;
    B[bi] = bj;
    std::sort(B.begin(), B.end());
    cur = best;
  }
  return {B, cur, false};
}

BaseSelection max_det_submatrix(const IntMat& A, BaseMode mode) {
  const int N = A.rows(), n = A.cols();
  if (n == 0 || N < n) fail(ErrorKind::Dimension, "base selection needs rows >= cols >= 1");
  if (rank(A) != n) fail(ErrorKind::Rank, "matrix is not of full column rank");
  if (mode == BaseMode::Auto) mode = binomial(N, n) <= 1e5 ? BaseMode::Exact : BaseMode::Greedy;
  if (mode == BaseMode::Greedy) return greedy_base(A);
  BaseSelection best;
  best.exact = true;
  for_each_subset(N, n, [&](const std::vector<int>& ri) {
    Int d = abs(det(A.select_rows(ri)));
    if (d > best.abs_det) best.abs_det = d, best.rows = ri;
    return true;
  });
  return best;
}

}  // namespace dilp
