#include "dilp/lp.hpp"

#include <algorithm>
#include <map>

#include "dilp/linalg.hpp"

namespace dilp {

namespace {

struct Tableau {
  std::vector<RatVec> T;  // rows; last entry is the right-hand side
  std::vector<int> basis;
  int width = 0;          // number of variable columns

  void pivot(int r, int j) {
    Rat piv = T[r][j];
    for (auto& x : T[r]) x /= piv;
    for (size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == r || T[i][j] == 0) continue;
      Rat f = T[i][j];
      for (int k = 0; k <= width; ++k)
        if (T[r][k] != 0) T[i][k] -= f * T[r][k];
    }
    basis[r] = j;
  }

  // Bland's rule over columns [0, allowed). Returns Optimal or Unbounded.
  Status run(const RatVec& cost, int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        Rat r = cost[j];
        for (size_t i = 0; i < T.size(); ++i)
          if (T[i][j] != 0) r -= cost[basis[i]] * T[i][j];
        if (r < 0) enter = j;
      }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < T.size(); ++i) {
        if (T[i][enter] <= 0) continue;
        Rat ratio = T[i][width] / T[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

StdLpResult simplex_standard(const RatMat& A, const RatVec& b, const RatVec& c) {
  const int p = A.rows(), q = A.cols();
  StdLpResult res;
  if (static_cast<int>(b.size()) != p || static_cast<int>(c.size()) != q)
    fail(ErrorKind::Dimension, "lp shape mismatch");
  if (p == 0) {
    for (int j = 0; j < q; ++j)
      if (c[j] < 0) {
        res.status = Status::Unbounded;
        return res;
      }
    res.status = Status::Optimal;
    res.x = RatVec(q, Rat(0));
    return res;
  }
  Tableau tb;
  tb.width = q + p;
  tb.T.assign(p, RatVec(q + p + 1, Rat(0)));
  tb.basis.resize(p);
  for (int i = 0; i < p; ++i) {
    int sg = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < q; ++j) tb.T[i][j] = sg * A(i, j);
    tb.T[i][q + i] = 1;
    tb.T[i][q + p] = sg * b[i];
    tb.basis[i] = q + i;
  }
  RatVec cost1(q + p, Rat(0));
  for (int i = 0; i < p; ++i) cost1[q + i] = 1;
  tb.run(cost1, q + p);
  Rat infeas = 0;
  for (int i = 0; i < p; ++i)
    if (tb.basis[i] >= q) infeas += tb.T[i][q + p];
  if (infeas > 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // drive remaining artificials out of the basis; drop redundant rows
  std::vector<RatVec> rows;
  std::vector<int> basis;
  for (int i = 0; i < p; ++i) {
    if (tb.basis[i] >= q) {
      int j = 0;
      while (j < q && tb.T[i][j] == 0) ++j;
      if (j == q) continue;
      tb.pivot(i, j);
    }
  }
  for (int i = 0; i < p; ++i)
    if (tb.basis[i] < q) rows.push_back(tb.T[i]), basis.push_back(tb.basis[i]);
  tb.T = rows;
  tb.basis = basis;
  RatVec cost2(q + p, Rat(0));
  for (int j = 0; j < q; ++j) cost2[j] = c[j];
  Status st = tb.run(cost2, q);
  if (st == Status::Unbounded) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.x = RatVec(q, Rat(0));
  for (size_t i = 0; i < tb.T.size(); ++i) res.x[tb.basis[i]] = tb.T[i][q + p];
  res.basis = tb.basis;
  res.objective = dot(c, res.x);
  return res;
}

LpOutcome solve_lp(const CanonicalInstance& I) {
  require_valid(I);
  const int N = I.A.rows(), n = I.A.cols();
  // stacked one-sided rows alpha_k x <= beta_k
  std::vector<int> src;
  std::vector<bool> up;
  RatVec beta;
  for (int i = 0; i < N; ++i) {
    src.push_back(i), up.push_back(true), beta.push_back(I.b_r[i]);
    if (I.b_l[i].finite()) src.push_back(i), up.push_back(false), beta.push_back(-I.b_l[i].value());
  }
  const int K = static_cast<int>(src.size());
  RatMat D(n, K);
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < n; ++j) D(j, k) = up[k] ? Rat(I.A(src[k], j)) : Rat(-I.A(src[k], j));
  LpOutcome out;
  StdLpResult dual = simplex_standard(D, to_rat(I.c), beta);
  if (dual.status == Status::Optimal) {
    std::vector<std::pair<int, bool>> b;
    for (int k : dual.basis) b.emplace_back(src[k], up[k]);
    std::sort(b.begin(), b.end());
    IntMat AB(n, n);
    RatVec rhs(n);
    for (int r = 0; r < n; ++r) {
      out.base.push_back(b[r].first);
      out.upper.push_back(b[r].second);
      for (int j = 0; j < n; ++j) AB(r, j) = I.A(b[r].first, j);
      rhs[r] = b[r].second ? Rat(I.b_r[b[r].first]) : Rat(I.b_l[b[r].first].value());
    }
    out.vertex = solve_square(AB, rhs);
    out.objective = dot(to_rat(I.c), out.vertex);
    out.status = Status::Optimal;
    return out;
  }
  if (dual.status == Status::Unbounded) {
    out.status = Status::Infeasible;
    return out;
  }
  out.status = lp_feasible(I) ? Status::Unbounded : Status::Infeasible;
  return out;
}

bool lp_feasible(const CanonicalInstance& I) {
  const int N = I.A.rows(), n = I.A.cols();
  std::vector<RatVec> cols;
  RatVec beta;
  for (int i = 0; i < N; ++i) {
    RatVec a(n);
    for (int j = 0; j < n; ++j) a[j] = I.A(i, j);
    cols.push_back(a), beta.push_back(I.b_r[i]);
    if (I.b_l[i].finite()) {
      for (auto& x : a) x = -x;
      cols.push_back(a), beta.push_back(-I.b_l[i].value());
    }
  }
  const int K = static_cast<int>(cols.size());
  RatMat F(n + 1, K);
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < n; ++j) F(j, k) = cols[k][j];
    F(n, k) = 1;
  }
  RatVec rhs(n + 1, Rat(0));
  rhs[n] = 1;
  StdLpResult r = simplex_standard(F, rhs, beta);
  if (r.status != Status::Optimal) return true;
  return r.objective >= 0;
}

LpOutcome solve_lp(const StandardInstance& I) {
  const int n = I.n(), m = I.m();
  std::vector<int> bounded;
  for (int j = 0; j < n; ++j)
    if (I.u[j].finite()) bounded.push_back(j);
  const int w = static_cast<int>(bounded.size());
  RatMat A(m + w, n + w);
  RatVec b(m + w), c(n + w, Rat(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = I.A(i, j);
    b[i] = I.b[i];
  }
  for (int k = 0; k < w; ++k) {
    A(m + k, bounded[k]) = 1;
    A(m + k, n + k) = 1;
    b[m + k] = I.u[bounded[k]].value();
  }
  for (int j = 0; j < n; ++j) c[j] = I.c[j];
  StdLpResult r = simplex_standard(A, b, c);
  LpOutcome out;
  out.status = r.status;
  if (r.status != Status::Optimal) return out;
  out.vertex.assign(r.x.begin(), r.x.begin() + n);
  for (int j : r.basis)
    if (j < n) out.base.push_back(j);
  std::sort(out.base.begin(), out.base.end());
  out.objective = r.objective;
  return out;
}

std::vector<LpVertex> enumerate_vertices(const CanonicalInstance& I) {
  const int N = I.A.rows(), n = I.A.cols();
  std::map<RatVec, std::vector<int>> found;
  for_each_subset(N, n, [&](const std::vector<int>& B) {
    IntMat AB = I.A.select_rows(B);
    if (det(AB) == 0) return true;
    RatMat inv = inverse(AB);
    // each base row may be tight at either finite side
    const int sides = 1 << n;
    for (int mask = 0; mask < sides; ++mask) {
      RatVec rhs(n);
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) {
        if (mask >> r & 1) {
          if (!I.b_l[B[r]].finite()) ok = false;
          else rhs[r] = I.b_l[B[r]].value();
        } else {
          rhs[r] = I.b_r[B[r]];
        }
      }
      if (!ok) continue;
      RatVec x = inv * rhs;
      bool feas = true;
      for (int i = 0; i < N && feas; ++i) {
        Rat ax = 0;
        for (int j = 0; j < n; ++j) ax += I.A(i, j) * x[j];
        if (ax > I.b_r[i]) feas = false;
        if (I.b_l[i].finite() && ax < I.b_l[i].value()) feas = false;
      }
      if (feas) found.emplace(x, B);
    }
    return true;
  });
  std::vector<LpVertex> out;
  for (auto& [x, B] : found) out.push_back({x, B});
  return out;
}

}  // namespace dilp
