#include "dilp/reductions.hpp"

#include <numeric>

#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"

namespace dilp {

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(std::max(0, hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

IntVec affine(const RatMat& M, const RatVec& q, const IntVec& x, const char* what) {
  RatVec y = M * to_rat(x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += q[i];
  if (!is_integral(y)) fail(ErrorKind::Domain, std::string(what) + " image is not integral");
  return to_int(y);
}

// Delta relations are only checked when the minor count stays small.
bool cheap_minors(const IntMat& A) {
  int k = std::min(A.rows(), A.cols());
  return binomial(std::max(A.rows(), A.cols()), k) <= 2e4;
}

const char* verdict(bool ok) { return ok ? "ok" : "violated"; }

}  // namespace

IntVec ReductionMap::forward(const IntVec& source) const { return affine(M, q, source, "forward"); }
IntVec ReductionMap::backward(const IntVec& target) const { return affine(Minv, qinv, target, "backward"); }

std::pair<StandardInstance, ReductionMap> cf_to_sf(const CanonicalInstance& src) {
  require_valid(src);
  const int N = src.rows(), n = src.n(), m = N - n;
  int finite = 0;
  for (auto& v : src.b_l) finite += v.finite();
  const bool ilp = finite == 0 && N > 0;
  if (!ilp && finite != N) fail(ErrorKind::Precondition, "b_l must be all finite or all -inf");

  IntMat A = src.A;
  IntVec bl(N);
  ExtVec u(N, ExtInt::pos_inf());
  for (int i = 0; i < N; ++i) {
    if (ilp) {
      A.negate_row(i);
      bl[i] = -src.b_r[i];
    } else {
      bl[i] = src.b_l[i].value();
      u[i] = src.b_r[i] - bl[i];
    }
  }

  SnfResult F = snf(A);
  IntMat Ahat = F.Pinv.select_rows(range(n, N));
  IntMat G = F.Pinv.select_rows(range(0, n));
  IntVec bhat = Ahat * bl, graw = G * bl;
  for (auto& v : bhat) v = -v;
  for (auto& v : graw) v = -v;

  std::vector<int> base;
  if (ilp) {
    LpOutcome lp = solve_lp(src);
    if (lp.status == Status::Infeasible) fail(ErrorKind::Domain, "LP relaxation is infeasible");
    if (lp.status == Status::Unbounded) fail(ErrorKind::Domain, "LP relaxation is unbounded");
    base = lp.base;
  } else {
    base = max_det_submatrix(A).rows;
  }
  IntMat AB = A.select_rows(base);
  const Int D = det(AB);
  const IntMat adj = adjugate(AB);
  IntVec w(N, Int(0));
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += src.c[i] * adj(i, j);
    w[base[j]] = -sign(D) * s;
  }

  // x_hat = F x_tilde + f with F = diag(+-1) turning every cost nonnegative
  std::vector<int> flip(N, 1);
  IntVec f(N, Int(0));
  for (int i = 0; i < N; ++i) {
    if (w[i] >= 0) continue;
    if (!u[i].finite()) fail(ErrorKind::Domain, "negative cost on an unbounded slack");
    flip[i] = -1;
    f[i] = u[i].value();
  }

  StandardInstance out;
  out.A = Ahat;
  out.G = G;
  for (int i = 0; i < N; ++i)
    if (flip[i] < 0) out.A.negate_col(i), out.G.negate_col(i);
  IntVec Af = Ahat * f, Gf = G * f;
  out.b = bhat;
  for (int k = 0; k < m; ++k) out.b[k] -= Af[k];
  out.S = F.S;
  out.g.resize(n);
  for (int k = 0; k < n; ++k) out.g[k] = mod_pos(graw[k] - Gf[k], F.S(k, k));
  out.u = u;
  out.c.resize(N);
  for (int i = 0; i < N; ++i) out.c[i] = abs(w[i]);

  ReductionMap R;
  R.direction = ilp ? "ilp-cf->ilp-sf" : "bilp-cf->bilp-sf";
  R.M = to_rat(A);
  R.q.resize(N);
  for (int i = 0; i < N; ++i) {
    R.q[i] = -(bl[i] + f[i]);
    if (flip[i] < 0)
      for (int j = 0; j < n; ++j) R.M(i, j) = -R.M(i, j);
    R.q[i] *= flip[i];
  }
  RatMat ABinv = inverse(AB);
  R.Minv = RatMat(n, N);
  R.qinv.assign(n, Rat(0));
  RatVec shift(n);
  for (int j = 0; j < n; ++j) shift[j] = Rat(f[base[j]] + bl[base[j]]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R.Minv(i, base[j]) = ABinv(i, j) * flip[base[j]];
      R.qinv[i] += ABinv(i, j) * shift[j];
    }
  R.alpha = Rat(-1) / Rat(abs(D));
  Rat wf = 0;
  for (int i = 0; i < N; ++i) wf += Rat(w[i] * f[i]);
  RatVec blB(n);
  for (int j = 0; j < n; ++j) blB[j] = Rat(bl[base[j]]);
  R.beta = dot(to_rat(src.c), ABinv * blB) + R.alpha * wf;

  std::string bs;
  for (int i : base) bs += (bs.empty() ? "" : ",") + std::to_string(i);
  R.meta.emplace_back("base", bs);
  R.meta.emplace_back("det_S", str(F.det()));
  R.meta.emplace_back("annihilates", verdict(Ahat * A == IntMat(m, n)));
  if (cheap_minors(A) && cheap_minors(Ahat)) {
    Int dA = delta(A), dg = delta_gcd(A);
    R.meta.emplace_back("delta_source", str(dA));
    R.meta.emplace_back("delta_target", str(delta(Ahat)));
    R.meta.emplace_back("delta_relation", verdict(delta(Ahat) * dg == dA && F.det() == dg));
  } else {
    R.meta.emplace_back("delta_relation", "skipped");
  }
  return {out, R};
}

std::pair<CanonicalInstance, ReductionMap> sf_to_cf(const StandardInstance& src) {
  require_valid(src);
  const int n = src.n(), m = src.m(), d = n - m;
  IntMat P = IntMat::vstack(src.A, src.G);
  IntMat Pinv = unimodular_inverse(P);
  IntVec bg = src.b;
  bg.insert(bg.end(), src.g.begin(), src.g.end());
  IntVec r = Pinv * bg;
  IntMat Ahat = Pinv.select_cols(range(m, n)) * src.S;

  CanonicalInstance out;
  out.A = Ahat;
  out.b_l.resize(n);
  out.b_r.resize(n);
  for (int i = 0; i < n; ++i) {
    if (src.u[i].finite()) {
      out.b_l[i] = -r[i];
      out.b_r[i] = src.u[i].value() - r[i];
    } else {
      out.A.negate_row(i);
      out.b_l[i] = ExtInt::neg_inf();
      out.b_r[i] = r[i];
    }
  }
  out.c.assign(d, Int(0));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) out.c[j] -= Ahat(i, j) * src.c[i];

  ReductionMap R;
  R.direction = src.bounded() ? "bilp-sf->bilp-cf" : "ilp-sf->ilp-cf";
  R.M = RatMat(d, n);
  R.q.resize(d);
  for (int k = 0; k < d; ++k) {
    Rat inv = Rat(1) / Rat(src.S(k, k));
    for (int j = 0; j < n; ++j) R.M(k, j) = inv * Rat(src.G(k, j));
    R.q[k] = -inv * Rat(src.g[k]);
  }
  R.Minv = to_rat(Ahat);
  R.qinv = to_rat(r);
  R.alpha = -1;
  R.beta = Rat(dot(src.c, r));

  R.meta.emplace_back("det_S", str(src.det_S()));
  R.meta.emplace_back("annihilates", verdict(src.A * Ahat == IntMat(m, d)));
  if (d > 0 && cheap_minors(Ahat) && cheap_minors(src.A)) {
    Int dA = m == 0 ? Int(1) : delta(src.A);
    Int dh = delta(Ahat);
    R.meta.emplace_back("delta_source", str(dA));
    R.meta.emplace_back("delta_target", str(dh));
    R.meta.emplace_back("delta_relation", verdict(dh == dA * src.det_S() && delta_gcd(Ahat) == src.det_S()));
  } else {
    R.meta.emplace_back("delta_relation", d == 0 ? "trivial" : "skipped");
  }
  return {out, R};
}

ClassicReduction classic_to_generalized(const IntMat& A, const IntVec& b, const IntVec& c, const ExtVec& u) {
  const int m = A.rows(), n = A.cols();
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n || static_cast<int>(u.size()) != n)
    fail(ErrorKind::Dimension, "classic instance sizes disagree");
  if (m > n || rank(A) != m) fail(ErrorKind::Rank, "A must have full row rank");
  for (auto& v : u)
    if (v.is_neg_inf() || (v.finite() && v.value() < 0)) fail(ErrorKind::Precondition, "negative upper bound");

  ClassicReduction res;
  ReductionMap& R = res.map;
  R.direction = "classic-sf->sf";
  // A^T = P [S; 0] Q, so A = Q^T [S 0] P^T and (S^{-1} Qinv^T) A = first m rows of P^T
  SnfResult F = snf(A.transpose());
  IntMat Pt = F.P.transpose();
  IntMat A1 = Pt.select_rows(range(0, m));
  IntMat G = Pt.select_rows(range(m, n));
  IntVec qb = F.Qinv.transpose() * b;
  IntVec b1(m);
  for (int i = 0; i < m; ++i) {
    if (qb[i] % F.S(i, i) != 0) {
      res.infeasible = true;
      R.meta.emplace_back("certificate", "row " + std::to_string(i) + " of S^-1 P^-1 b is fractional");
      return res;
    }
    b1[i] = qb[i] / F.S(i, i);
  }
  R.meta.emplace_back("delta_gcd", str(F.det()));

  // minimize d x with d = -c; shift by LP duals when a negative cost sits on an unbounded variable
  RatVec dvec(n);
  for (int j = 0; j < n; ++j) dvec[j] = Rat(-c[j]);
  RatVec y(m, Rat(0));
  bool need_shift = false;
  for (int j = 0; j < n; ++j) need_shift |= dvec[j] < 0 && !u[j].finite();
  if (need_shift) {
    std::vector<int> fin;
    for (int j = 0; j < n; ++j)
      if (u[j].finite()) fin.push_back(j);
    const int k = static_cast<int>(fin.size());
    RatMat M(m + k, n + k);
    RatVec h(m + k), cost(n + k, Rat(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = A1(i, j);
      h[i] = b1[i];
    }
    for (int t = 0; t < k; ++t) {
      M(m + t, fin[t]) = 1;
      M(m + t, n + t) = 1;
      h[m + t] = u[fin[t]].value();
    }
    for (int j = 0; j < n; ++j) cost[j] = dvec[j];
    StdLpResult lp = simplex_standard(M, h, cost);
    if (lp.status == Status::Infeasible) {
      res.infeasible = true;
      R.meta.emplace_back("certificate", "LP relaxation is infeasible");
      return res;
    }
    if (lp.status == Status::Unbounded) fail(ErrorKind::Domain, "LP relaxation is unbounded");
    if (static_cast<int>(lp.basis.size()) != m + k) fail(ErrorKind::Rank, "degenerate row structure");
    RatMat MB = M.select_cols(lp.basis);
    RatVec cB(m + k);
    for (int i = 0; i < m + k; ++i) cB[i] = cost[lp.basis[i]];
    RatVec dual = inverse(MB.transpose()) * cB;
    for (int i = 0; i < m; ++i) y[i] = dual[i];
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i) dvec[j] -= y[i] * Rat(A1(i, j));
  }
  Int L = 1;
  for (auto& v : dvec) L = lcm(L, v.get_den());
  IntVec w(n);
  for (int j = 0; j < n; ++j) w[j] = rat_floor(dvec[j] * Rat(L));

  StandardInstance& out = res.inst;
  out.A = A1;
  out.G = G;
  out.S = IntMat::identity(n - m);
  out.b = b1;
  out.g.assign(n - m, Int(0));
  out.u = u;
  out.c.resize(n);
  R.M = RatMat::identity(n);
  R.q.assign(n, Rat(0));
  IntVec f(n, Int(0));
  for (int j = 0; j < n; ++j) {
    out.c[j] = abs(w[j]);
    if (w[j] >= 0) continue;
    if (!u[j].finite()) fail(ErrorKind::Domain, "negative reduced cost on an unbounded variable");
    f[j] = u[j].value();
    out.A.negate_col(j);
    out.G.negate_col(j);
    R.M(j, j) = -1;
    R.q[j] = Rat(f[j]);
  }
  IntVec Af = A1 * f;
  for (int i = 0; i < m; ++i) out.b[i] -= Af[i];
  R.Minv = R.M;
  R.qinv = R.q;
  // c x = -(d x) = -(w x / L + y b1),  w x = target + w f
  R.alpha = Rat(-1) / Rat(L);
  R.beta = -Rat(dot(w, f)) / Rat(L) - dot(y, to_rat(b1));
  R.meta.emplace_back("cost_scale", str(L));
  return res;
}

GroupInstance standard_to_group(const StandardInstance& I) {
  require_valid(I);
  if (I.m() != 0) fail(ErrorKind::Precondition, "group form needs m = 0");
  GroupInstance out;
  out.group.moduli = I.moduli();
  const int n = I.n();
  for (int j = 0; j < n; ++j) {
    IntVec e(n);
    for (int k = 0; k < n; ++k) e[k] = mod_pos(I.G(k, j), I.S(k, k));
    out.gens.push_back(e);
  }
  out.target = I.g;
  out.c = I.c;
  out.u = I.u;
  return out;
}

}  // namespace dilp
