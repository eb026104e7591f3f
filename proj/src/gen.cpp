#include "dilp/gen.hpp"

#include "dilp/linalg.hpp"
#include "dilp/reductions.hpp"

namespace dilp {

IntMat random_unimodular(Rng& r, int n) {
  IntMat U = IntMat::identity(n);
  if (n <= 1) return U;
  for (int s = 0; s < 2 * n; ++s) {
    int i = static_cast<int>(r.uniform(0, n - 1)), k = static_cast<int>(r.uniform(0, n - 2));
    if (k >= i) ++k;
    IntMat V = U;
    V.add_row(i, k, Int(r.uniform(-1, 1)));
    if (max_abs(V) <= 3) U = V;
  }
  for (int s = 0; s < n; ++s) U.swap_rows(static_cast<int>(r.uniform(0, n - 1)), static_cast<int>(r.uniform(0, n - 1)));
  return U;
}

IntMat random_snf(Rng& r, int k, long max_det) {
  IntVec d(k, Int(1));
  Int prod = 1;
  for (int i = k - 1; i >= 0; --i) {
    Int next = i + 1 < k ? d[i + 1] : Int(0);
    std::vector<long> opts;
    for (long v = 1; v <= max_det; ++v)
      if (prod * v <= max_det && (next == 0 || next % v == 0)) opts.push_back(v);
    long v = opts[r.uniform(0, static_cast<long>(opts.size()) - 1)];
    d[i] = v;
    prod *= v;
  }
  return diag(d);
}

StandardInstance random_standard(Rng& r, int n, int m, long max_det, long umax, bool bounded, long cmax) {
  if (n < 1 || m < 0 || m > n) fail(ErrorKind::Parameter, "need 0 <= m <= n and n >= 1");
  IntMat U = random_unimodular(r, n);
  StandardInstance I;
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) (i < m ? top : bottom).push_back(i);
  I.A = U.select_rows(top);
  I.G = U.select_rows(bottom);
  I.S = random_snf(r, n - m, max_det);
  IntVec x0(n);
  for (int j = 0; j < n; ++j) {
    long uj = r.uniform(0, umax);
    x0[j] = r.uniform(0, uj);
    I.u.push_back(bounded ? ExtInt(uj) : ExtInt::pos_inf());
    I.c.emplace_back(r.uniform(bounded ? 0 : 1, cmax));
  }
  I.b = I.A * x0;
  IntVec gx = I.G * x0;
  for (int i = 0; i < n - m; ++i) I.g.push_back(mod_pos(gx[i] + (r.coin(0.2) ? 1 : 0), I.S(i, i)));
  return I;
}

CanonicalInstance random_canonical(Rng& r, int n, int m, long amax, bool bounded, long cmax) {
  if (n < 1 || m < 0) fail(ErrorKind::Parameter, "need n >= 1 and m >= 0");
  CanonicalInstance I;
  for (;;) {
    IntMat A(n + m, n);
    for (int i = 0; i < n + m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = r.uniform(-amax, amax);
    if (rank(A) == n) {
      I.A = A;
      break;
    }
  }
  IntVec x0(n);
  for (auto& v : x0) v = r.uniform(-3, 3);
  IntVec Ax = I.A * x0;
  for (int i = 0; i < n + m; ++i) {
    I.b_r.push_back(Ax[i] + r.uniform(0, 3));
    I.b_l.push_back(bounded ? ExtInt(Ax[i] - r.uniform(0, 3)) : ExtInt::neg_inf());
  }
  for (int j = 0; j < n; ++j) I.c.emplace_back(r.uniform(-cmax, cmax));
  return I;
}

GroupInstance random_group(Rng& r, long max_order, int n, long cmax, bool cyclic) {
  GroupInstance G;
  if (cyclic) {
    G.group.moduli = {Int(r.uniform(1, max_order))};
  } else {
    IntMat S = random_snf(r, 3, max_order);
    for (int i = 0; i < 3; ++i)
      if (S(i, i) > 1) G.group.moduli.push_back(S(i, i));
    if (G.group.moduli.empty()) G.group.moduli = {Int(1)};
  }
  auto element = [&] {
    IntVec e;
    for (auto& d : G.group.moduli) e.emplace_back(r.uniform(0, d.get_si() - 1));
    return e;
  };
  for (int j = 0; j < n; ++j) {
    G.gens.push_back(element());
    G.c.emplace_back(r.uniform(0, cmax));
  }
  G.target = element();
  return G;
}

InstanceFile generate(const GenSpec& s, uint64_t seed) {
  if (s.n < 1 || s.m < 0) fail(ErrorKind::Parameter, "need n >= 1 and m >= 0");
  Rng root(seed);
  for (uint64_t attempt = 0; attempt < 10000; ++attempt) {
    Rng r = root.split(attempt);
    InstanceFile f;
    IntMat A;
    if (s.kind == "ilp-cf" || s.kind == "bilp-cf") {
      f = wrap(random_canonical(r, s.n, s.m, s.amax, s.kind == "bilp-cf", s.cmax));
      A = f.cf.A;
    } else if (s.kind == "ilp-sf" || s.kind == "bilp-sf") {
      if (s.m > s.n) fail(ErrorKind::Parameter, "standard form needs m <= n");
      f = wrap(random_standard(r, s.n, s.m, s.det_max, s.umax, s.kind == "bilp-sf", s.cmax));
      A = f.sf.A;
    } else if (s.kind == "group") {
      f = wrap(random_group(r, s.det_max, s.n, s.cmax, r.coin()));
    } else if (s.kind == "knapsack") {
      IntMat w(1, s.n);
      IntVec c;
      ExtVec u;
      IntVec x0;
      for (int j = 0; j < s.n; ++j) {
        w(0, j) = r.uniform(1, s.amax);
        c.emplace_back(r.uniform(1, s.cmax));
        long uj = r.uniform(0, s.umax);
        u.emplace_back(uj);
        x0.emplace_back(r.uniform(0, uj));
      }
      auto red = classic_to_generalized(w, w * x0, c, u);
      if (red.infeasible) continue;
      f = wrap(red.inst);
      A = f.sf.A;
    } else {
      fail(ErrorKind::Parameter, "unknown kind \"" + s.kind + "\"");
    }
    if (s.delta_max > 0 && A.rows() > 0 && delta(A) > s.delta_max) continue;
    f.comment = s.kind + " seed " + std::to_string(seed) + " attempt " + std::to_string(attempt);
    return f;
  }
  fail(ErrorKind::Cap, "no instance within the delta limit after 10000 attempts");
}

}  // namespace dilp
