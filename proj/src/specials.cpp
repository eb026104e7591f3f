#include "dilp/specials.hpp"

#include <algorithm>
#include <sstream>

#include "dilp/group.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"
#include "dilp/reductions.hpp"
#include "dilp/rng.hpp"

namespace dilp {

namespace {

void require_ilp_cf(const CanonicalInstance& I) {
  require_valid(I);
  for (auto& v : I.b_l)
    if (!v.is_neg_inf()) fail(ErrorKind::Precondition, "expected an ILP-CF instance (every b_l = -inf)");
}

std::string s_of(const Rat& q) { return str(q); }

// 2^(k - extra) <= D, i.e. k <= log2 D + extra
bool support_ok(long k, long extra, const Int& D) {
  if (k <= extra) return true;
  Int p = 1;
  for (long i = 0; i < k - extra; ++i) {
    p *= 2;
    if (p > D) return false;
  }
  return true;
}

void add(BoundsReport& R, const std::string& name, const std::string& lhs, const std::string& rhs, bool pass) {
  BoundEntry e;
  e.name = name;
  e.lhs = lhs;
  e.rhs = rhs;
  e.pass = pass;
  e.violations = pass ? 0 : 1;
  R.entries.push_back(e);
}

struct Norms {
  long l0 = 0;
  Rat l1 = 0, linf = 0;
};
Norms norms(const RatVec& x) {
  Norms n;
  for (auto& v : x) {
    Rat a = abs(v);
    if (a != 0) ++n.l0;
    n.l1 += a;
    n.linf = std::max(n.linf, a);
  }
  return n;
}

std::string log2_rhs(const Int& D, long extra) {
  return "log2(" + str(D) + ")" + (extra ? " + " + std::to_string(extra) : "");
}

// Dimension of the smallest face of {A x <= b} holding z.
int face_dimension(const IntMat& A, const IntVec& b, const IntVec& z) {
  IntVec Az = A * z;
  std::vector<int> tight;
  for (int i = 0; i < A.rows(); ++i)
    if (Az[i] == b[i]) tight.push_back(i);
  return A.cols() - (tight.empty() ? 0 : rank(A.select_rows(tight)));
}

struct Corner {
  SolveOutcome out;
  Int delta_base;
};

// max c x over {A_B x <= b_B}, B square and nonsingular.
Corner solve_corner(const IntMat& AB, const IntVec& bB, const IntVec& c) {
  CanonicalInstance K;
  K.A = AB;
  K.b_l.assign(AB.rows(), ExtInt::neg_inf());
  K.b_r = bB;
  K.c = c;
  Corner r;
  r.delta_base = abs(det(AB));
  LpOutcome lp = solve_lp(K);
  if (lp.status == Status::Unbounded) {
    r.out.status = Status::Unbounded;
    return r;
  }
  auto [S, map] = cf_to_sf(K);
  GroupInstance G = standard_to_group(S);
  SolveOutcome g = gomory_solve(G);
  if (g.status != Status::Optimal) fail(ErrorKind::Domain, "corner group problem has no solution");
  r.out.status = Status::Optimal;
  r.out.x = map.backward(g.x);
  r.out.value = dot(c, r.out.x);
  r.out.note("group_order", str(G.group.order()));
  return r;
}

}  // namespace

LocalityVerdict locality_test(const CanonicalInstance& I, const std::vector<int>& base) {
  require_ilp_cf(I);
  const int N = I.rows(), n = I.n();
  if (static_cast<int>(base.size()) != n) fail(ErrorKind::Base, "base must have n rows");
  std::vector<char> in(N, 0);
  for (int r : base) {
    if (r < 0 || r >= N || in[r]) fail(ErrorKind::Base, "base rows must be distinct row indices");
    in[r] = 1;
  }
  IntMat AB = I.A.select_rows(base);
  LocalityVerdict out;
  out.delta_base = abs(det(AB));
  if (out.delta_base == 0) fail(ErrorKind::Base, "singular base");
  IntVec bB;
  for (int r : base) bB.push_back(I.b_r[r]);
  out.v = solve_square(AB, to_rat(bB));
  out.Delta = delta(I.A);
  out.pass = true;
  Rat need = Rat(out.Delta - 1);
  for (int r = 0; r < N; ++r) {
    if (in[r]) continue;
    Rat s = Rat(I.b_r[r]);
    for (int j = 0; j < n; ++j) s -= Rat(I.A(r, j)) * out.v[j];
    if (s < 0) fail(ErrorKind::Base, "base vertex violates row " + std::to_string(r));
    out.nonbase.push_back(r);
    out.slack.push_back(s);
    if (s < need) out.pass = false;
  }
  return out;
}

LocalOutcome solve_local(const CanonicalInstance& I, const std::vector<int>& base) {
  LocalityVerdict lv = locality_test(I, base);
  const int n = I.n(), m = I.m();
  IntMat AB = I.A.select_rows(base);
  IntVec bB;
  for (int r : base) bB.push_back(I.b_r[r]);
  LocalOutcome L;
  L.v = lv.v;
  Corner cr = solve_corner(AB, bB, I.c);
  L.outcome = cr.out;
  L.outcome.note("locality", lv.pass ? "pass" : "fail");
  if (cr.out.status != Status::Optimal) return L;
  const IntVec& z = L.outcome.x;
  IntVec ABz = AB * z;
  for (int i = 0; i < n; ++i) L.y.push_back(bB[i] - ABz[i]);
  L.feasible = feasible(I, z);
  L.outcome.note("feasible_in_full_problem", L.feasible ? "yes" : "no");

  const Int& D = lv.Delta;
  const Int& DB = lv.delta_base;
  RatVec diff(n);
  for (int j = 0; j < n; ++j) diff[j] = lv.v[j] - Rat(z[j]);
  RatVec Avz = to_rat(I.A) * diff;
  IntVec Az = I.A * z;
  RatVec slack(I.rows());
  for (int r = 0; r < I.rows(); ++r) slack[r] = Rat(I.b_r[r] - Az[r]);
  Norms ny = norms(to_rat(L.y)), nd = norms(Avz), ns = norms(slack), nN = norms(lv.slack);
  RatVec AN;
  for (int r : lv.nonbase) AN.push_back(Avz[r]);
  Norms nan = norms(AN);

  BoundsReport& R = L.report;
  Int prod = 1;
  for (auto& v : L.y) prod *= v + 1;
  add(R, "base slack product", str(prod), str(DB), prod <= DB);
  add(R, "base slack l1", str(ny.l1), str(Int(DB - 1)), ny.l1 <= Rat(DB - 1));
  add(R, "non-base shift linf", s_of(nan.linf), str(Int(D - 1)), nan.linf <= Rat(D - 1));
  add(R, "shift support", std::to_string(nd.l0), log2_rhs(DB, m), support_ok(nd.l0, m, DB));
  add(R, "shift l1", s_of(nd.l1), str(Int(DB - 1 + m * (D - 1))), nd.l1 <= Rat(DB - 1 + m * (D - 1)));
  add(R, "shift linf", s_of(nd.linf), str(Int(D - 1)), nd.linf <= Rat(D - 1));
  add(R, "slack support", std::to_string(ns.l0), log2_rhs(DB, m), support_ok(ns.l0, m, DB));
  add(R, "slack l1", s_of(ns.l1), s_of(Rat(DB - 1 + m * (D - 1)) + nN.l1),
      ns.l1 <= Rat(DB - 1 + m * (D - 1)) + nN.l1);
  add(R, "slack linf", s_of(ns.linf), s_of(Rat(D - 1) + nN.linf), ns.linf <= Rat(D - 1) + nN.linf);
  if (L.feasible) {
    L.face_dim = face_dimension(I.A, I.b_r, z);
    add(R, "face dimension", std::to_string(L.face_dim), log2_rhs(DB, 0), support_ok(L.face_dim, 0, DB));
  }
  return L;
}

SimplexOutcome simplex_feasibility(const IntMat& A, const IntVec& b) {
  const int n = A.cols();
  if (A.rows() != n + 1) fail(ErrorKind::Precondition, "simplex system needs n + 1 rows");
  if (static_cast<int>(b.size()) != n + 1) fail(ErrorKind::Dimension, "b length differs from row count");
  if (rank(A) != n) fail(ErrorKind::Precondition, "simplex system must have rank n");
  // bounded iff the one-dimensional left kernel has a strictly positive generator
  IntMat K = integer_kernel(A.transpose());
  if (K.cols() != 1) fail(ErrorKind::Precondition, "simplex system must have a one-dimensional left kernel");
  int pos = 0, neg = 0;
  for (int i = 0; i <= n; ++i) {
    if (K(i, 0) > 0) ++pos;
    if (K(i, 0) < 0) ++neg;
  }
  if ((pos && neg) || pos + neg != n + 1) fail(ErrorKind::Precondition, "system is not a bounded simplex");

  SimplexOutcome out;
  int drop = -1;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> rows;
    for (int i = 0; i <= n; ++i)
      if (i != k) rows.push_back(i);
    Int d = abs(det(A.select_rows(rows)));
    if (drop < 0 || d < out.delta_base) drop = k, out.delta_base = d, out.base = rows;
  }
  CanonicalInstance P;
  P.A = A;
  P.b_l.assign(n + 1, ExtInt::neg_inf());
  P.b_r = b;
  P.c.assign(n, Int(0));
  if (!lp_feasible(P)) {
    out.empty_relaxation = true;
    return out;
  }
  IntMat AB = A.select_rows(out.base);
  IntVec bB, a = A.row(drop);
  for (int r : out.base) bB.push_back(b[r]);
  IntVec na(n);
  for (int j = 0; j < n; ++j) na[j] = -a[j];
  Corner cr = solve_corner(AB, bB, na);
  if (cr.out.status != Status::Optimal) fail(ErrorKind::Domain, "corner of a bounded simplex is unbounded");
  if (-cr.out.value > b[drop]) return out;
  out.feasible = true;
  out.point = cr.out.x;
  P.c = na;
  out.face_dim = face_dimension(A, b, out.point);

  CanonicalInstance Q = P;
  auto lv = locality_test(Q, out.base);
  const Int& D = lv.Delta;
  const Int& DB = out.delta_base;
  RatVec diff(n);
  for (int j = 0; j < n; ++j) diff[j] = lv.v[j] - Rat(out.point[j]);
  Norms nd = norms(to_rat(A) * diff);
  IntVec Az = A * out.point;
  RatVec slack(n + 1);
  for (int i = 0; i <= n; ++i) slack[i] = Rat(b[i] - Az[i]);
  Norms ns = norms(slack);
  BoundsReport& R = out.report;
  add(R, "face dimension", std::to_string(out.face_dim), log2_rhs(DB, 0), support_ok(out.face_dim, 0, DB));
  add(R, "shift support", std::to_string(nd.l0), log2_rhs(DB, 1), support_ok(nd.l0, 1, DB));
  add(R, "shift l1", s_of(nd.l1), str(Int(DB + D - 2)), nd.l1 <= Rat(DB + D - 2));
  add(R, "shift linf", s_of(nd.linf), str(Int(D - 1)), nd.linf <= Rat(D - 1));
  add(R, "slack support", std::to_string(ns.l0), log2_rhs(DB, 1), support_ok(ns.l0, 1, DB));
  return out;
}

SubsetSumOutcome subset_sum_unbounded(const IntVec& w, const Int& W) {
  const int n = static_cast<int>(w.size());
  if (n == 0) fail(ErrorKind::Precondition, "no items");
  for (auto& v : w)
    if (v <= 0) fail(ErrorKind::Precondition, "weights must be positive");
  if (W < 0) fail(ErrorKind::Precondition, "target must be nonnegative");
  SubsetSumOutcome out;
  for (int i = 1; i < n; ++i)
    if (w[i] < w[out.pivot]) out.pivot = i;
  const Int& w1 = w[out.pivot];
  out.x.assign(n, Int(0));
  if (n == 1 || w1 == 1) {
    out.feasible = W % w1 == 0;
    if (out.feasible) out.x[out.pivot] = W / w1;
    if (n > 1 && out.feasible) out.info.emplace_back("path", "trivial group");
    return out;
  }
  GroupInstance G;
  G.group.moduli = {w1};
  G.target = {mod_pos(W, w1)};
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    if (i == out.pivot) continue;
    idx.push_back(i);
    G.gens.push_back({mod_pos(w[i], w1)});
    G.c.push_back(w[i]);
  }
  SolveOutcome g = gomory_solve(G);
  out.info.emplace_back("path", "group Z_" + str(w1));
  if (g.status != Status::Optimal) return out;
  out.group_value = g.value;
  if (g.value > W) return out;
  out.feasible = true;
  for (size_t k = 0; k < idx.size(); ++k) out.x[idx[k]] = g.x[k];
  out.x[out.pivot] = (W - g.value) / w1;
  return out;
}

int knapsack_pivot(const IntVec& w, const IntVec& c) {
  int j = 0;
  for (int i = 1; i < static_cast<int>(w.size()); ++i)
    if (c[i] * w[j] > c[j] * w[i]) j = i;
  return j;
}

namespace {

SolveOutcome knapsack_capacity_dp(const IntVec& w, const IntVec& c, const Int& W) {
  const int n = static_cast<int>(w.size());
  if (W > Int(50000000)) fail(ErrorKind::Cap, "capacity DP beyond 5e7 capacities");
  const long cap = to_i64(W);
  std::vector<Int> best(cap + 1, Int(0));
  std::vector<int> take(cap + 1, -1);
  std::vector<long> wl(n);
  for (int i = 0; i < n; ++i) wl[i] = w[i] > W ? cap + 1 : to_i64(w[i]);
  for (long q = 1; q <= cap; ++q) {
    best[q] = best[q - 1];
    take[q] = -1;
    for (int i = 0; i < n; ++i)
      if (wl[i] <= q && best[q - wl[i]] + c[i] > best[q]) best[q] = best[q - wl[i]] + c[i], take[q] = i;
  }
  SolveOutcome out;
  out.status = Status::Optimal;
  out.x.assign(n, Int(0));
  for (long q = cap; q > 0;) {
    if (take[q] < 0) {
      --q;
      continue;
    }
    out.x[take[q]] += 1;
    q -= wl[take[q]];
  }
  out.value = dot(c, out.x);
  out.note("path", "capacity");
  return out;
}

}  // namespace

SolveOutcome knapsack_unbounded(const IntVec& w, const IntVec& c, const Int& W, KnapsackPath path) {
  const int n = static_cast<int>(w.size());
  if (n == 0 || c.size() != w.size()) fail(ErrorKind::Precondition, "weights and profits must be nonempty and aligned");
  for (int i = 0; i < n; ++i)
    if (w[i] <= 0 || c[i] <= 0) fail(ErrorKind::Precondition, "weights and profits must be positive");
  if (W < 0) fail(ErrorKind::Precondition, "capacity must be nonnegative");
  const int j = knapsack_pivot(w, c);
  const Int& wj = w[j];
  if (path == KnapsackPath::Auto) path = W >= wj * wj ? KnapsackPath::Group : KnapsackPath::Capacity;
  if (path == KnapsackPath::Capacity) return knapsack_capacity_dp(w, c, W);

  // x_j = (W - sum_{i != j} w_i x_i - s) / w_j; profit = (c_j W - group cost) / w_j
  GroupInstance G;
  G.group.moduli = {wj};
  G.target = {mod_pos(W, wj)};
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    idx.push_back(i);
    G.gens.push_back({mod_pos(w[i], wj)});
    G.c.push_back(c[j] * w[i] - c[i] * wj);
  }
  G.gens.push_back({mod_pos(Int(1), wj)});
  G.c.push_back(c[j]);
  SolveOutcome g = gomory_solve(G);
  Int used = 0;
  IntVec x(n, Int(0));
  for (size_t k = 0; k < idx.size(); ++k) {
    x[idx[k]] = g.x[k];
    used += w[idx[k]] * g.x[k];
  }
  Int slack = g.x.back();
  used += slack;
  if (g.status != Status::Optimal || used > W) {
    SolveOutcome out = knapsack_capacity_dp(w, c, W);
    out.note("group_witness", "violates x_j >= 0; capacity DP used");
    return out;
  }
  x[j] = (W - used) / wj;
  SolveOutcome out;
  out.status = Status::Optimal;
  out.x = x;
  out.value = dot(c, x);
  if (out.value * wj != c[j] * W - g.value) fail(ErrorKind::Domain, "knapsack objective bookkeeping mismatch");
  out.note("path", "group Z_" + str(wj));
  out.note("slack", str(slack));
  return out;
}

std::vector<SamplerRow> locality_sampler(const IntMat& A, const std::vector<long>& t_grid, long samples,
                                         uint64_t seed) {
  const int N = A.rows(), n = A.cols();
  if (rank(A) != n) fail(ErrorKind::Precondition, "sampler matrix must have full column rank");
  if (samples < 0) fail(ErrorKind::Parameter, "negative sample count");
  std::vector<std::vector<int>> bases;
  for_each_subset(N, n, [&](const std::vector<int>& B) {
    if (det(A.select_rows(B)) != 0) bases.push_back(B);
    return true;
  });
  Rng root(seed);
  std::vector<SamplerRow> out;
  for (size_t k = 0; k < t_grid.size(); ++k) {
    const long t = t_grid[k];
    if (t < 0) fail(ErrorKind::Parameter, "negative radius");
    Rng r = root.split(k);
    SamplerRow row;
    row.t = t;
    row.samples = samples;
    CanonicalInstance I;
    I.A = A;
    I.b_l.assign(N, ExtInt::neg_inf());
    I.c.assign(n, Int(0));
    for (long s = 0; s < samples; ++s) {
      I.b_r.assign(N, Int(0));
      for (auto& v : I.b_r) v = r.uniform(-t, t);
      if (!lp_feasible(I)) continue;
      ++row.feasible;
      bool local = true;
      for (auto& B : bases) {
        IntMat AB = A.select_rows(B);
        IntVec bB;
        for (int i : B) bB.push_back(I.b_r[i]);
        RatVec v = solve_square(AB, to_rat(bB));
        RatVec Av = to_rat(A) * v;
        bool feas = true;
        for (int i = 0; i < N && feas; ++i) feas = Av[i] <= Rat(I.b_r[i]);
        if (!feas) continue;
        if (!locality_test(I, B).pass) {
          local = false;
          break;
        }
      }
      row.local += local;
    }
    out.push_back(row);
  }
  return out;
}

std::string sampler_table(const std::vector<SamplerRow>& rows) {
  std::ostringstream os;
  os << "t\tsamples\tfeasible\tlocal\tfraction\n";
  for (auto& r : rows) os << r.t << '\t' << r.samples << '\t' << r.feasible << '\t' << r.local << '\t' << r.fraction() << '\n';
  return os.str();
}

}  // namespace dilp
