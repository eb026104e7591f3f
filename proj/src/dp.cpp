#include "dilp/dp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "dilp/bounds.hpp"
#include "dilp/group.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"

namespace dilp {

BilpVariant parse_bilp_variant(const std::string& s) {
  if (s == "binarized") return BilpVariant::Binarized;
  if (s == "queue") return BilpVariant::Queue;
  fail(ErrorKind::Parameter, "unknown DP variant '" + s + "' (binarized|queue)");
}

const char* to_string(BilpVariant v) { return v == BilpVariant::Binarized ? "binarized" : "queue"; }

namespace {

using Key = std::vector<int64_t>;

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int64_t v : k) h = (h ^ static_cast<uint64_t>(v)) * 0x100000001b3ULL + (h >> 29);
    return static_cast<size_t>(h);
  }
};

// validate() minus the two checks the solvers here do not need: a unimodular
// [A; G] stack and (for the bounded DP and the ray test) nonnegative costs.
void check_shape(const StandardInstance& I, bool allow_negative_cost) {
  std::string s;
  for (auto& v : validate(I)) {
    if (v == "stack not unimodular") continue;
    if (allow_negative_cost && v.rfind("c[", 0) == 0) continue;
    s += " " + v + ";";
  }
  if (!s.empty()) fail(ErrorKind::Precondition, "invalid instance:" + s);
}

bool stack_unimodular(const StandardInstance& I) { return abs(det(IntMat::vstack(I.A, I.G))) == 1; }

struct Columns {
  int n = 0, m = 0;
  std::vector<Key> a;         // A_k as int64
  std::vector<int64_t> g;     // G_k as group code
  std::vector<int64_t> c;
  GroupCodec codec;
  explicit Columns(const StandardInstance& I) : n(I.n()), m(I.m()), codec(GroupSpec{I.moduli()}) {
    for (int k = 0; k < n; ++k) {
      Key col(m);
      for (int i = 0; i < m; ++i) col[i] = to_i64(I.A(i, k));
      a.push_back(col);
      g.push_back(codec.encode(I.G.col(k)));
      c.push_back(to_i64(I.c[k]));
    }
  }
  int64_t gmul(int k, int64_t t) const {
    int64_t r = 0, base = t >= 0 ? g[k] : codec.neg(g[k]);
    for (uint64_t e = t >= 0 ? t : -t; e; e >>= 1) {
      if (e & 1) r = codec.add(r, base);
      base = codec.add(base, base);
    }
    return r;
  }
};

int64_t checked_i64(const Int& v, const char* what) {
  if (!fits_i64(v) || abs(v) > (Int(1) << 60)) fail(ErrorKind::Cap, std::string(what) + " exceeds 64-bit range");
  return to_i64(v);
}

// ---------------------------------------------------------------- bounded DP

struct Bounded {
  const Columns& col;
  std::vector<int64_t> lo, hi;
  int64_t H = 0;
  Key target;  // b' then g' code
};

// Pareto front over (used l1 budget, cost): h ascending, cost strictly descending.
using Front = std::vector<std::pair<int64_t, int64_t>>;
using Layer = std::unordered_map<Key, Front, KeyHash>;

void relax(Layer& L, const Key& k, int64_t h, int64_t cost) {
  Front& f = L[k];
  for (auto& [fh, fc] : f)
    if (fh <= h && fc <= cost) return;
  Front out;
  out.reserve(f.size() + 1);
  bool placed = false;
  for (auto& e : f) {
    if (e.first >= h && e.second >= cost) continue;
    if (!placed && e.first > h) out.emplace_back(h, cost), placed = true;
    out.push_back(e);
  }
  if (!placed) out.emplace_back(h, cost);
  f.swap(out);
}

Key shifted(const Columns& col, int k, const Key& key, int64_t t, int64_t gt) {
  Key r = key;
  for (int i = 0; i < col.m; ++i) r[i] += t * col.a[k][i];
  r[col.m] = col.codec.add(r[col.m], gt);
  return r;
}

void shift_into(const Bounded& P, int k, const Layer& src, int64_t t, Layer& dst) {
  const int64_t gt = P.col.gmul(k, t), at = t < 0 ? -t : t;
  for (auto& [key, front] : src) {
    Key nk;
    bool made = false;
    for (auto& [h, cost] : front) {
      if (h + at > P.H) break;
      if (!made) nk = shifted(P.col, k, key, t, gt), made = true;
      relax(dst, nk, h + at, cost + t * P.col.c[k]);
    }
  }
}

Layer chain(const Bounded& P, int k, const Layer& prev, int64_t start, int64_t len, int64_t dir) {
  Layer cur;
  shift_into(P, k, prev, start, cur);
  for (auto& w : binary_decomposition(0, len).weights) {
    Layer next = cur;
    shift_into(P, k, cur, dir * to_i64(w), next);
    cur.swap(next);
  }
  return cur;
}

std::optional<IntVec> bilp_binarized(const Bounded& P, DpStats& st) {
  const Columns& col = P.col;
  const int n = col.n, m = col.m;
  std::vector<Layer> F(n + 1);
  F[n][Key(m + 1, 0)] = Front{{0, 0}};
  for (int k = n - 1; k >= 0; --k) {
    Layer out;
    int64_t a = std::max<int64_t>(P.lo[k], 0), e = std::min(P.hi[k], P.H);
    if (a <= e)
      for (auto& [key, f] : chain(P, k, F[k + 1], a, e - a, 1))
        for (auto& [h, c] : f) relax(out, key, h, c);
    a = std::max(P.lo[k], -P.H), e = std::min<int64_t>(P.hi[k], -1);
    if (a <= e)
      for (auto& [key, f] : chain(P, k, F[k + 1], e, e - a, -1))
        for (auto& [h, c] : f) relax(out, key, h, c);
    F[k].swap(out);
  }
  for (auto& L : F) {
    std::unordered_map<Key, int, KeyHash> rhs;
    for (auto& [key, f] : L) {
      rhs.emplace(Key(key.begin(), key.begin() + m), 0);
      st.states += static_cast<long>(f.size());
    }
    st.max_layer_rhs = std::max(st.max_layer_rhs, static_cast<long>(rhs.size()));
  }
  st.layers = n + 1;

  auto best_within = [](const Front& f, int64_t budget) -> std::optional<int64_t> {
    std::optional<int64_t> r;
    for (auto& [h, c] : f) {
      if (h > budget) break;
      r = c;
    }
    return r;
  };
  auto it = F[0].find(P.target);
  if (it == F[0].end()) return std::nullopt;
  int64_t val = *best_within(it->second, P.H), budget = P.H;
  Key rem = P.target;
  IntVec y(n);
  for (int k = 0; k < n; ++k) {
    bool ok = false;
    for (int64_t t = std::max(P.lo[k], -budget); t <= std::min(P.hi[k], budget) && !ok; ++t) {
      Key prev = shifted(col, k, rem, -t, col.gmul(k, -t));
      auto jt = F[k + 1].find(prev);
      if (jt == F[k + 1].end()) continue;
      int64_t at = t < 0 ? -t : t;
      auto bv = best_within(jt->second, budget - at);
      if (!bv || *bv + t * col.c[k] != val) continue;
      y[k] = t, val -= t * col.c[k], budget -= at, rem = prev, ok = true;
    }
    if (!ok) fail(ErrorKind::Domain, "binarized DP reconstruction lost the optimum");
  }
  return y;
}

std::vector<int64_t> window_min(const std::vector<int64_t>& w, int64_t first, int64_t len, int64_t cost,
                                int64_t lower, int64_t upper, int64_t out_len) {
  // w[j - first] holds values[j] - cost * j; r_i = cost * i + min_{j in [i - upper, i - lower]} w_j
  std::vector<int64_t> r(out_len, kInf);
  std::deque<int64_t> q;
  int64_t next = first;
  for (int64_t i = 0; i < out_len; ++i) {
    const int64_t jmax = std::min(i - lower, first + len - 1);
    for (; next <= jmax; ++next) {
      int64_t v = w[next - first];
      if (v >= kInf) continue;
      while (!q.empty() && w[q.back() - first] >= v) q.pop_back();
      q.push_back(next);
    }
    while (!q.empty() && q.front() < i - upper) q.pop_front();
    if (!q.empty()) r[i] = w[q.front() - first] + cost * i;
  }
  return r;
}

}  // namespace

std::vector<int64_t> sliding_min_path(const std::vector<int64_t>& values, int64_t cost, int64_t lower,
                                      int64_t upper) {
  const int64_t l = static_cast<int64_t>(values.size());
  if (lower > upper) return std::vector<int64_t>(l, kInf);
  std::vector<int64_t> w(l);
  for (int64_t j = 0; j < l; ++j) w[j] = values[j] >= kInf ? kInf : values[j] - cost * j;
  return window_min(w, 0, l, cost, lower, upper, l);
}

std::vector<int64_t> sliding_min_cycle(const std::vector<int64_t>& values, int64_t cost, int64_t lower,
                                       int64_t upper) {
  const int64_t l = static_cast<int64_t>(values.size());
  if (lower > upper || l == 0) return std::vector<int64_t>(l, kInf);
  // among t congruent mod l only the cheapest end of the window matters
  if (upper - lower + 1 > l) {
    if (cost >= 0) upper = lower + l - 1;
    else lower = upper - l + 1;
  }
  const int64_t first = -upper, last = l - 1 - lower, len = last - first + 1;
  std::vector<int64_t> w(len);
  for (int64_t j = first; j <= last; ++j) {
    int64_t v = values[((j % l) + l) % l];
    w[j - first] = v >= kInf ? kInf : v - cost * j;
  }
  return window_min(w, first, len, cost, lower, upper, l);
}

BinaryDecomposition binary_decomposition(const Int& alpha, const Int& beta) {
  if (alpha > beta) fail(ErrorKind::Parameter, "empty range");
  BinaryDecomposition d;
  d.offset = alpha;
  Int L = beta - alpha, covered = 0;
  for (Int w = 1; covered + w <= L; w *= 2) {
    d.weights.push_back(w);
    covered += w;
  }
  if (covered < L) d.weights.push_back(L - covered);
  return d;
}

namespace {

std::optional<IntVec> bilp_queue(const StandardInstance& I, const Bounded& P, DpStats& st) {
  const Columns& col = P.col;
  const int n = col.n, m = col.m;
  const int64_t ord = col.codec.order();

  // suffix boxes: A y_{k..n-1} lies in [blo[k], bhi[k]]
  std::vector<Key> blo(n + 1, Key(m, 0)), bhi(n + 1, Key(m, 0));
  for (int k = n - 1; k >= 0; --k)
    for (int i = 0; i < m; ++i) {
      int64_t x = col.a[k][i] * P.lo[k], z = col.a[k][i] * P.hi[k];
      blo[k][i] = blo[k + 1][i] + std::min(x, z);
      bhi[k][i] = bhi[k + 1][i] + std::max(x, z);
    }
  auto in_box = [&](const Key& p, int k) {
    for (int i = 0; i < m; ++i)
      if (p[i] < blo[k][i] || p[i] > bhi[k][i]) return false;
    return true;
  };

  std::vector<Key> pts;
  if (m == 0) {
    pts.emplace_back();
  } else {
    auto sel = max_det_submatrix(I.A.transpose());
    IntMat B = I.A.select_cols(sel.rows);
    RatMat PU = inverse(B) * to_rat(I.A);
    Rat kap = 1;
    for (int i = 0; i < PU.rows(); ++i)
      for (int j = 0; j < PU.cols(); ++j) kap = std::max(kap, Rat(abs(PU(i, j))));
    for (auto& p : enumerate_parallelepiped(B, RatVec(m, Rat(0)), Rat(P.H) * kap)) {
      Key q(m);
      for (int i = 0; i < m; ++i) q[i] = to_i64(p[i]);
      if (in_box(q, 0)) pts.push_back(q);
    }
  }
  std::unordered_map<Key, int64_t, KeyHash> index;
  for (size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int64_t>(i));
  const int64_t D = static_cast<int64_t>(pts.size());
  auto lookup = [&](const Key& p, int k) -> int64_t {
    if (!in_box(p, k)) return -1;
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  };

  std::vector<std::vector<int64_t>> F(n + 1, std::vector<int64_t>(D * ord, kInf));
  {
    int64_t z = lookup(Key(m, 0), n);
    if (z < 0) fail(ErrorKind::Domain, "origin missing from the state set");
    F[n][z * ord] = 0;
  }
  for (int k = n; k >= 0; --k) {
    long cnt = 0;
    for (auto& p : pts) cnt += in_box(p, k);
    st.max_layer_rhs = std::max(st.max_layer_rhs, cnt);
    st.states += cnt * ord;
  }
  st.layers = n + 1;

  for (int k = n - 1; k >= 0; --k) {
    const Key& ak = col.a[k];
    const bool zero_col = std::all_of(ak.begin(), ak.end(), [](int64_t v) { return v == 0; });
    auto& cur = F[k];
    const auto& nxt = F[k + 1];
    if (zero_col) {
      std::vector<std::vector<int64_t>> cycles;
      std::vector<char> seen(ord, 0);
      for (int64_t g0 = 0; g0 < ord; ++g0) {
        if (seen[g0]) continue;
        std::vector<int64_t> cyc;
        for (int64_t g = g0; !seen[g]; g = col.codec.add(g, col.g[k])) seen[g] = 1, cyc.push_back(g);
        cycles.push_back(std::move(cyc));
      }
      for (int64_t pi = 0; pi < D; ++pi) {
        if (!in_box(pts[pi], k)) continue;
        for (auto& cyc : cycles) {
          std::vector<int64_t> v(cyc.size());
          for (size_t j = 0; j < cyc.size(); ++j) v[j] = nxt[pi * ord + cyc[j]];
          auto r = sliding_min_cycle(v, col.c[k], P.lo[k], P.hi[k]);
          for (size_t j = 0; j < cyc.size(); ++j) cur[pi * ord + cyc[j]] = r[j];
        }
      }
      continue;
    }
    for (int64_t pi = 0; pi < D; ++pi) {
      if (!in_box(pts[pi], k)) continue;
      Key back = pts[pi];
      for (int i = 0; i < m; ++i) back[i] -= ak[i];
      if (lookup(back, k) >= 0) continue;  // not the start of its line
      std::vector<int64_t> line{pi};
      for (Key p = pts[pi];;) {
        for (int i = 0; i < m; ++i) p[i] += ak[i];
        int64_t q = lookup(p, k);
        if (q < 0) break;
        line.push_back(q);
      }
      std::vector<char> in_next(line.size());
      for (size_t j = 0; j < line.size(); ++j) in_next[j] = in_box(pts[line[j]], k + 1);
      for (int64_t g0 = 0; g0 < ord; ++g0) {
        std::vector<int64_t> v(line.size(), kInf);
        int64_t g = g0;
        std::vector<int64_t> gs(line.size());
        for (size_t j = 0; j < line.size(); ++j) {
          gs[j] = g;
          if (in_next[j]) v[j] = nxt[line[j] * ord + g];
          g = col.codec.add(g, col.g[k]);
        }
        auto r = sliding_min_path(v, col.c[k], P.lo[k], P.hi[k]);
        for (size_t j = 0; j < line.size(); ++j) cur[line[j] * ord + gs[j]] = r[j];
      }
    }
  }

  Key tb(P.target.begin(), P.target.begin() + m);
  int64_t ti = lookup(tb, 0);
  if (ti < 0) return std::nullopt;
  int64_t tg = P.target[m], val = F[0][ti * ord + tg];
  if (val >= kInf) return std::nullopt;
  IntVec y(n);
  for (int k = 0; k < n; ++k) {
    bool ok = false;
    for (int64_t t = P.lo[k]; t <= P.hi[k] && !ok; ++t) {
      Key pb = tb;
      for (int i = 0; i < m; ++i) pb[i] -= t * col.a[k][i];
      int64_t pi = lookup(pb, k + 1);
      if (pi < 0) continue;
      int64_t pg = col.codec.add(tg, col.gmul(k, -t)), v = F[k + 1][pi * ord + pg];
      if (v >= kInf || v + t * col.c[k] != val) continue;
      y[k] = t, val -= t * col.c[k], tb = pb, tg = pg, ok = true;
    }
    if (!ok) fail(ErrorKind::Domain, "queue DP reconstruction lost the optimum");
  }
  return y;
}

}  // namespace

SolveOutcome solve_bilp_sf(const StandardInstance& I, const Int& chi, BilpVariant variant, DpStats* stats) {
  check_shape(I, true);
  if (!I.bounded()) fail(ErrorKind::Precondition, "bounded DP needs finite upper bounds");
  if (chi < 0) fail(ErrorKind::Parameter, "proximity bound must be nonnegative");
  SolveOutcome out;
  out.note("variant", to_string(variant));
  LpOutcome lp = solve_lp(I);
  if (lp.status != Status::Optimal) {
    out.status = Status::Infeasible;
    out.note("lp", "infeasible");
    return out;
  }
  const int n = I.n(), m = I.m();
  IntVec f(n);
  Int Hbox = 0;
  for (int k = 0; k < n; ++k) {
    f[k] = rat_floor(lp.vertex[k]);
    Hbox += std::max(f[k], Int(I.u[k].value() - f[k]));
  }
  Int Hint = std::min(Int(chi + m), Hbox);
  Columns col(I);
  Bounded P{col, {}, {}, checked_i64(Hint, "l1 budget"), {}};
  Int costmax = 0;
  for (int k = 0; k < n; ++k) {
    Int lo = std::max(Int(-f[k]), Int(-Hint)), hi = std::min(Int(I.u[k].value() - f[k]), Hint);
    P.lo.push_back(to_i64(lo));
    P.hi.push_back(to_i64(hi));
    costmax += abs(I.c[k]) * std::max(abs(lo), abs(hi));
    for (int i = 0; i < m; ++i) checked_i64(I.A(i, k) * Hint, "state coordinate");
  }
  checked_i64(costmax, "objective range");
  IntVec bs = I.b, Af = I.A * f;
  for (int i = 0; i < m; ++i) bs[i] -= Af[i];
  IntVec gs = I.g, Gf = I.G * f;
  for (size_t i = 0; i < gs.size(); ++i) gs[i] -= Gf[i];
  for (auto& v : bs) P.target.push_back(checked_i64(v, "shifted right-hand side"));
  P.target.push_back(col.codec.encode(gs));

  DpStats st;
  st.budget = P.H;
  Int Hm = 2 * Hint + 1, D = m ? delta(I.A) : Int(1);
  st.layer_bound = D;
  for (int i = 0; i < m; ++i) st.layer_bound *= Hm;
  auto y = variant == BilpVariant::Binarized ? bilp_binarized(P, st) : bilp_queue(I, P, st);
  if (stats) *stats = st;
  out.note("budget", std::to_string(P.H));
  out.note("states", std::to_string(st.states));
  if (!y) {
    out.status = Status::Infeasible;
    return out;
  }
  out.status = Status::Optimal;
  out.x.resize(n);
  for (int k = 0; k < n; ++k) out.x[k] = (*y)[k] + f[k];
  out.value = objective(I, out.x);
  return out;
}

// ---------------------------------------------------------------- unbounded DP

Rat hereditary_discrepancy(const RatMat& M) {
  const int m = M.rows(), n = M.cols();
  if (n > 24) fail(ErrorKind::Cap, "hereditary discrepancy enumeration is exponential in the column count");
  Int L = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) L = lcm(L, Int(M(i, j).get_den()));
  std::vector<std::vector<int64_t>> Q(n, std::vector<int64_t>(m));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) Q[j][i] = checked_i64(Rat(M(i, j) * L).get_num(), "scaled matrix entry");
  // disc of a column set J: min over s in {-1,1}^J of |M_J s|_inf / 2
  int64_t worst = 0;
  for (uint32_t J = 1; J < (1u << n); ++J) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (J >> j & 1) cols.push_back(j);
    const int k = static_cast<int>(cols.size());
    std::vector<int64_t> sum(m, 0);
    for (int j : cols)
      for (int i = 0; i < m; ++i) sum[i] += Q[j][i];
    std::vector<int> sgn(k, 1);
    int64_t best = INT64_MAX;
    // Gray code over the first k - 1 signs; the last is fixed by symmetry
    for (uint32_t step = 0; step < (1u << (k - 1)); ++step) {
      if (step) {
        int b = __builtin_ctz(step);
        for (int i = 0; i < m; ++i) sum[i] -= 2 * sgn[b] * Q[cols[b]][i];
        sgn[b] = -sgn[b];
      }
      int64_t nrm = 0;
      for (int i = 0; i < m; ++i) nrm = std::max(nrm, sum[i] < 0 ? -sum[i] : sum[i]);
      best = std::min(best, nrm);
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return Rat(worst) / Rat(2 * L);
}

MuParams compute_mu(const IntMat& A, bool allow_exact) {
  const int m = A.rows(), n = A.cols();
  if (m == 0) fail(ErrorKind::Precondition, "no equality rows");
  if (rank(A) != m) fail(ErrorKind::Precondition, "equality rows must be linearly independent");
  MuParams p;
  auto sel = max_det_submatrix(A.transpose());
  p.base = sel.rows;
  p.det_base = sel.abs_det;
  p.kappa = Rat(delta(A)) / Rat(p.det_base);
  p.eta_m = 12.0 * std::sqrt(static_cast<double>(m));
  // ceil(kappa * 12 sqrt(m)) exactly: the least k >= 0 with k^2 >= 144 m kappa^2
  Rat sq = Rat(144 * m) * p.kappa * p.kappa;
  Int k = static_cast<long>(std::floor(p.kappa.get_d() * p.eta_m));
  if (k < 0) k = 0;
  while (Rat(k * k) < sq) ++k;
  while (k > 0 && Rat((k - 1) * (k - 1)) >= sq) --k;
  p.mu_proven = Rat(k);
  p.mu = p.mu_proven;
  if (allow_exact && n <= kHerdiscMaxColumns) {
    p.herdisc = hereditary_discrepancy(inverse(A.select_cols(p.base)) * to_rat(A));
    p.exact = true;
    p.mu = p.herdisc;
  }
  return p;
}

UnboundedCheck detect_unbounded(const StandardInstance& I) {
  check_shape(I, true);
  if (!I.unbounded()) fail(ErrorKind::Precondition, "ray test expects the unbounded problem");
  const int n = I.n(), m = I.m(), d = n - m;
  UnboundedCheck out;
  Int sigma = d ? I.S(d - 1, d - 1) : Int(1);
  out.radius = (m + 1) * sigma * (m ? delta(I.A) : Int(1));
  // min c x over {A x = 0, 1 x = 1, x >= 0}; a negative optimum is attained at a circuit
  RatMat M(m + 1, n);
  RatVec rhs(m + 1, Rat(0)), c(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) M(i, j) = I.A(i, j);
    M(m, j) = 1;
    c[j] = I.c[j];
  }
  rhs[m] = 1;
  StdLpResult r = simplex_standard(M, rhs, c);
  if (r.status != Status::Optimal || r.objective >= 0) return out;
  Int den = 1, g = 0;
  for (auto& v : r.x) den = lcm(den, Int(v.get_den()));
  IntVec q(n);
  for (int j = 0; j < n; ++j) {
    q[j] = Rat(r.x[j] * den).get_num();
    g = gcd(g, q[j]);
  }
  for (auto& v : q) v /= g;
  IntVec Gq = I.G * q;
  Int k = 1;
  for (int i = 0; i < d; ++i) {
    Int s = I.S(i, i);
    k = lcm(k, s / gcd(s, mod_pos(Gq[i], s)));
  }
  for (auto& v : q) v *= k;
  out.unbounded = true;
  out.ray = q;
  return out;
}

namespace {

struct Back {
  int8_t kind = -1;  // 0 zero, 1 column, 2 carried, 3 split
  int32_t i1 = 0, i2 = 0;
  int64_t g1 = 0, g2 = 0;
};

}  // namespace

SolveOutcome solve_ilp_sf_unbounded(const StandardInstance& I, UnboundedTrace* trace, bool allow_exact_mu) {
  check_shape(I, true);
  if (!I.unbounded()) fail(ErrorKind::Precondition, "unbounded DP expects u = +inf");
  for (auto& v : I.c)
    if (v < 0) fail(ErrorKind::Precondition, "unbounded DP needs nonnegative costs");
  const int n = I.n(), m = I.m(), d = n - m;
  if (m && rank(I.A) != m) fail(ErrorKind::Precondition, "equality rows must be linearly independent");
  SolveOutcome out;
  LpOutcome lp = solve_lp(I);
  if (lp.status == Status::Infeasible) {
    out.status = Status::Infeasible;
    out.note("lp", "infeasible");
    return out;
  }
  UnboundedCheck uc = detect_unbounded(I);
  if (uc.unbounded) {
    out.status = Status::Unbounded;
    out.ray = uc.ray;
    return out;
  }

  // l1 radius holding some optimal solution: the integer-hull vertex bound, or
  // (m + 1) chi after moving the origin to y_i = max(0, ceil(x*_i) - chi)
  Int sigma = d ? I.S(d - 1, d - 1) : Int(1);
  Int Dext = 1, Delta = 1;
  if (m) {
    IntMat Ab(m, n + 1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) Ab(i, j) = I.A(i, j);
      Ab(i, n) = I.b[i];
    }
    Dext = delta(Ab);
    Delta = delta(I.A);
  }
  Int N = (m + 1) * Dext * (d * sigma + 1);
  IntVec y(n, Int(0));
  bool shifted = false;
  if (lp.status == Status::Optimal && stack_unimodular(I)) {
    Int chi = proximity_bound_bounded(m, Delta, I.det_S());
    Int N2 = (m + 1) * chi;
    if (N2 < N) {
      N = N2;
      shifted = true;
      for (int j = 0; j < n; ++j) y[j] = std::max(Int(0), Int(rat_ceil(lp.vertex[j]) - chi));
    }
  }
  if (N < 1) N = 1;
  int rho = 0;
  for (Rat p = 1; p < Rat(N); p *= Rat(6, 5)) ++rho;

  IntVec b2 = I.b, Ay = I.A * y, g2 = I.g, Gy = I.G * y;
  for (int i = 0; i < m; ++i) b2[i] -= Ay[i];
  for (int i = 0; i < d; ++i) g2[i] -= Gy[i];

  Columns col(I);
  const int64_t ord = col.codec.order();
  Int cmax = 0;
  for (auto& v : I.c) cmax = std::max(cmax, v);
  checked_i64(2 * cmax * N, "objective range");

  MuParams mu;
  std::vector<std::vector<Key>> M(rho + 1);
  if (m) {
    mu = compute_mu(I.A, allow_exact_mu);
    IntMat B = I.A.select_cols(mu.base);
    RatVec centre = inverse(B) * to_rat(b2);
    for (int i = 0; i <= rho; ++i) {
      Rat scale = 1;
      for (int t = i; t < rho; ++t) scale /= 2;
      RatVec p(m);
      for (int r = 0; r < m; ++r) p[r] = centre[r] * scale;
      for (auto& v : enumerate_parallelepiped(B, p, mu.radius())) {
        Key q(m);
        for (int r = 0; r < m; ++r) q[r] = checked_i64(v[r], "state coordinate");
        M[i].push_back(q);
      }
      std::sort(M[i].begin(), M[i].end());
    }
  } else {
    for (auto& L : M) L.emplace_back();
  }
  std::vector<std::unordered_map<Key, int32_t, KeyHash>> idx(rho + 1);
  for (int i = 0; i <= rho; ++i)
    for (size_t j = 0; j < M[i].size(); ++j) idx[i].emplace(M[i][j], static_cast<int32_t>(j));

  std::vector<std::vector<int64_t>> T(rho + 1);
  std::vector<std::vector<Back>> back(rho + 1);
  T[0].assign(M[0].size() * ord, kInf);
  back[0].resize(M[0].size() * ord);
  if (auto z = idx[0].find(Key(m, 0)); z != idx[0].end()) {
    T[0][z->second * ord] = 0;
    back[0][z->second * ord].kind = 0;
  }
  for (int j = 0; j < n; ++j) {
    auto it = idx[0].find(col.a[j]);
    if (it == idx[0].end()) continue;
    int64_t s = it->second * ord + col.g[j];
    if (col.c[j] < T[0][s]) T[0][s] = col.c[j], back[0][s] = Back{1, j, 0, 0, 0};
  }
  for (int i = 1; i <= rho; ++i) {
    auto& cur = T[i];
    auto& bk = back[i];
    cur.assign(M[i].size() * ord, kInf);
    bk.resize(cur.size());
    const auto& prev = T[i - 1];
    for (size_t p = 0; p < M[i].size(); ++p) {
      auto it = idx[i - 1].find(M[i][p]);
      if (it == idx[i - 1].end()) continue;
      for (int64_t g = 0; g < ord; ++g) {
        int64_t v = prev[it->second * ord + g];
        if (v < kInf) cur[p * ord + g] = v, bk[p * ord + g] = Back{2, it->second, 0, 0, g};
      }
    }
    // finite entries per previous state
    std::vector<std::vector<std::pair<int64_t, int64_t>>> fin(M[i - 1].size());
    for (size_t p = 0; p < M[i - 1].size(); ++p)
      for (int64_t g = 0; g < ord; ++g)
        if (prev[p * ord + g] < kInf) fin[p].emplace_back(g, prev[p * ord + g]);
    Key sum(m);
    for (size_t p1 = 0; p1 < M[i - 1].size(); ++p1) {
      if (fin[p1].empty()) continue;
      for (size_t p2 = p1; p2 < M[i - 1].size(); ++p2) {
        if (fin[p2].empty()) continue;
        for (int r = 0; r < m; ++r) sum[r] = M[i - 1][p1][r] + M[i - 1][p2][r];
        auto it = idx[i].find(sum);
        if (it == idx[i].end()) continue;
        const int64_t base = static_cast<int64_t>(it->second) * ord;
        for (auto& [ga, va] : fin[p1])
          for (auto& [gb, vb] : fin[p2]) {
            int64_t s = base + col.codec.add(ga, gb);
            if (va + vb < cur[s] && va + vb < kInf)
              cur[s] = va + vb, bk[s] = Back{3, static_cast<int32_t>(p1), static_cast<int32_t>(p2), ga, gb};
          }
      }
    }
  }

  if (trace) {
    trace->rho = rho;
    trace->shifted = shifted;
    trace->mu = mu;
    trace->levels.assign(rho + 1, {});
    for (int i = 0; i <= rho; ++i)
      for (size_t p = 0; p < M[i].size(); ++p)
        for (int64_t g = 0; g < ord; ++g)
          if (T[i][p * ord + g] < kInf) trace->levels[i][{M[i][p], g}] = T[i][p * ord + g];
  }
  out.note("rho", std::to_string(rho));
  out.note("shifted", shifted ? "yes" : "no");
  if (m) out.note("mu", str(mu.mu));

  Key tb(m);
  for (int r = 0; r < m; ++r) tb[r] = to_i64(b2[r]);
  auto it = idx[rho].find(tb);
  int64_t tg = col.codec.encode(g2);
  if (it == idx[rho].end() || T[rho][it->second * ord + tg] >= kInf) {
    out.status = Status::Infeasible;
    return out;
  }
  IntVec x = y;
  std::function<void(int, int32_t, int64_t)> expand = [&](int lvl, int32_t p, int64_t g) {
    const Back& bb = back[lvl][p * ord + g];
    switch (bb.kind) {
      case 0: return;
      case 1: x[bb.i1] += 1; return;
      case 2: expand(lvl - 1, bb.i1, bb.g2); return;
      case 3:
        expand(lvl - 1, bb.i1, bb.g1);
        expand(lvl - 1, bb.i2, bb.g2);
        return;
      default: fail(ErrorKind::Domain, "unbounded DP lost a parent link");
    }
  };
  expand(rho, it->second, tg);
  out.status = Status::Optimal;
  out.x = x;
  out.value = objective(I, x);
  return out;
}

}  // namespace dilp
