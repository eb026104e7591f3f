#include "dilp/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_set>

#include "dilp/bounds.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"
#include "dilp/rng.hpp"

namespace dilp {

namespace {

using V64 = std::vector<int64_t>;

struct VecHash {
  size_t operator()(const V64& v) const {
    uint64_t h = 1469598103934665603ULL;
    for (int64_t x : v) h = (h ^ static_cast<uint64_t>(x)) * 1099511628211ULL;
    return h;
  }
};

V64 to64(const IntVec& v) {
  V64 r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = to_i64(v[i]);
  return r;
}

IntVec from64(const V64& v) {
  IntVec r;
  r.reserve(v.size());
  for (int64_t x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

// Columns of M as int64, after checking that |M x| stays far from overflow on the box.
std::vector<V64> columns64(const IntMat& M, const Int& coord_bound) {
  Int lim = Int(1) << 60;
  if (max_abs(M) * coord_bound * (M.cols() + 1) >= lim) fail(ErrorKind::Cap, "oracle values exceed 64-bit range");
  std::vector<V64> cols(M.cols(), V64(M.rows()));
  for (int j = 0; j < M.cols(); ++j)
    for (int i = 0; i < M.rows(); ++i) cols[j][i] = to_i64(M(i, j));
  return cols;
}

void check_cap(const Box& box) {
  if (box.volume() > point_cap())
    fail(ErrorKind::Cap, "box volume " + box.volume().get_str() + " exceeds the point cap " + point_cap().get_str());
}

// Lexicographic sweep of the box; f(x, M x).
template <class F>
void sweep(const Box& box, const IntMat& M, F&& f) {
  check_cap(box);
  const int n = static_cast<int>(box.lo.size());
  for (int i = 0; i < n; ++i)
    if (box.lo[i] > box.hi[i]) return;
  Int cb = 1;
  for (int i = 0; i < n; ++i) cb = std::max(cb, Int(std::max(abs(box.lo[i]), abs(box.hi[i]))));
  auto cols = columns64(M, cb);
  V64 lo = to64(box.lo), hi = to64(box.hi), x = lo;
  V64 Mx(M.rows(), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < M.rows(); ++i) Mx[i] += cols[j][i] * x[j];
  for (;;) {
    f(x, Mx);
    int j = n - 1;
    while (j >= 0 && x[j] == hi[j]) {
      const int64_t d = hi[j] - lo[j];
      for (int i = 0; i < M.rows(); ++i) Mx[i] -= d * cols[j][i];
      x[j] = lo[j];
      --j;
    }
    if (j < 0) return;
    ++x[j];
    for (int i = 0; i < M.rows(); ++i) Mx[i] += cols[j][i];
  }
}

struct Bounds64 {
  V64 lo, hi;
  std::vector<char> has_lo;
};

Bounds64 canon_bounds(const CanonicalInstance& I) {
  Bounds64 b;
  const int N = I.A.rows();
  b.lo.assign(N, 0);
  b.hi.assign(N, 0);
  b.has_lo.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    b.hi[i] = to_i64(I.b_r[i]);
    if (I.b_l[i].finite()) b.has_lo[i] = 1, b.lo[i] = to_i64(I.b_l[i].value());
  }
  return b;
}

struct StdCheck {
  int m = 0;
  V64 b, g, mod;
  explicit StdCheck(const StandardInstance& I) : m(I.m()), b(to64(I.b)), g(to64(I.g)), mod(to64(I.moduli())) {}
  bool ok(const V64& Mx) const {
    for (int i = 0; i < m; ++i)
      if (Mx[i] != b[i]) return false;
    for (size_t k = 0; k < g.size(); ++k) {
      int64_t r = (Mx[m + k] - g[k]) % mod[k];
      if (r != 0) return false;
    }
    return true;
  }
};

}  // namespace

Int Box::volume() const {
  Int v = 1;
  for (size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    v *= hi[i] - lo[i] + 1;
  }
  return v;
}

bool Box::contains(const IntVec& x) const {
  for (size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

Int point_cap() {
  const char* e = std::getenv("DELTA_ILP_POINT_CAP");
  if (e && *e) {
    Int v;
    if (v.set_str(e, 10) == 0 && v > 0) return v;
  }
  return Int(10000000);
}

void enumerate_feasible(const CanonicalInstance& I, const Box& box, const PointFn& f) {
  if (static_cast<int>(box.lo.size()) != I.n()) fail(ErrorKind::Dimension, "box dimension mismatch");
  Bounds64 bd = canon_bounds(I);
  const int N = I.A.rows();
  sweep(box, I.A, [&](const V64& x, const V64& Ax) {
    for (int i = 0; i < N; ++i)
      if (Ax[i] > bd.hi[i] || (bd.has_lo[i] && Ax[i] < bd.lo[i])) return;
    f(from64(x));
  });
}

void enumerate_feasible(const StandardInstance& I, const Box& box, const PointFn& f) {
  if (static_cast<int>(box.lo.size()) != I.n()) fail(ErrorKind::Dimension, "box dimension mismatch");
  Box b = box;
  for (int j = 0; j < I.n(); ++j) {
    if (b.lo[j] < 0) b.lo[j] = 0;
    if (I.u[j].finite() && b.hi[j] > I.u[j].value()) b.hi[j] = I.u[j].value();
  }
  StdCheck chk(I);
  sweep(b, IntMat::vstack(I.A, I.G), [&](const V64& x, const V64& Mx) {
    if (chk.ok(Mx)) f(from64(x));
  });
}

SolveOutcome brute_force_ilp(const CanonicalInstance& I, const Box& box) {
  SolveOutcome out;
  enumerate_feasible(I, box, [&](const IntVec& x) {
    Int v = dot(I.c, x);
    if (out.status != Status::Optimal || v > out.value) {
      out.status = Status::Optimal;
      out.value = v;
      out.x = x;
    }
  });
  return out;
}

SolveOutcome brute_force_ilp(const StandardInstance& I, const Box& box) {
  SolveOutcome out;
  enumerate_feasible(I, box, [&](const IntVec& x) {
    Int v = dot(I.c, x);
    if (out.status != Status::Optimal || v < out.value) {
      out.status = Status::Optimal;
      out.value = v;
      out.x = x;
    }
  });
  return out;
}

Box standard_box(const StandardInstance& I) {
  Box b;
  for (int j = 0; j < I.n(); ++j) {
    if (!I.u[j].finite()) fail(ErrorKind::Precondition, "standard_box needs finite bounds");
    b.lo.emplace_back(0);
    b.hi.push_back(I.u[j].value());
  }
  return b;
}

namespace {

// Depth-first walk over x >= 0 with sum_j w_j x_j <= budget (w_j > 0), bounded by u.
template <class F>
void cost_walk(const StandardInstance& I, const V64& w, int64_t budget, F&& f) {
  const int n = I.n();
  Int cb = budget + 1;
  auto cols = columns64(IntMat::vstack(I.A, I.G), cb);
  const int rows = I.m() + I.G.rows();
  V64 x(n, 0), Mx(rows, 0);
  V64 ub(n, INT64_MAX);
  for (int j = 0; j < n; ++j)
    if (I.u[j].finite()) ub[j] = to_i64(I.u[j].value());
  long visited = 0;
  const Int cap = point_cap();
  std::function<void(int, int64_t)> rec = [&](int j, int64_t left) {
    if (j == n) {
      if (++visited > cap) fail(ErrorKind::Cap, "cost ball exceeds the point cap");
      f(x, Mx);
      return;
    }
    int64_t top = std::min(ub[j], left / w[j]);
    for (int64_t t = 0;; ++t) {
      rec(j + 1, left - t * w[j]);
      if (t == top) break;
      x[j] += 1;
      for (int i = 0; i < rows; ++i) Mx[i] += cols[j][i];
    }
    for (int i = 0; i < rows; ++i) Mx[i] -= top * cols[j][i];
    x[j] = 0;
  };
  rec(0, budget);
}

}  // namespace

void enumerate_cost_ball(const StandardInstance& I, const Int& budget, const PointFn& f) {
  for (auto& cj : I.c)
    if (cj <= 0) fail(ErrorKind::Precondition, "cost ball needs positive costs");
  if (budget < 0) return;
  StdCheck chk(I);
  cost_walk(I, to64(I.c), to_i64(budget), [&](const V64& x, const V64& Mx) {
    if (chk.ok(Mx)) f(from64(x));
  });
}

SolveOutcome brute_force_cost_ball(const StandardInstance& I, const Int& budget) {
  SolveOutcome out;
  enumerate_cost_ball(I, budget, [&](const IntVec& x) {
    Int v = dot(I.c, x);
    if (out.status != Status::Optimal || v < out.value) {
      out.status = Status::Optimal;
      out.value = v;
      out.x = x;
    }
  });
  return out;
}

std::optional<IntVec> negative_homogeneous_point(const StandardInstance& I, long radius) {
  StandardInstance H = I;
  for (auto& v : H.b) v = 0;
  for (auto& v : H.g) v = 0;
  for (auto& v : H.u) v = ExtInt::pos_inf();
  StdCheck chk(H);
  V64 ones(I.n(), 1), c = to64(I.c);
  std::optional<IntVec> best;
  int64_t bestv = 0;
  cost_walk(H, ones, radius, [&](const V64& x, const V64& Mx) {
    if (!chk.ok(Mx)) return;
    int64_t v = 0;
    for (size_t j = 0; j < x.size(); ++j) v += c[j] * x[j];
    if (v < bestv) bestv = v, best = from64(x);
  });
  return best;
}

std::vector<IntVec> extreme_points(const std::vector<IntVec>& points_in, const std::vector<IntVec>& rays) {
  std::vector<IntVec> pts = points_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  const int n = static_cast<int>(pts[0].size());
  std::vector<V64> p64;
  std::unordered_set<V64, VecHash> have;
  for (auto& p : pts) p64.push_back(to64(p)), have.insert(p64.back());
  std::vector<V64> r64;
  for (auto& r : rays) r64.push_back(to64(r));

  // cheap certificates of non-extremality: v = (v+d + v-d)/2, or v = (v - r) + r
  std::vector<V64> dirs;
  {
    V64 d(n, -1);
    for (;;) {
      int first = 0;
      while (first < n && d[first] == 0) ++first;
      if (first < n && d[first] > 0) dirs.push_back(d);
      int i = n - 1;
      while (i >= 0 && d[i] == 1) d[i] = -1, --i;
      if (i < 0) break;
      ++d[i];
    }
  }
  std::vector<int> keep;
  for (size_t k = 0; k < p64.size(); ++k) {
    const V64& v = p64[k];
    bool inner = false;
    V64 a(n), b(n);
    for (auto& r : r64) {
      for (int i = 0; i < n; ++i) a[i] = v[i] - r[i];
      if (have.count(a)) {
        inner = true;
        break;
      }
    }
    for (size_t t = 0; t < dirs.size() && !inner; ++t) {
      for (int i = 0; i < n; ++i) a[i] = v[i] + dirs[t][i], b[i] = v[i] - dirs[t][i];
      if (have.count(a) && have.count(b)) inner = true;
    }
    if (!inner) keep.push_back(static_cast<int>(k));
  }
  // exact separation: is pts[k] in conv(pts[idx]) + cone(rays)?
  auto inside = [&](int k, const std::vector<int>& idx) {
    const int cols = static_cast<int>(idx.size() + rays.size());
    if (cols == 0) return false;
    RatMat M(n + 1, cols);
    for (size_t t = 0; t < idx.size(); ++t) {
      for (int i = 0; i < n; ++i) M(i, static_cast<int>(t)) = pts[idx[t]][i];
      M(n, static_cast<int>(t)) = 1;
    }
    for (size_t t = 0; t < rays.size(); ++t)
      for (int i = 0; i < n; ++i) M(i, static_cast<int>(idx.size() + t)) = rays[t][i];
    RatVec rhs(n + 1);
    for (int i = 0; i < n; ++i) rhs[i] = pts[k][i];
    rhs[n] = 1;
    return simplex_standard(M, rhs, RatVec(cols, Rat(0))).status != Status::Infeasible;
  };
  // short points first, so most interior points are settled by the small LP over vertices found so far
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) { return l1(pts[a]) < l1(pts[b]); });
  std::vector<int> found;
  // unique minimizers of costs positive on every ray are vertices
  {
    Rng rng(0x5eed + keep.size());
    std::set<int> seen;
    for (int attempt = 0; attempt < 8 * n + 64; ++attempt) {
      V64 c(n);
      for (auto& x : c) x = rng.uniform(1, 1000);
      bool ok = true;
      for (auto& r : r64) {
        int64_t cr = 0;
        for (int i = 0; i < n; ++i) cr += c[i] * r[i];
        ok &= cr > 0;
      }
      if (!ok) continue;
      int arg = -1, ties = 0;
      int64_t best = 0;
      for (int k : keep) {
        int64_t v = 0;
        for (int i = 0; i < n; ++i) v += c[i] * p64[k][i];
        if (arg < 0 || v < best) arg = k, best = v, ties = 0;
        else if (v == best) ++ties;
      }
      if (arg >= 0 && !ties && seen.insert(arg).second) found.push_back(arg);
    }
  }
  const std::set<int> known(found.begin(), found.end());
  for (int k : keep) {
    if (known.count(k)) continue;
    if (!found.empty() && inside(k, found)) continue;
    std::vector<int> others;
    for (int j : keep)
      if (j != k) others.push_back(j);
    if (!inside(k, others)) found.push_back(k);
  }
  std::sort(found.begin(), found.end());
  std::vector<IntVec> out;
  for (int k : found) out.push_back(pts[k]);
  return out;
}

std::vector<IntVec> hull_vertices(const CanonicalInstance& I, const Box& box, bool with_recession) {
  std::vector<IntVec> pts;
  enumerate_feasible(I, box, [&](const IntVec& x) { pts.push_back(x); });
  std::vector<IntVec> rays;
  if (with_recession) rays = recession_rays(I);
  return extreme_points(pts, rays);
}

std::vector<IntVec> recession_rays(const CanonicalInstance& I) {
  const int N = I.A.rows(), n = I.A.cols();
  std::vector<IntVec> alpha;  // alpha r <= 0
  for (int i = 0; i < N; ++i) {
    alpha.push_back(I.A.row(i));
    if (I.b_l[i].finite()) {
      IntVec a = I.A.row(i);
      for (auto& x : a) x = -x;
      alpha.push_back(a);
    }
  }
  const int K = static_cast<int>(alpha.size());
  IntMat Al = IntMat::from_rows(alpha, n);
  std::set<IntVec> rays;
  for_each_subset(K, n - 1, [&](const std::vector<int>& R) {
    IntMat sub = Al.select_rows(R);
    if (rank(sub) != n - 1) return true;
    IntVec d = integer_kernel(sub).col(0);
    for (int sg : {1, -1}) {
      IntVec r = d;
      for (auto& x : r) x *= sg;
      bool ok = true;
      for (int k = 0; k < K && ok; ++k) ok = dot(alpha[k], r) <= 0;
      if (ok) rays.insert(r);
    }
    return true;
  });
  return std::vector<IntVec>(rays.begin(), rays.end());
}

std::optional<Box> vertex_box(const CanonicalInstance& I) {
  auto verts = enumerate_vertices(I);
  if (verts.empty()) return std::nullopt;
  const int n = I.n();
  auto rays = recession_rays(I);
  Box b;
  for (int j = 0; j < n; ++j) {
    Rat lo = verts[0].x[j], hi = verts[0].x[j];
    for (auto& v : verts) lo = std::min(lo, v.x[j]), hi = std::max(hi, v.x[j]);
    Int up = rat_floor(hi), dn = rat_ceil(lo);
    for (auto& r : rays) {
      if (r[j] > 0) up += r[j];
      if (r[j] < 0) dn += r[j];
    }
    b.lo.push_back(dn);
    b.hi.push_back(up);
  }
  return b;
}

namespace {

struct GroupCode {
  std::vector<int64_t> mod;
  int64_t order = 1;
  explicit GroupCode(const GroupSpec& g) {
    for (auto& d : g.moduli) mod.push_back(to_i64(d)), order *= mod.back();
  }
  int64_t encode(const IntVec& e) const {
    int64_t c = 0;
    for (size_t i = 0; i < mod.size(); ++i) c = c * mod[i] + to_i64(mod_pos(e[i], Int(static_cast<long>(mod[i]))));
    return c;
  }
  int64_t neg(int64_t a) const {
    int64_t r = 0, mul = 1;
    for (size_t k = mod.size(); k-- > 0;) {
      int64_t da = a % mod[k];
      a /= mod[k];
      r += ((mod[k] - da) % mod[k]) * mul;
      mul *= mod[k];
    }
    return r;
  }
  int64_t add(int64_t a, int64_t b) const {
    int64_t r = 0, mul = 1;
    for (size_t k = mod.size(); k-- > 0;) {
      int64_t da = a % mod[k], db = b % mod[k];
      a /= mod[k], b /= mod[k];
      r += ((da + db) % mod[k]) * mul;
      mul *= mod[k];
    }
    return r;
  }
};

}  // namespace

std::vector<IntVec> group_minimal_solutions(const GroupInstance& I) {
  GroupCode gc(I.group);
  if (gc.order > 100000) fail(ErrorKind::Cap, "group too large for the oracle");
  const int n = I.n();
  std::vector<int64_t> gen(n);
  for (int j = 0; j < n; ++j) gen[j] = gc.encode(I.gens[j]);
  const int64_t target = gc.encode(I.target);
  std::vector<IntVec> out;
  V64 x(n, 0);
  long nodes = 0;
  const Int cap = point_cap();
  // reach: sums of nonempty sub-multisets of x
  std::function<void(int, const std::vector<char>&, int64_t)> rec = [&](int j0, const std::vector<char>& reach,
                                                                        int64_t sum) {
    if (++nodes > cap) fail(ErrorKind::Cap, "zero-sum-free enumeration exceeds the point cap");
    if (sum == target) out.push_back(from64(x));
    for (int j = j0; j < n; ++j) {
      if (gen[j] == 0) continue;
      if (!I.u.empty() && I.u[j].finite() && x[j] >= to_i64(I.u[j].value())) continue;
      std::vector<char> nr = reach;
      nr[gen[j]] = 1;
      for (int64_t e = 0; e < gc.order; ++e)
        if (reach[e]) nr[gc.add(e, gen[j])] = 1;
      if (nr[0]) continue;
      ++x[j];
      rec(j, nr, gc.add(sum, gen[j]));
      --x[j];
    }
  };
  rec(0, std::vector<char>(gc.order, 0), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> group_hull_vertices(const GroupInstance& I) {
  auto cand = group_minimal_solutions(I);
  std::vector<IntVec> units;
  for (int j = 0; j < I.n(); ++j) {
    IntVec e(I.n(), Int(0));
    e[j] = 1;
    units.push_back(e);
  }
  return extreme_points(cand, units);
}

int group_face_dimension(const GroupInstance& I, const IntVec& p) {
  if (!I.unbounded()) fail(ErrorKind::Precondition, "face dimension needs the unbounded group polyhedron");
  if (!feasible(I, p)) fail(ErrorKind::Precondition, "point is not in the group polyhedron");
  const int n = I.n();
  const auto V = group_hull_vertices(I);
  const int nv = static_cast<int>(V.size());
  // p = sum lambda_v v + mu, sum lambda = 1; a generator lies on the minimal face
  // exactly when some representation gives it positive weight
  RatMat A(n + 1, nv + n);
  RatVec b(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < nv; ++v) A(i, v) = V[v][i];
    A(i, nv + i) = 1;
    b[i] = p[i];
  }
  for (int v = 0; v < nv; ++v) A(n, v) = 1;
  b[n] = 1;
  std::vector<IntVec> dirs;
  const IntVec* base = nullptr;
  for (int q = 0; q < nv + n; ++q) {
    RatVec c(nv + n);
    c[q] = -1;
    StdLpResult r = simplex_standard(A, b, c);
    if (r.status != Status::Optimal) fail(ErrorKind::Domain, "point outside the hull");
    if (r.objective >= 0) continue;
    if (q < nv) {
      if (!base) base = &V[q];
      else {
        IntVec d(n);
        for (int i = 0; i < n; ++i) d[i] = V[q][i] - (*base)[i];
        dirs.push_back(d);
      }
    } else {
      IntVec e(n, Int(0));
      e[q - nv] = 1;
      dirs.push_back(e);
    }
  }
  if (dirs.empty()) return 0;
  return rank(IntMat::from_rows(dirs, n));
}

SolveOutcome brute_force_group(const GroupInstance& I, long radius) {
  GroupCode gc(I.group);
  const int n = I.n();
  SolveOutcome out;
  if (radius < 0) fail(ErrorKind::Parameter, "negative radius");
  const long R = radius;
  Int states = Int(n + 1) * (R + 1) * gc.order;
  if (states > point_cap()) fail(ErrorKind::Cap, "group brute force state count exceeds the point cap");
  const int64_t INF = INT64_MAX / 4;
  const int64_t G = gc.order;
  std::vector<int64_t> neg(n), c(n), ub(n, R);
  for (int j = 0; j < n; ++j) {
    neg[j] = gc.neg(gc.encode(I.gens[j]));
    c[j] = to_i64(I.c[j]);
    if (!I.u.empty() && I.u[j].finite()) ub[j] = std::min<int64_t>(R, to_i64(I.u[j].value()));
  }
  // f[j][r][e]: cheapest use of coordinates j..n-1 summing to e with at most r units
  auto idx = [&](int j, long r, int64_t e) { return (static_cast<size_t>(j) * (R + 1) + r) * G + e; };
  std::vector<int64_t> f(static_cast<size_t>(n + 1) * (R + 1) * G, INF);
  for (long r = 0; r <= R; ++r) f[idx(n, r, 0)] = 0;
  for (int j = n - 1; j >= 0; --j)
    for (long r = 0; r <= R; ++r)
      for (int64_t e = 0; e < G; ++e) {
        int64_t best = INF, need = e;
        for (int64_t t = 0; t <= std::min<int64_t>(r, ub[j]); ++t) {
          int64_t v = f[idx(j + 1, r - t, need)];
          if (v < INF) best = std::min(best, v + t * c[j]);
          need = gc.add(need, neg[j]);
        }
        f[idx(j, r, e)] = best;
      }
  const int64_t target = gc.encode(I.target);
  int64_t left = f[idx(0, R, target)];
  out.note("radius", std::to_string(R));
  if (left >= INF) return out;
  out.status = Status::Optimal;
  out.value = Int(static_cast<long>(left));
  long r = R;
  int64_t e = target;
  for (int j = 0; j < n; ++j) {
    int64_t need = e;
    for (int64_t t = 0;; ++t) {
      int64_t v = f[idx(j + 1, r - t, need)];
      if (v < INF && v + t * c[j] == left) {
        out.x.emplace_back(static_cast<long>(t));
        left -= t * c[j];
        r -= t;
        e = need;
        break;
      }
      need = gc.add(need, neg[j]);
    }
  }
  return out;
}

Int knapsack_capacity_oracle(const IntVec& w, const IntVec& c, long W) {
  std::vector<int64_t> best(W + 1, 0);
  const size_t n = w.size();
  V64 w64 = to64(w), c64 = to64(c);
  for (long cap = 1; cap <= W; ++cap) {
    best[cap] = best[cap - 1];
    for (size_t i = 0; i < n; ++i)
      if (w64[i] <= cap) best[cap] = std::max(best[cap], best[cap - w64[i]] + c64[i]);
  }
  return Int(static_cast<long>(best[W]));
}

bool subset_sum_oracle(const IntVec& w, long W) {
  std::vector<char> reach(W + 1, 0);
  reach[0] = 1;
  V64 w64 = to64(w);
  for (long s = 1; s <= W; ++s)
    for (int64_t wi : w64)
      if (wi <= s && reach[s - wi]) {
        reach[s] = 1;
        break;
      }
  return reach[W];
}

Box proximity_box(const StandardInstance& I) {
  const int n = I.n();
  LpOutcome lp = solve_lp(I);
  Box B;
  if (lp.status == Status::Infeasible) {
    B.lo.assign(n, Int(0));
    B.hi.assign(n, Int(-1));
    return B;
  }
  if (lp.status == Status::Unbounded) fail(ErrorKind::Domain, "LP relaxation is unbounded");
  const Int D = I.m() > 0 ? delta(I.A) : Int(1);
  const Int chi = proximity_bound_bounded(I.m(), D, I.det_S());
  for (int j = 0; j < n; ++j) {
    Int lo = rat_floor(lp.vertex[j]) - chi, hi = rat_ceil(lp.vertex[j]) + chi;
    B.lo.push_back(lo < 0 ? Int(0) : lo);
    B.hi.push_back(I.u[j].finite() && I.u[j].value() < hi ? I.u[j].value() : hi);
  }
  return B;
}

SolveOutcome branch_and_bound(const StandardInstance& I, const Box& box) {
  const int n = I.n(), m = I.m(), d = I.G.rows();
  if (static_cast<int>(box.lo.size()) != n || static_cast<int>(box.hi.size()) != n)
    fail(ErrorKind::Dimension, "box dimension differs from n");
  // a node is a box plus bounds on the lattice rows: glo_i <= G_i x <= ghi_i
  struct Node {
    IntVec lo, hi;
    std::vector<std::optional<Int>> glo, ghi;
  };
  SolveOutcome best;
  std::vector<Node> stack{{box.lo, box.hi, std::vector<std::optional<Int>>(d), std::vector<std::optional<Int>>(d)}};
  const Int cap = point_cap();
  Int nodes = 0;
  while (!stack.empty()) {
    Node nd = std::move(stack.back());
    stack.pop_back();
    if (++nodes > cap) fail(ErrorKind::Cap, "branch and bound exceeds the point cap");
    const IntVec &lo = nd.lo, &hi = nd.hi;
    bool empty = false;
    for (int j = 0; j < n; ++j) empty |= lo[j] > hi[j];
    for (int i = 0; i < d; ++i) empty |= nd.glo[i] && nd.ghi[i] && *nd.glo[i] > *nd.ghi[i];
    if (empty) continue;
    // LP in y = x - lo with one slack column per bound on a lattice row
    std::vector<std::pair<int, int>> cuts;  // (row, +1 upper / -1 lower)
    for (int i = 0; i < d; ++i) {
      if (nd.ghi[i]) cuts.push_back({i, 1});
      if (nd.glo[i]) cuts.push_back({i, -1});
    }
    const int k = static_cast<int>(cuts.size());
    StandardInstance J;
    J.A = IntMat(m + k, n + k);
    J.b.assign(m + k, Int(0));
    IntVec Alo = I.A * lo, Glo = I.G * lo;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) J.A(i, j) = I.A(i, j);
      J.b[i] = I.b[i] - Alo[i];
    }
    for (int t = 0; t < k; ++t) {
      auto [i, sg] = cuts[t];
      for (int j = 0; j < n; ++j) J.A(m + t, j) = I.G(i, j);
      J.A(m + t, n + t) = sg;
      J.b[m + t] = (sg > 0 ? *nd.ghi[i] : *nd.glo[i]) - Glo[i];
    }
    for (int j = 0; j < n; ++j) J.u.emplace_back(hi[j] - lo[j]);
    for (int t = 0; t < k; ++t) J.u.push_back(ExtInt::pos_inf());
    J.c = I.c;
    J.c.resize(n + k, Int(0));
    LpOutcome lp = solve_lp(J);
    if (lp.status != Status::Optimal) continue;
    const Rat bound = lp.objective + Rat(dot(I.c, lo));
    if (best.status == Status::Optimal && rat_ceil(bound) >= best.value) continue;
    IntVec x(n);
    int frac = -1;
    for (int j = 0; j < n; ++j) {
      Rat v = lp.vertex[j] + Rat(lo[j]);
      if (frac < 0 && v.get_den() != 1) frac = j;
      x[j] = rat_floor(v);
    }
    if (frac >= 0) {
      Node a = nd, b = nd;
      a.hi[frac] = x[frac];
      b.lo[frac] = x[frac] + 1;
      stack.push_back(std::move(b));
      stack.push_back(std::move(a));
      continue;
    }
    // integral point: branch on a lattice row G_i x = g_i + S_ii k_i with k_i fractional
    IntVec Gx = I.G * x;
    int row = -1;
    for (int i = 0; i < d && row < 0; ++i)
      if (mod_pos(Gx[i] - I.g[i], I.S(i, i)) != 0) row = i;
    if (row < 0) {
      best.status = Status::Optimal;
      best.x = x;
      best.value = dot(I.c, x);
      continue;
    }
    const Int s = I.S(row, row), q = floor_div(Gx[row] - I.g[row], s);
    Node a = nd, b = nd;
    a.ghi[row] = I.g[row] + s * q;
    b.glo[row] = I.g[row] + s * (q + 1);
    stack.push_back(std::move(b));
    stack.push_back(std::move(a));
  }
  best.note("nodes", nodes.get_str());
  return best;
}

}  // namespace dilp
