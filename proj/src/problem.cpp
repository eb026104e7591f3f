#include "dilp/problem.hpp"

#include <algorithm>
#include <numeric>

#include "dilp/linalg.hpp"

namespace dilp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

bool CanonicalInstance::bounded() const {
  for (auto& x : b_l)
    if (!x.finite()) return false;
  return true;
}

bool StandardInstance::bounded() const {
  for (auto& x : u)
    if (!x.finite()) return false;
  return true;
}

bool StandardInstance::unbounded() const {
  for (auto& x : u)
    if (x.finite()) return false;
  return true;
}

Int StandardInstance::det_S() const {
  Int d = 1;
  for (int i = 0; i < S.rows(); ++i) d *= S(i, i);
  return abs(d);
}

IntVec StandardInstance::moduli() const {
  IntVec d(S.rows());
  for (int i = 0; i < S.rows(); ++i) d[i] = S(i, i);
  return d;
}

Int GroupSpec::order() const {
  Int o = 1;
  for (auto& d : moduli) o *= d;
  return o;
}

IntVec GroupSpec::reduce(const IntVec& e) const {
  IntVec r(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) r[i] = mod_pos(e[i], moduli[i]);
  return r;
}

IntVec GroupSpec::add(const IntVec& a, const IntVec& b) const {
  IntVec r(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) r[i] = mod_pos(a[i] + b[i], moduli[i]);
  return r;
}

IntVec GroupSpec::scale(const IntVec& a, const Int& k) const {
  IntVec r(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) r[i] = mod_pos(a[i] * k, moduli[i]);
  return r;
}

bool GroupSpec::is_zero(const IntVec& e) const {
  for (size_t i = 0; i < moduli.size(); ++i)
    if (mod_pos(e[i], moduli[i]) != 0) return false;
  return true;
}

bool GroupSpec::cyclic() const {
  int big = 0;
  for (auto& d : moduli) big += d > 1;
  return big <= 1;
}

bool GroupInstance::unbounded() const {
  for (auto& x : u)
    if (x.finite()) return false;
  return true;
}

std::vector<std::string> validate(const CanonicalInstance& I) {
  std::vector<std::string> v;
  const int N = I.A.rows(), n = I.A.cols();
  if (n < 1) v.push_back("A has no columns");
  if (static_cast<int>(I.b_l.size()) != N) v.push_back("b_l length differs from row count");
  if (static_cast<int>(I.b_r.size()) != N) v.push_back("b_r length differs from row count");
  if (static_cast<int>(I.c.size()) != n) v.push_back("c length differs from column count");
  if (!v.empty()) return v;
  if (N < n || rank(I.A) != n) v.push_back("A is not of full column rank");
  for (int i = 0; i < N; ++i) {
    if (I.b_l[i].is_pos_inf()) v.push_back("b_l[" + std::to_string(i) + "] is +inf");
    else if (I.b_l[i].finite() && I.b_l[i].value() > I.b_r[i])
      v.push_back("b_l[" + std::to_string(i) + "] > b_r[" + std::to_string(i) + "]");
  }
  return v;
}

static std::vector<std::string> validate_smith(const IntMat& S) {
  std::vector<std::string> v;
  for (int i = 0; i < S.rows(); ++i)
    for (int j = 0; j < S.cols(); ++j)
      if (i != j && S(i, j) != 0) {
        v.push_back("S is not diagonal");
        return v;
      }
  for (int i = 0; i < S.rows(); ++i)
    if (S(i, i) < 1) v.push_back("S diagonal entry " + std::to_string(i) + " is not positive");
  if (!v.empty()) return v;
  for (int i = 0; i + 1 < S.rows(); ++i)
    if (S(i + 1, i + 1) % S(i, i) != 0) v.push_back("divisibility chain broken at " + std::to_string(i));
  return v;
}

std::vector<std::string> validate(const StandardInstance& I) {
  std::vector<std::string> v;
  const int n = I.A.cols(), m = I.A.rows(), d = n - m;
  if (n < 1) v.push_back("no variables");
  if (d < 0) v.push_back("more equality rows than variables");
  if (!v.empty()) return v;
  if (I.G.rows() != d || I.G.cols() != n) v.push_back("G must be (n-m) x n");
  if (I.S.rows() != d || I.S.cols() != d) v.push_back("S must be (n-m) x (n-m)");
  if (static_cast<int>(I.b.size()) != m) v.push_back("b length differs from m");
  if (static_cast<int>(I.g.size()) != d) v.push_back("g length differs from n-m");
  if (static_cast<int>(I.u.size()) != n) v.push_back("u length differs from n");
  if (static_cast<int>(I.c.size()) != n) v.push_back("c length differs from n");
  if (!v.empty()) return v;
  IntMat stack = IntMat::vstack(I.A, I.G);
  if (abs(det(stack)) != 1) v.push_back("stack not unimodular");
  auto sv = validate_smith(I.S);
  v.insert(v.end(), sv.begin(), sv.end());
  if (sv.empty())
    for (int i = 0; i < d; ++i)
      if (I.g[i] < 0 || I.g[i] >= I.S(i, i)) v.push_back("g[" + std::to_string(i) + "] not reduced mod S");
  for (int i = 0; i < n; ++i) {
    if (I.c[i] < 0) v.push_back("c[" + std::to_string(i) + "] is negative");
    if (I.u[i].is_neg_inf() || (I.u[i].finite() && I.u[i].value() < 0))
      v.push_back("u[" + std::to_string(i) + "] is negative");
  }
  return v;
}

std::vector<std::string> validate(const GroupInstance& I) {
  std::vector<std::string> v;
  if (I.group.moduli.empty()) v.push_back("group has no factors");
  for (size_t i = 0; i < I.group.moduli.size(); ++i) {
    if (I.group.moduli[i] < 1) v.push_back("modulus " + std::to_string(i) + " is not positive");
    else if (i + 1 < I.group.moduli.size() && I.group.moduli[i + 1] >= 1 &&
             I.group.moduli[i + 1] % I.group.moduli[i] != 0)
      v.push_back("divisibility chain broken at " + std::to_string(i));
  }
  if (I.gens.empty()) v.push_back("no generators");
  if (I.c.size() != I.gens.size()) v.push_back("cost length differs from generator count");
  if (!I.u.empty() && I.u.size() != I.gens.size()) v.push_back("bound length differs from generator count");
  if (!v.empty()) return v;
  const size_t r = I.group.moduli.size();
  auto reduced = [&](const IntVec& e) {
    if (e.size() != r) return false;
    for (size_t i = 0; i < r; ++i)
      if (e[i] < 0 || e[i] >= I.group.moduli[i]) return false;
    return true;
  };
  for (size_t k = 0; k < I.gens.size(); ++k)
    if (!reduced(I.gens[k])) v.push_back("generator " + std::to_string(k) + " not reduced");
  if (!reduced(I.target)) v.push_back("target not reduced");
  for (size_t k = 0; k < I.c.size(); ++k)
    if (I.c[k] < 0) v.push_back("c[" + std::to_string(k) + "] is negative");
  for (size_t k = 0; k < I.u.size(); ++k)
    if (I.u[k].is_neg_inf() || (I.u[k].finite() && I.u[k].value() < 0))
      v.push_back("u[" + std::to_string(k) + "] is negative");
  return v;
}

template <class T>
static void require_valid_impl(const T& I) {
  auto v = validate(I);
  if (v.empty()) return;
  std::string s = "invalid instance:";
  for (auto& x : v) s += " " + x + ";";
  fail(ErrorKind::Precondition, s);
}

void require_valid(const CanonicalInstance& I) { require_valid_impl(I); }
void require_valid(const StandardInstance& I) { require_valid_impl(I); }
void require_valid(const GroupInstance& I) { require_valid_impl(I); }

bool feasible(const CanonicalInstance& I, const IntVec& x) {
  IntVec Ax = I.A * x;
  for (int i = 0; i < I.A.rows(); ++i)
    if (Ax[i] > I.b_r[i] || !ext_le(I.b_l[i], Ax[i])) return false;
  return true;
}

bool feasible(const StandardInstance& I, const IntVec& x) {
  if (static_cast<int>(x.size()) != I.n()) return false;
  for (int i = 0; i < I.n(); ++i)
    if (x[i] < 0 || !ext_ge(I.u[i], x[i])) return false;
  if (I.A * x != I.b) return false;
  IntVec Gx = I.G * x;
  for (int i = 0; i < I.S.rows(); ++i)
    if (mod_pos(Gx[i] - I.g[i], I.S(i, i)) != 0) return false;
  return true;
}

bool feasible(const GroupInstance& I, const IntVec& x) {
  if (static_cast<int>(x.size()) != I.n()) return false;
  IntVec acc(I.group.moduli.size(), Int(0));
  for (int k = 0; k < I.n(); ++k) {
    if (x[k] < 0) return false;
    if (!I.u.empty() && !ext_ge(I.u[k], x[k])) return false;
    acc = I.group.add(acc, I.group.scale(I.gens[k], x[k]));
  }
  return acc == I.group.reduce(I.target);
}

Int objective(const CanonicalInstance& I, const IntVec& x) { return dot(I.c, x); }
Int objective(const StandardInstance& I, const IntVec& x) { return dot(I.c, x); }
Int objective(const GroupInstance& I, const IntVec& x) { return dot(I.c, x); }

// ---------------------------------------------------------------- normalization

std::pair<CanonicalInstance, NormalizationRecord> normalize(const CanonicalInstance& I,
                                                            const std::vector<int>& base) {
  require_valid(I);
  const int N = I.A.rows(), n = I.A.cols();
  if (static_cast<int>(base.size()) != n) fail(ErrorKind::Base, "base must have n rows");
  std::vector<char> inB(N, 0);
  for (int r : base) {
    if (r < 0 || r >= N || inB[r]) fail(ErrorKind::Base, "base rows out of range or repeated");
    inB[r] = 1;
  }
  IntMat AB = I.A.select_rows(base);
  Int dB = det(AB);
  if (dB == 0) fail(ErrorKind::Base, "singular base");

  NormalizationRecord rec;
  rec.base = base;
  rec.delta = abs(dB);

  HnfResult h = hnf(AB);  // AB = H * Q0, y = Q0 x
  const IntMat& H = h.T;

  // unit diagonal indices first (stable), then lex-sort the H block columns
  std::vector<int> unit, rest;
  for (int i = 0; i < n; ++i) (H(i, i) == 1 ? unit : rest).push_back(i);
  rec.s = static_cast<int>(unit.size());
  rec.t_diag = static_cast<int>(rest.size());
  std::vector<int> order = unit;
  auto hcol = [&](int j) {
    IntVec v;
    for (int r : rest) v.push_back(H(r, j));
    return v;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return hcol(a) < hcol(b); });
  order.insert(order.end(), rest.begin(), rest.end());
  rec.col_perm = order;
  for (int k = 0; k < n; ++k) rec.row_perm.push_back(base[order[k]]);
  for (int i = 0; i < N; ++i)
    if (!inB[i]) rec.row_perm.push_back(i);

  // x' = Pi * Q0 * x + t, where (Pi y)_k = y_{order[k]}
  IntMat Pi(n, n);
  for (int k = 0; k < n; ++k) Pi(k, order[k]) = 1;
  rec.U = Pi * h.Q;
  rec.Uinv = unimodular_inverse(rec.U);

  IntMat Ap = I.A.select_rows(rec.row_perm) * rec.Uinv;
  ExtVec bl(N);
  IntVec br(N);
  for (int i = 0; i < N; ++i) {
    bl[i] = I.b_l[rec.row_perm[i]];
    br[i] = I.b_r[rec.row_perm[i]];
  }
  const bool use_l = I.bounded();
  rec.t = IntVec(n, Int(0));
  for (int i = 0; i < n; ++i) {
    Int w = use_l ? bl[i].value() : br[i];
    for (int j = 0; j < i; ++j) w += Ap(i, j) * rec.t[j];
    rec.t[i] = -floor_div(w, Ap(i, i));
  }
  IntVec shift = Ap * rec.t;
  CanonicalInstance out;
  out.A = Ap;
  out.b_l = bl;
  out.b_r = br;
  for (int i = 0; i < N; ++i) {
    if (out.b_l[i].finite()) out.b_l[i] = out.b_l[i].value() + shift[i];
    out.b_r[i] += shift[i];
  }
  out.c = rec.Uinv.transpose() * I.c;
  return {out, rec};
}

CanonicalInstance apply_normalization(const NormalizationRecord& rec, const CanonicalInstance& I) {
  const int N = I.A.rows();
  CanonicalInstance out;
  out.A = I.A.select_rows(rec.row_perm) * rec.Uinv;
  IntVec shift = out.A * rec.t;
  out.b_l.resize(N);
  out.b_r.resize(N);
  for (int i = 0; i < N; ++i) {
    const ExtInt& l = I.b_l[rec.row_perm[i]];
    out.b_l[i] = l.finite() ? ExtInt(l.value() + shift[i]) : l;
    out.b_r[i] = I.b_r[rec.row_perm[i]] + shift[i];
  }
  out.c = rec.Uinv.transpose() * I.c;
  return out;
}

IntVec transform_point(const NormalizationRecord& rec, const IntVec& x, Direction dir) {
  if (static_cast<int>(x.size()) != rec.U.cols()) fail(ErrorKind::Dimension, "point size mismatch");
  if (dir == Direction::Forward) {
    IntVec y = rec.U * x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += rec.t[i];
    return y;
  }
  IntVec y = x;
  for (size_t i = 0; i < y.size(); ++i) y[i] -= rec.t[i];
  return rec.Uinv * y;
}

RatVec transform_point(const NormalizationRecord& rec, const RatVec& x, Direction dir) {
  if (static_cast<int>(x.size()) != rec.U.cols()) fail(ErrorKind::Dimension, "point size mismatch");
  if (dir == Direction::Forward) {
    RatVec y = to_rat(rec.U) * x;
    for (size_t i = 0; i < y.size(); ++i) y[i] += rec.t[i];
    return y;
  }
  RatVec y = x;
  for (size_t i = 0; i < y.size(); ++i) y[i] -= rec.t[i];
  return to_rat(rec.Uinv) * y;
}

std::vector<std::string> check_normalized(const CanonicalInstance& I, int n_base) {
  std::vector<std::string> v;
  const int n = n_base < 0 ? I.A.cols() : n_base;
  const IntMat& A = I.A;
  int s = 0;
  while (s < n && A(s, s) == 1) ++s;
  for (int i = 0; i < n; ++i) {
    if (A(i, i) <= 0) v.push_back("non-positive diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j)
      if (A(i, j) != 0) v.push_back("base block not lower triangular");
    for (int j = 0; j < i; ++j)
      if (A(i, j) < 0 || A(i, j) >= A(i, i)) v.push_back("entry out of HNF range at row " + std::to_string(i));
    if (i >= s && A(i, i) == 1) v.push_back("unit diagonal after a non-unit one");
  }
  for (int j = 0; j + 1 < s; ++j) {
    IntVec a, b;
    for (int r = s; r < n; ++r) a.push_back(A(r, j)), b.push_back(A(r, j + 1));
    if (b < a) v.push_back("H block columns not lexicographically sorted");
  }
  const bool use_l = I.bounded();
  for (int i = 0; i < n; ++i) {
    Int w = use_l ? I.b_l[i].value() : I.b_r[i];
    if (w < 0 || w >= A(i, i)) v.push_back("base right-hand side out of range at " + std::to_string(i));
  }
  return v;
}

}  // namespace dilp
