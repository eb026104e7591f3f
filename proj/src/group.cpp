#include "dilp/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dilp/linalg.hpp"
#include "dilp/oracle.hpp"

namespace dilp {

GroupCodec::GroupCodec(const GroupSpec& g) {
  for (auto& d : g.moduli) {
    if (d < 1) fail(ErrorKind::Precondition, "group modulus must be positive");
    mod_.push_back(to_i64(d));
    if (order_ > (int64_t(1) << 40) / mod_.back()) fail(ErrorKind::Cap, "group order too large");
    order_ *= mod_.back();
  }
}

int64_t GroupCodec::encode(const IntVec& e) const {
  int64_t c = 0;
  for (size_t i = 0; i < mod_.size(); ++i) c = c * mod_[i] + to_i64(mod_pos(e[i], Int(static_cast<long>(mod_[i]))));
  return c;
}

IntVec GroupCodec::decode(int64_t c) const {
  IntVec e(mod_.size());
  for (size_t k = mod_.size(); k-- > 0;) {
    e[k] = static_cast<long>(c % mod_[k]);
    c /= mod_[k];
  }
  return e;
}

int64_t GroupCodec::add(int64_t a, int64_t b) const {
  int64_t r = 0, mul = 1;
  for (size_t k = mod_.size(); k-- > 0;) {
    int64_t s = a % mod_[k] + b % mod_[k];
    if (s >= mod_[k]) s -= mod_[k];
    a /= mod_[k], b /= mod_[k];
    r += s * mul;
    mul *= mod_[k];
  }
  return r;
}

int64_t GroupCodec::neg(int64_t a) const {
  int64_t r = 0, mul = 1;
  for (size_t k = mod_.size(); k-- > 0;) {
    int64_t d = a % mod_[k];
    a /= mod_[k];
    r += ((mod_[k] - d) % mod_[k]) * mul;
    mul *= mod_[k];
  }
  return r;
}

namespace {

void require_unbounded_group(const GroupInstance& I) {
  require_valid(I);
  if (!I.unbounded()) fail(ErrorKind::Precondition, "solver expects the unbounded group problem");
}

// Lexicographic label (c x, |x|_1, x_1, ..., x_n); the minimum over a
// polyhedron with recession cone R^n_+ is attained at a unique vertex.
struct Label {
  int64_t cost = kInf;
  int64_t norm = 0;
  std::vector<int32_t> x;
  bool reachable() const { return cost < kInf; }
  bool operator<(const Label& o) const {
    if (cost != o.cost) return cost < o.cost;
    if (norm != o.norm) return norm < o.norm;
    return x < o.x;
  }
};

}  // namespace

SolveOutcome gomory_solve(const GroupInstance& I) {
  require_unbounded_group(I);
  GroupCodec gc(I.group);
  const int64_t G = gc.order();
  const int n = I.n();
  SolveOutcome out;
  // one arc per distinct nonzero element, cheapest cost, smallest index on ties
  std::map<int64_t, int> pick;
  int dropped = 0;
  for (int j = 0; j < n; ++j) {
    int64_t e = gc.encode(I.gens[j]);
    if (e == 0) {
      ++dropped;
      continue;
    }
    auto it = pick.find(e);
    if (it == pick.end()) pick[e] = j;
    else {
      ++dropped;
      if (I.c[j] < I.c[it->second]) it->second = j;
    }
  }
  out.note("generators_used", std::to_string(pick.size()));
  out.note("generators_dropped", std::to_string(dropped));
  std::vector<Label> dist(G);
  dist[0].cost = 0;
  dist[0].x.assign(n, 0);
  std::vector<char> seen(G);
  for (auto& [e, j] : pick) {
    const int64_t w = to_i64(I.c[j]);
    std::fill(seen.begin(), seen.end(), 0);
    for (int64_t s = 0; s < G; ++s) {
      if (seen[s]) continue;
      // collect the cycle s, s+e, s+2e, ... and start the walk at its best label
      std::vector<int64_t> cyc;
      for (int64_t v = s; !seen[v]; v = gc.add(v, e)) {
        seen[v] = 1;
        cyc.push_back(v);
      }
      size_t start = 0;
      for (size_t k = 1; k < cyc.size(); ++k)
        if (dist[cyc[k]] < dist[cyc[start]]) start = k;
      if (!dist[cyc[start]].reachable()) continue;
      const size_t L = cyc.size();
      for (size_t step = 0; step + 1 < L; ++step) {
        const Label& from = dist[cyc[(start + step) % L]];
        if (!from.reachable()) continue;
        Label cand = from;
        cand.cost += w;
        cand.norm += 1;
        cand.x[j] += 1;
        Label& to = dist[cyc[(start + step + 1) % L]];
        if (cand < to) to = std::move(cand);
      }
    }
  }
  const Label& best = dist[gc.encode(I.target)];
  if (!best.reachable()) return out;
  out.status = Status::Optimal;
  out.value = Int(static_cast<long>(best.cost));
  for (int32_t v : best.x) out.x.emplace_back(static_cast<long>(v));
  return out;
}

std::vector<int64_t> minplus_convolution(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                         std::vector<int>* arg) {
  if (a.empty() || b.empty()) return {};
  std::vector<int64_t> c(a.size() + b.size() - 1, kInf);
  if (arg) arg->assign(c.size(), -1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= kInf) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= kInf) continue;
      int64_t v = a[i] + b[j];
      if (v < c[i + j]) {
        c[i + j] = v;
        if (arg) (*arg)[i + j] = static_cast<int>(i);
      }
    }
  }
  return c;
}

std::vector<ExtInt> minplus_convolution(const std::vector<ExtInt>& a, const std::vector<ExtInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<ExtInt> c(a.size() + b.size() - 1, ExtInt::pos_inf());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      if (!a[i].finite() || !b[j].finite()) {
        if (a[i].is_neg_inf() || b[j].is_neg_inf()) fail(ErrorKind::Domain, "-inf in a (min,+) operand");
        continue;
      }
      Int v = a[i].value() + b[j].value();
      if (!c[i + j].finite() || v < c[i + j].value()) c[i + j] = v;
    }
  return c;
}

SolveOutcome cyclic_minplus_solve(const GroupInstance& I) {
  require_unbounded_group(I);
  if (!I.group.cyclic()) fail(ErrorKind::Precondition, "cyclic solver needs a cyclic group");
  GroupCodec gc(I.group);
  const int64_t r = gc.order();
  const int n = I.n();
  SolveOutcome out;
  const int64_t target = gc.encode(I.target);
  if (r == 1 || target == 0) {
    out.status = Status::Optimal;
    out.value = 0;
    out.x.assign(n, Int(0));
    return out;
  }
  // DP(1, .) by binary search in the sorted (element, cost, index) list
  std::vector<std::tuple<int64_t, int64_t, int>> items;
  for (int j = 0; j < n; ++j) items.emplace_back(gc.encode(I.gens[j]), to_i64(I.c[j]), j);
  std::sort(items.begin(), items.end());
  std::vector<int64_t> alpha(r, kInf);
  std::vector<int> gen_of(r, -1);
  alpha[0] = 0;
  for (int64_t s = 1; s < r; ++s) {
    auto it = std::lower_bound(items.begin(), items.end(), std::make_tuple(s, int64_t(INT64_MIN), 0));
    if (it != items.end() && std::get<0>(*it) == s) {
      alpha[s] = std::get<1>(*it);
      gen_of[s] = std::get<2>(*it);
    }
  }
  const int K = static_cast<int>(std::ceil(std::log(static_cast<double>(r)) / std::log(1.5) - 1e-12));
  std::vector<std::vector<int>> split;  // split[k][s]: first summand of DP(k+2, s)
  for (int k = 2; k <= K; ++k) {
    std::vector<int64_t> aa(alpha);
    aa.insert(aa.end(), alpha.begin(), alpha.end());
    std::vector<int> arg;
    std::vector<int64_t> beta = minplus_convolution(aa, aa, &arg);
    std::vector<int64_t> next(r);
    std::vector<int> sp(r);
    for (int64_t s = 0; s < r; ++s) {
      next[s] = beta[s + r];
      sp[s] = arg[s + r] < 0 ? -1 : static_cast<int>(arg[s + r] % r);
    }
    alpha = next;
    split.push_back(sp);
  }
  out.note("rounds", std::to_string(std::max(K, 1)));
  if (alpha[target] >= kInf) return out;
  out.status = Status::Optimal;
  out.value = Int(static_cast<long>(alpha[target]));
  std::vector<long> x(n, 0);
  // expand (level, element) pairs back down to single generators
  std::vector<std::pair<int, int64_t>> stack{{K < 2 ? 1 : K, target}};
  while (!stack.empty()) {
    auto [k, s] = stack.back();
    stack.pop_back();
    if (s == 0) continue;
    if (k <= 1) {
      x[gen_of[s]] += 1;
      continue;
    }
    int64_t a = split[k - 2][s];
    int64_t b = ((s - a) % r + r) % r;
    stack.emplace_back(k - 1, a);
    stack.emplace_back(k - 1, b);
  }
  for (long v : x) out.x.emplace_back(v);
  return out;
}

Certificate vertex_certificate(const IntVec& z, const Int& order) {
  Certificate c;
  for (auto& v : z) {
    if (v < 0) fail(ErrorKind::Precondition, "certificate needs a nonnegative vector");
    c.product *= v + 1;
  }
  c.pass = c.product <= order;
  return c;
}

int independence_rank(const GroupInstance& I, const IntVec& p) {
  GroupCodec gc(I.group);
  const int n = I.n();
  std::vector<int64_t> gen(n);
  for (int j = 0; j < n; ++j) gen[j] = gc.encode(I.gens[j]);
  Box box;
  for (int j = 0; j < n; ++j) box.lo.emplace_back(0), box.hi.push_back(p[j]);
  if (box.volume() > point_cap()) fail(ErrorKind::Cap, "independence test box exceeds the point cap");
  std::vector<IntVec> sols;
  IntVec x(n, Int(0));
  for (;;) {
    int64_t s = 0;
    for (int j = 0; j < n; ++j)
      for (long t = 0; t < x[j].get_si(); ++t) s = gc.add(s, gen[j]);
    if (s == 0 && l1(x) > 0) sols.push_back(x);
    int j = n - 1;
    while (j >= 0 && x[j] == p[j]) x[j] = 0, --j;
    if (j < 0) break;
    ++x[j];
  }
  if (sols.empty()) return 0;
  return rank(IntMat::from_rows(sols, n));
}

std::optional<std::vector<int>> face_support_witness(const IntVec& p, int d, const GroupInstance& I) {
  const int n = I.n();
  if (!feasible(I, p)) fail(ErrorKind::Precondition, "witness needs a feasible point");
  const int size = std::max(0, n - d);
  // the product over a fixed-size index set is smallest on the smallest coordinates
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return p[a] < p[b]; });
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  Int prod = 1;
  for (int j : idx) prod *= p[j] + 1;
  if (prod > I.group.order()) return std::nullopt;
  return idx;
}

}  // namespace dilp
