#include "dilp/bench.hpp"

#include <algorithm>
#include <chrono>

#include "dilp/bounds.hpp"
#include "dilp/dp.hpp"
#include "dilp/gen.hpp"
#include "dilp/linalg.hpp"
#include "dilp/oracle.hpp"
#include "dilp/reductions.hpp"

namespace dilp {

StandardInstance bounded_knapsack(Rng& r, int n, long delta) {
  if (n < 1 || delta < 1) fail(ErrorKind::Parameter, "knapsack needs n >= 1 and delta >= 1");
  for (;;) {
    IntMat w(1, n);
    IntVec c, x0;
    ExtVec u;
    for (int j = 0; j < n; ++j) {
      w(0, j) = j == 0 ? delta : r.uniform(1, delta);
      c.emplace_back(r.uniform(1, 100));
      long uj = r.uniform(1, 4);
      u.emplace_back(uj);
      x0.emplace_back(r.uniform(0, uj));
    }
    auto red = classic_to_generalized(w, w * x0, c, u);
    if (!red.infeasible) return red.inst;
  }
}

double ScalingRun::median() const {
  if (ms.empty()) return 0;
  std::vector<double> v = ms;
  std::sort(v.begin(), v.end());
  const size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

namespace {

double time_bounded_dp(const StandardInstance& I) {
  const Int chi = proximity_bound_bounded(I.m(), delta(I.A), I.det_S());
  auto t0 = std::chrono::steady_clock::now();
  solve_bilp_sf(I, chi, BilpVariant::Binarized);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

ScalingResult knapsack_scaling(int n, long delta_lo, long delta_hi, int seeds, uint64_t seed) {
  ScalingResult res;
  res.lo.delta = delta_lo;
  res.hi.delta = delta_hi;
  Rng root(seed);
  for (int s = 0; s < seeds; ++s) {
    Rng a = root.split(2 * s), b = root.split(2 * s + 1);
    res.lo.ms.push_back(time_bounded_dp(bounded_knapsack(a, n, delta_lo)));
    res.hi.ms.push_back(time_bounded_dp(bounded_knapsack(b, n, delta_hi)));
  }
  return res;
}

IntMat trend_matrix() { return IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}, {-1, -2, -1}}; }

SweepResult bounded_dp_sweep(long count, uint64_t seed) {
  SweepResult res;
  Rng root(seed);
  auto t0 = std::chrono::steady_clock::now();
  for (long it = 0; it < count; ++it) {
    Rng r = root.split(it);
    const int n = static_cast<int>(r.uniform(1, 8));
    const int m = static_cast<int>(r.uniform(0, std::min(n, 3)));
    StandardInstance I = random_standard(r, n, m, 8, 6, true);
    const Int chi = proximity_bound_bounded(m, m ? delta(I.A) : Int(1), I.det_S());
    SolveOutcome bf = brute_force_ilp(I, standard_box(I));
    ++res.instances;
    res.optimal += bf.status == Status::Optimal;
    for (BilpVariant v : {BilpVariant::Binarized, BilpVariant::Queue}) {
      SolveOutcome o = solve_bilp_sf(I, chi, v);
      bool ok = o.status == bf.status && (o.status != Status::Optimal || (o.value == bf.value && feasible(I, o.x)));
      if (!ok) {
        ++res.mismatches;
        if (res.first_mismatch.empty())
          res.first_mismatch = "instance " + std::to_string(it) + " variant " + to_string(v);
      }
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace dilp
