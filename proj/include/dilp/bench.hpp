#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilp/problem.hpp"
#include "dilp/rng.hpp"

namespace dilp {

// max c x  s.t.  w x = W, 0 <= x <= u with max w = delta, as a bounded standard instance.
StandardInstance bounded_knapsack(Rng& r, int n, long delta);

struct ScalingRun {
  long delta = 0;
  std::vector<double> ms;  // one per seed
  double median() const;
};
struct ScalingResult {
  ScalingRun lo, hi;
  double ratio() const { return lo.median() > 0 ? hi.median() / lo.median() : 0.0; }
};
ScalingResult knapsack_scaling(int n, long delta_lo, long delta_hi, int seeds, uint64_t seed);

// Fixed 5 x 3 matrix with Delta = 3 for the locality trend.
IntMat trend_matrix();

struct SweepResult {
  long instances = 0;
  long optimal = 0;
  long mismatches = 0;
  double seconds = 0;
  std::string first_mismatch;
};
// Bounded DP (both variants, chi from the proximity bound) against enumeration.
SweepResult bounded_dp_sweep(long count, uint64_t seed);

}  // namespace dilp
