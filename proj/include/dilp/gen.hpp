#pragma once

#include <cstdint>
#include <string>

#include "dilp/io.hpp"
#include "dilp/rng.hpp"

namespace dilp {

// Unimodular n x n matrix with entries bounded by 3, built from row operations.
IntMat random_unimodular(Rng& r, int n);
// Diagonal Smith form d_1 | ... | d_k with product <= max_det.
IntMat random_snf(Rng& r, int k, long max_det);

// Valid standard instance holding a point of [0, u] in the lattice part; about
// one in five draws perturbs g, so some instances are infeasible.
StandardInstance random_standard(Rng& r, int n, int m, long max_det, long umax, bool bounded, long cmax = 5);
// Full column rank (n+m) x n system with entries in [-amax, amax] around an integer point.
CanonicalInstance random_canonical(Rng& r, int n, int m, long amax, bool bounded, long cmax = 3);
GroupInstance random_group(Rng& r, long max_order, int n, long cmax, bool cyclic);

struct GenSpec {
  std::string kind = "bilp-sf";  // ilp-cf, bilp-cf, ilp-sf, bilp-sf, group, knapsack
  int n = 4;
  int m = 1;
  long delta_max = 0;  // 0 = no limit on Delta(A)
  long amax = 4;
  long det_max = 8;
  long umax = 6;
  long cmax = 5;
};
// Deterministic in (spec, seed); resamples until Delta(A) <= delta_max.
InstanceFile generate(const GenSpec& spec, uint64_t seed);

}  // namespace dilp
