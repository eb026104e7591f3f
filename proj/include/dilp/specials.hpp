#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilp/bounds.hpp"
#include "dilp/problem.hpp"

namespace dilp {

// Sufficient condition for locality at the vertex v = A_B^{-1} b_B of an ILP-CF
// instance: b_N - A_N v >= (Delta - 1) on every non-base row.
struct LocalityVerdict {
  bool pass = false;
  Int Delta = 0;  // Delta(A), maximal n x n minor
  Int delta_base = 0;
  RatVec v;
  RatVec slack;  // b_N - A_N v, in row order of N
  std::vector<int> nonbase;
};
LocalityVerdict locality_test(const CanonicalInstance& I, const std::vector<int>& base);

struct LocalOutcome {
  SolveOutcome outcome;  // of the corner problem A_B x <= b_B
  RatVec v;
  IntVec y;         // b_B - A_B z
  bool feasible = false;  // z satisfies every row of the full system
  int face_dim = -1;      // dimension of the smallest face of P holding z, when feasible
  BoundsReport report;
};
// Corner problem through cf_to_sf and the group solver; status Unbounded when c is not in cone(A_B^T).
LocalOutcome solve_local(const CanonicalInstance& I, const std::vector<int>& base);

struct SimplexOutcome {
  bool feasible = false;
  bool empty_relaxation = false;  // P(A, b) itself is empty
  IntVec point;
  std::vector<int> base;  // rows of the corner, |det| minimal
  Int delta_base = 0;
  int face_dim = -1;
  BoundsReport report;
};
// A is (n+1) x n of rank n and {A x <= b} is bounded.
SimplexOutcome simplex_feasibility(const IntMat& A, const IntVec& b);

struct SubsetSumOutcome {
  bool feasible = false;
  IntVec x;
  int pivot = 0;        // index of w_min
  Int group_value = 0;  // min sum_{i != pivot} w_i x_i over the residue class of W
  std::vector<std::pair<std::string, std::string>> info;
};
// w^T x = W, x >= 0 integer.
SubsetSumOutcome subset_sum_unbounded(const IntVec& w, const Int& W);

enum class KnapsackPath { Auto, Group, Capacity };
// max c^T x  s.t.  w^T x <= W, x >= 0 integer.  Auto takes the group path when W >= w_opt^2.
SolveOutcome knapsack_unbounded(const IntVec& w, const IntVec& c, const Int& W,
                                KnapsackPath path = KnapsackPath::Auto);
int knapsack_pivot(const IntVec& w, const IntVec& c);  // argmax c_i / w_i, smallest index

struct SamplerRow {
  long t = 0;
  long samples = 0;
  long feasible = 0;
  long local = 0;
  double fraction() const { return feasible ? static_cast<double>(local) / feasible : 0.0; }
};
// b uniform in [-t, t]^{rows}; local means every feasible base passes locality_test.
std::vector<SamplerRow> locality_sampler(const IntMat& A, const std::vector<long>& t_grid, long samples,
                                         uint64_t seed);
std::string sampler_table(const std::vector<SamplerRow>& rows);

}  // namespace dilp
