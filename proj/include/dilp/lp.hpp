#pragma once

#include <vector>

#include "dilp/problem.hpp"

namespace dilp {

struct LpOutcome {
  Status status = Status::Infeasible;
  RatVec vertex;
  std::vector<int> base;   // sorted row indices (canonical) or basic columns (standard)
  std::vector<bool> upper;  // canonical only: base row tight at b_r (true) or b_l (false)
  Rat objective = 0;
};

// min c x  s.t.  A x = b, x >= 0.  Two-phase simplex with Bland's rule.
struct StdLpResult {
  Status status = Status::Infeasible;
  RatVec x;
  std::vector<int> basis;  // basic column per surviving row
  Rat objective = 0;
};
StdLpResult simplex_standard(const RatMat& A, const RatVec& b, const RatVec& c);

LpOutcome solve_lp(const CanonicalInstance& I);  // maximization
LpOutcome solve_lp(const StandardInstance& I);   // minimization, drops the group constraint
bool lp_feasible(const CanonicalInstance& I);

// Every vertex of {b_l <= A x <= b_r}, each with one defining base; lexicographic order.
struct LpVertex {
  RatVec x;
  std::vector<int> base;
};
std::vector<LpVertex> enumerate_vertices(const CanonicalInstance& I);

}  // namespace dilp
