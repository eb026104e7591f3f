#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dilp/problem.hpp"

namespace dilp {

// target = M * source + q;  source = Minv * target + qinv;
// objective(source) = alpha * objective(target) + beta.
struct ReductionMap {
  std::string direction;
  RatMat M;
  RatVec q;
  RatMat Minv;
  RatVec qinv;
  Rat alpha = 1, beta = 0;
  std::vector<std::pair<std::string, std::string>> meta;

  IntVec forward(const IntVec& source) const;
  IntVec backward(const IntVec& target) const;
  Rat source_objective(const Int& target_value) const { return alpha * Rat(target_value) + beta; }
};

// BILP mode when every b_l is finite, ILP mode when every b_l is -inf (rows are
// negated so the slack is b_r - A x); the ILP mode picks an optimal LP base.
std::pair<StandardInstance, ReductionMap> cf_to_sf(const CanonicalInstance& src);

std::pair<CanonicalInstance, ReductionMap> sf_to_cf(const StandardInstance& src);

struct ClassicReduction {
  bool infeasible = false;  // b' is not integral
  StandardInstance inst;
  ReductionMap map;
};
// max c x  s.t.  A x = b, 0 <= x <= u  (A of full row rank)
ClassicReduction classic_to_generalized(const IntMat& A, const IntVec& b, const IntVec& c, const ExtVec& u);

// A standard instance without equality rows is a group problem on Z^n / S Z^n.
GroupInstance standard_to_group(const StandardInstance& I);

}  // namespace dilp
