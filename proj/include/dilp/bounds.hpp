#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dilp/problem.hpp"

namespace dilp {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Int& v);
Real log2r(const Real& x);
// c = log2 sqrt(2e^2 / (e - log2 e)) + 1/2 and c2 = log2 sqrt(2e)
Real sparsity_constant();
Real sparsity_log_offset();

// c m + log2 D + (m/2) log2(log2 sqrt(2e) + log2(D)/m); m = 0 gives the limit log2 D.
Real sparsity_bound(int m, const Int& Delta);
std::pair<Real, Real> rough_sparsity_coeffs(const Real& c1, const Real& c2, const Real& k);
// Same tangent-line bound without relaxing k / ((k + c2) ln 4) to 1 / ln 4; this one
// always dominates the closed form, the relaxed one can fall below it for small k.
std::pair<Real, Real> rough_sparsity_coeffs_tangent(const Real& c1, const Real& c2, const Real& k);

Int proximity_bound_bounded(int m, const Int& Delta, const Int& detS);
Int proximity_bound_unbounded(int m, int s, const Int& Delta);

enum class ChiMode { Delta, Delta1, DiffCol };
ChiMode parse_chi_mode(const std::string& s);
Int chi_bound(int m, const Int& Delta, const Int& Delta1, const Int& detS, ChiMode mode);

Int binomial_exact(long n, long k);  // 0 outside 0 <= k <= n
Int mcmullen_xi(int n, int k);

enum class Form { CF, SF };
Real vertex_count_bound(int n, int m, int s, const Int& Delta, Form form);

struct BoundEntry {
  std::string name;
  std::string inputs;
  std::string lhs;  // empty for pure formula values
  std::string rhs;
  bool pass = true;
  long violations = 0;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;
  bool all_pass() const;
  long violations() const;
  std::string table() const;
  const BoundEntry* find(const std::string& name) const;
};

struct BoundInputs {
  int m = 1;
  Int Delta = 1;
  Int Delta1 = 1;
  Int detS = 1;
  int s = -1;  // -1: ceil of the sparsity closed form
  int n = 1;
};
BoundsReport formula_report(const BoundInputs& in);

// Checks the slack sparsity bounds on every hull vertex and the proximity bounds
// between the LP optimum and the nearest of the supplied optimal integer points.
BoundsReport verify_instance_bounds(const CanonicalInstance& I, const std::vector<IntVec>& hull,
                                    const std::vector<IntVec>& optimal);

}  // namespace dilp
