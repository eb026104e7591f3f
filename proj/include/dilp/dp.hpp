#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dilp/problem.hpp"

namespace dilp {

enum class BilpVariant { Binarized, Queue };
BilpVariant parse_bilp_variant(const std::string& s);
const char* to_string(BilpVariant v);

struct DpStats {
  long layers = 0;
  long max_layer_rhs = 0;  // distinct b' in the largest layer
  long states = 0;         // total stored states over all layers
  Int layer_bound = 0;     // (2 H + 1)^m * Delta(A)
  long budget = 0;         // H = min(chi + m, largest l1 norm the box allows)
};

// Bounded standard form. Recentres on an optimal LP vertex x* and searches
// y = x - floor(x*) with |y|_1 <= chi + m (binarized) or with every suffix sum
// A y_{k..n} inside the corresponding parallelepiped (queue). Ties go to the
// lexicographically smallest x.
SolveOutcome solve_bilp_sf(const StandardInstance& I, const Int& chi, BilpVariant variant,
                           DpStats* stats = nullptr);

// r_i = min_{t in [lower, upper]} values[(i - t) mod l] + cost * t
std::vector<int64_t> sliding_min_cycle(const std::vector<int64_t>& values, int64_t cost, int64_t lower,
                                       int64_t upper);
inline std::vector<int64_t> sliding_min_cycle(const std::vector<int64_t>& values, int64_t cost,
                                              int64_t capacity) {
  return sliding_min_cycle(values, cost, 0, capacity);
}
// r_i = min_{t in [lower, upper], 0 <= i - t < l} values[i - t] + cost * t
std::vector<int64_t> sliding_min_path(const std::vector<int64_t>& values, int64_t cost, int64_t lower,
                                      int64_t upper);

// t = offset + sum of a 0/1 choice of weights; every t in [alpha, beta] is reached and
// every choice stays inside. The choice is unique iff beta - alpha + 1 is a power of two.
struct BinaryDecomposition {
  Int offset = 0;
  IntVec weights;
};
BinaryDecomposition binary_decomposition(const Int& alpha, const Int& beta);

struct MuParams {
  std::vector<int> base;  // column indices of B
  Int det_base = 1;       // |det B|
  Rat kappa = 1;          // Delta / |det B|
  double eta_m = 0;       // 12 sqrt(m)
  Rat mu_proven = 0;      // ceil(kappa * eta_m)
  Rat herdisc = 0;        // herdisc(B^{-1} A), when computed
  bool exact = false;     // herdisc was computed
  Rat mu = 0;             // value used: herdisc when exact, mu_proven otherwise
  Rat radius() const { return 4 * mu; }
};
constexpr int kHerdiscMaxColumns = 14;
MuParams compute_mu(const IntMat& A, bool allow_exact = true);
// min over z in {-1/2, 1/2}^J of |M_J z|_inf, maximized over column subsets J.
Rat hereditary_discrepancy(const RatMat& M);

struct UnboundedCheck {
  bool unbounded = false;
  IntVec ray;     // A r = 0, G r = 0 (mod S), r >= 0, c r < 0
  Int radius = 0;  // (m + 1) * sigma * Delta
};
// Negative cost entries are allowed here; everything else must be well shaped.
UnboundedCheck detect_unbounded(const StandardInstance& I);

struct UnboundedTrace {
  int rho = 0;
  bool shifted = false;
  MuParams mu;
  // level i: (b', g' code) -> DP value
  std::vector<std::map<std::pair<std::vector<int64_t>, int64_t>, int64_t>> levels;
};
SolveOutcome solve_ilp_sf_unbounded(const StandardInstance& I, UnboundedTrace* trace = nullptr,
                                    bool allow_exact_mu = true);

}  // namespace dilp
