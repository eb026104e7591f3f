#pragma once

#include <optional>
#include <vector>

#include "dilp/problem.hpp"

namespace dilp {

// Mixed-radix encoding of a finite Abelian group Z_{d_1} x ... x Z_{d_r}.
class GroupCodec {
 public:
  explicit GroupCodec(const GroupSpec& g);
  int64_t order() const { return order_; }
  int64_t encode(const IntVec& e) const;
  IntVec decode(int64_t c) const;
  int64_t add(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;

 private:
  std::vector<int64_t> mod_;
  int64_t order_ = 1;
};

SolveOutcome gomory_solve(const GroupInstance& I);
SolveOutcome cyclic_minplus_solve(const GroupInstance& I);

// c_k = min_{i+j=k} a_i + b_j with +inf absorbing.
std::vector<ExtInt> minplus_convolution(const std::vector<ExtInt>& a, const std::vector<ExtInt>& b);
std::vector<int64_t> minplus_convolution(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                         std::vector<int>* arg = nullptr);
constexpr int64_t kInf = INT64_MAX / 4;

struct Certificate {
  bool pass = false;
  Int product = 1;
};
Certificate vertex_certificate(const IntVec& z, const Int& order);

// k such that p is k-independent: rank of {x integer : sum x_i g_i = 0, 0 <= x <= p}.
int independence_rank(const GroupInstance& I, const IntVec& p);
std::optional<std::vector<int>> face_support_witness(const IntVec& p, int d, const GroupInstance& I);

}  // namespace dilp
