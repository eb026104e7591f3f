#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dilp/matrix.hpp"

namespace dilp {

// max c^T x  s.t.  b_l <= A x <= b_r, x integer.  b_l may hold -inf (ILP-CF when all are).
struct CanonicalInstance {
  IntMat A;
  ExtVec b_l;
  IntVec b_r;
  IntVec c;

  int n() const { return A.cols(); }
  int rows() const { return A.rows(); }
  int m() const { return A.rows() - A.cols(); }
  bool bounded() const;  // every b_l finite
};

// min c^T x  s.t.  A x = b, G x = g (mod S), 0 <= x <= u, x integer.
struct StandardInstance {
  IntMat A;  // m x n, possibly zero rows
  IntMat G;  // (n-m) x n
  IntMat S;  // (n-m) x (n-m) diagonal, Smith form
  IntVec b;
  IntVec g;
  ExtVec u;
  IntVec c;

  int n() const { return A.cols(); }
  int m() const { return A.rows(); }
  bool bounded() const;    // every u finite
  bool unbounded() const;  // every u infinite
  Int det_S() const;
  IntVec moduli() const;
};

struct GroupSpec {
  IntVec moduli;  // d_1 | d_2 | ... ; entries >= 1
  Int order() const;
  IntVec reduce(const IntVec& e) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec scale(const IntVec& a, const Int& k) const;
  bool is_zero(const IntVec& e) const;
  bool cyclic() const;  // at most one factor above 1
};

struct GroupInstance {
  GroupSpec group;
  std::vector<IntVec> gens;
  IntVec target;
  IntVec c;
  ExtVec u;  // empty or all +inf = unbounded variant

  int n() const { return static_cast<int>(gens.size()); }
  bool unbounded() const;
};

enum class Status { Optimal, Infeasible, Unbounded };
const char* to_string(Status s);

struct SolveOutcome {
  Status status = Status::Infeasible;
  IntVec x;
  Int value = 0;
  IntVec ray;  // nonempty for Unbounded when a certificate is known
  std::vector<std::pair<std::string, std::string>> info;
  void note(const std::string& k, const std::string& v) { info.emplace_back(k, v); }
};

std::vector<std::string> validate(const CanonicalInstance& I);
std::vector<std::string> validate(const StandardInstance& I);
std::vector<std::string> validate(const GroupInstance& I);
void require_valid(const CanonicalInstance& I);
void require_valid(const StandardInstance& I);
void require_valid(const GroupInstance& I);

bool feasible(const CanonicalInstance& I, const IntVec& x);
bool feasible(const StandardInstance& I, const IntVec& x);
bool feasible(const GroupInstance& I, const IntVec& x);
Int objective(const CanonicalInstance& I, const IntVec& x);
Int objective(const StandardInstance& I, const IntVec& x);
Int objective(const GroupInstance& I, const IntVec& x);

struct NormalizationRecord {
  std::vector<int> base;      // original row indices of B, as given
  IntMat U;                   // x' = U x + t
  IntMat Uinv;
  IntVec t;
  std::vector<int> row_perm;  // normalized row i is original row row_perm[i]
  std::vector<int> col_perm;  // variable permutation applied after the HNF step
  Int delta = 0;              // |det A_B|
  int s = 0;                  // unit diagonal entries
  int t_diag = 0;             // non-unit diagonal entries
};

std::pair<CanonicalInstance, NormalizationRecord> normalize(const CanonicalInstance& I, const std::vector<int>& base);
CanonicalInstance apply_normalization(const NormalizationRecord& rec, const CanonicalInstance& I);
enum class Direction { Forward, Inverse };
IntVec transform_point(const NormalizationRecord& rec, const IntVec& x, Direction dir);
RatVec transform_point(const NormalizationRecord& rec, const RatVec& x, Direction dir);
std::vector<std::string> check_normalized(const CanonicalInstance& I, int n_base = -1);

}  // namespace dilp
