#pragma once

#include <functional>
#include <vector>

#include "dilp/matrix.hpp"

namespace dilp {

struct HnfResult {
  IntMat T;  // A = T * Q
  IntMat Q;  // unimodular
};

struct SnfResult {
  IntMat S;     // n x n diagonal, S_ii | S_(i+1)(i+1)
  IntMat P;     // A = P * [S; 0] * Q
  IntMat Q;
  IntMat Pinv;  // Pinv * A * Qinv = [S; 0]
  IntMat Qinv;
  IntVec diagonal() const;
  Int det() const;  // product of the diagonal
};

struct MinorStats {
  int order = 0;
  Int delta = 0;      // max |minor|
  Int delta_gcd = 0;  // gcd of nonzero minors
  Int delta_lcm = 0;  // lcm of nonzero minors
  long nonzero = 0;
  bool degenerate = true;  // every minor of this order vanishes
};

Int det(const IntMat& M);
Rat det(const RatMat& M);
IntMat adjugate(const IntMat& M);
int rank(const IntMat& A);
int rank(const RatMat& A);
RatMat inverse(const RatMat& M);
RatMat inverse(const IntMat& M);
IntMat unimodular_inverse(const IntMat& U);
RatVec solve_square(const IntMat& A, const RatVec& b);

HnfResult hnf(const IntMat& A);
SnfResult snf(const IntMat& A);

// Column echelon form A * U = [L | 0] for any rank; returns U and the rank.
struct EchelonResult {
  IntMat L;
  IntMat U;
  int rank = 0;
};
EchelonResult column_echelon(const IntMat& A);

// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}.
IntMat integer_kernel(const IntMat& A);

MinorStats minor_stats(const IntMat& A, int k);
Int delta(const IntMat& A);      // max |maximal minor|, order = min(rows, cols)
Int delta_gcd(const IntMat& A);  // gcd of maximal minors

// Calls f(idx) for every k-subset of {0..n-1} in lexicographic order; stops when f returns false.
void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f);
double binomial(int n, int k);

std::vector<IntVec> enumerate_parallelepiped(const IntMat& A, const RatVec& p, const Rat& gamma);

enum class BaseMode { Exact, Greedy, Auto };
struct BaseSelection {
  std::vector<int> rows;  // sorted
  Int abs_det = 0;
  bool exact = false;
};
BaseSelection max_det_submatrix(const IntMat& A, BaseMode mode = BaseMode::Auto);

}  // namespace dilp
