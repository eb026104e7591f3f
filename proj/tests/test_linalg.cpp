#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace dilp;
using namespace testutil;

TEST_SUITE("linalg") {

TEST_CASE("det small cases") {
  CHECK(det(IntMat::identity(3)) == 1);
  CHECK(det(IntMat{{2, 0}, {1, 3}}) == 6);
  CHECK(det(IntMat{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMat{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(IntMat(2, 3)), Error);
}

TEST_CASE("det agrees with cofactor expansion") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng.uniform(1, 5));
    IntMat M = random_matrix(rng, n, n, -5, 5);
    CHECK(det(M) == cofactor_det(M));
  }
}

TEST_CASE("adjugate") {
  CHECK(adjugate(IntMat::identity(3)) == IntMat::identity(3));
  CHECK(adjugate(IntMat{{2, 0}, {1, 3}}) == IntMat{{3, 0}, {-1, 2}});
  Rng rng(12);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    IntMat M = random_matrix(rng, n, n, -3, 3);
    IntMat P = M * adjugate(M);
    Int d = det(M);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(P(i, j) == (i == j ? d : Int(0)));
  }
  // singular input goes through cofactors
  IntMat S{{1, 2}, {2, 4}};
  CHECK(adjugate(S) == IntMat{{4, -2}, {-2, 1}});
}

static void check_hnf(const IntMat& A) {
  HnfResult h = hnf(A);
  const int n = A.cols();
  CHECK(h.T * h.Q == A);
  CHECK(abs(det(h.Q)) == 1);
  IntMat top = h.T.block(0, 0, n, n);
  if (det(A.block(0, 0, n, n)) != 0) {
    for (int i = 0; i < n; ++i) {
      CHECK(top(i, i) > 0);
      for (int j = 0; j < i; ++j) CHECK((top(i, j) >= 0 && top(i, j) < top(i, i)));
      for (int j = i + 1; j < n; ++j) CHECK(top(i, j) == 0);
    }
    CHECK(max_abs(h.T) <= delta(A));
  }
}

TEST_CASE("hnf examples") {
  HnfResult I = hnf(IntMat::identity(3));
  CHECK(I.T == IntMat::identity(3));
  CHECK(I.Q == IntMat::identity(3));
  HnfResult h = hnf(IntMat{{2, 1}, {0, 3}});
  CHECK(h.T * h.Q == IntMat{{2, 1}, {0, 3}});
  CHECK(abs(det(h.T)) == 6);
  CHECK(h.T(0, 1) == 0);
  HnfResult one = hnf(IntMat{{4}});
  CHECK(one.T == IntMat{{4}});
  CHECK(one.Q == IntMat{{1}});
  CHECK_THROWS_AS(hnf(IntMat{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("hnf properties on random matrices") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    int m = static_cast<int>(rng.uniform(0, 3));
    check_hnf(random_full_rank(rng, n + m, n, -6, 6));
  }
}

TEST_CASE("hnf is deterministic") {
  IntMat A{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}};
  HnfResult a = hnf(A), b = hnf(A);
  CHECK(a.T == b.T);
  CHECK(a.Q == b.Q);
}

static void check_snf(const IntMat& A) {
  SnfResult s = snf(A);
  const int n = A.cols(), r = A.rows();
  IntMat SS(r, n);
  for (int i = 0; i < n; ++i) SS(i, i) = s.S(i, i);
  CHECK(s.P * SS * s.Q == A);
  CHECK(s.Pinv * A * s.Qinv == SS);
  CHECK(s.P * s.Pinv == IntMat::identity(r));
  CHECK(s.Q * s.Qinv == IntMat::identity(n));
  CHECK(abs(det(s.P)) == 1);
  CHECK(abs(det(s.Q)) == 1);
  Int prod = 1;
  for (int k = 0; k < n; ++k) {
    CHECK(s.S(k, k) > 0);
    if (k + 1 < n) CHECK(s.S(k + 1, k + 1) % s.S(k, k) == 0);
    prod *= s.S(k, k);
    if (r + n <= 10) CHECK(minor_stats(A, k + 1).delta_gcd == prod);
  }
}

TEST_CASE("snf examples") {
  SnfResult a = snf(IntMat::identity(3));
  CHECK(a.S == IntMat::identity(3));
  CHECK(a.P == IntMat::identity(3));
  CHECK(a.Q == IntMat::identity(3));
  CHECK(snf(IntMat{{2, 0}, {0, 4}}).S == IntMat{{2, 0}, {0, 4}});
  CHECK(snf(IntMat{{2, 0}, {0, 3}}).S == IntMat{{1, 0}, {0, 6}});
  CHECK_THROWS_AS(snf(IntMat{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("snf properties on random matrices") {
  Rng rng(14);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    int m = static_cast<int>(rng.uniform(0, 3));
    check_snf(random_full_rank(rng, n + m, n, -9, 9));
  }
}

TEST_CASE("minor stats") {
  MinorStats s = minor_stats(IntMat{{1, 2}, {3, 4}, {5, 6}}, 2);
  CHECK(s.delta == 4);
  CHECK(s.delta_gcd == 2);
  CHECK(s.delta_lcm == 4);
  CHECK(s.nonzero == 3);
  MinorStats id = minor_stats(IntMat::identity(3), 3);
  CHECK(id.delta == 1);
  CHECK(id.delta_gcd == 1);
  IntMat U{{2, 1}, {1, 1}};
  MinorStats u = minor_stats(U, 2);
  CHECK((u.delta == 1 && u.delta_gcd == 1 && u.delta_lcm == 1));
  CHECK(minor_stats(IntMat{{1, 2}, {2, 4}}, 2).degenerate);
  CHECK_THROWS_AS(minor_stats(U, 3), Error);
}

TEST_CASE("enumerate parallelepiped examples") {
  auto box = enumerate_parallelepiped(IntMat::identity(2), RatVec{0, 0}, Rat(1));
  CHECK(box.size() == 9);
  auto one = enumerate_parallelepiped(IntMat{{2}}, RatVec{Rat(1, 2)}, Rat(1, 2));
  REQUIRE(one.size() == 3);
  CHECK(one[0] == ivec({0}));
  CHECK(one[2] == ivec({2}));
  auto d = enumerate_parallelepiped(IntMat{{2, 0}, {0, 3}}, RatVec{0, 0}, Rat(1, 2));
  CHECK(d.size() == 9);
  for (auto& y : d) CHECK((abs(y[0]) <= 1 && abs(y[1]) <= 1));
  CHECK_THROWS_AS(enumerate_parallelepiped(IntMat{{1, 1}, {1, 1}}, RatVec{0, 0}, Rat(1)), Error);
}

TEST_CASE("enumerate parallelepiped matches membership scan") {
  Rng rng(15);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(rng.uniform(1, 3));
    IntMat A = random_full_rank(rng, n, n, -3, 3);
    RatVec p(n);
    for (auto& x : p) x = Rat(rng.uniform(-4, 4), rng.uniform(1, 3));
    Rat gamma(rng.uniform(0, 4), 2);
    auto got = enumerate_parallelepiped(A, p, gamma);
    RatMat Ainv = inverse(A);
    // scan the bounding box of A * (p + [-gamma, gamma]^n)
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      Rat c = 0, rad = 0;
      for (int j = 0; j < n; ++j) {
        c += A(i, j) * p[j];
        rad += abs(A(i, j)) * gamma;
      }
      lo[i] = rat_floor(c - rad);
      hi[i] = rat_ceil(c + rad);
    }
    std::vector<IntVec> want;
    IntVec y = lo;
    for (;;) {
      RatVec x = Ainv * to_rat(y);
      bool in = true;
      for (int i = 0; i < n; ++i) in = in && abs(x[i] - p[i]) <= gamma;
      if (in) want.push_back(y);
      int i = n - 1;
      while (i >= 0 && y[i] == hi[i]) y[i] = lo[i], --i;
      if (i < 0) break;
      ++y[i];
    }
    CHECK(got == want);
    Rat bound = abs(Rat(det(A)));
    for (int i = 0; i < n; ++i) bound *= 2 * gamma + 1;
    CHECK(Rat(static_cast<long>(got.size())) <= bound);
  }
}

TEST_CASE("max det submatrix") {
  BaseSelection sq = max_det_submatrix(IntMat{{1, 2}, {3, 4}});
  CHECK(sq.rows == std::vector<int>{0, 1});
  BaseSelection col = max_det_submatrix(IntMat{{1}, {2}});
  CHECK(col.rows == std::vector<int>{1});
  CHECK(col.abs_det == 2);
  Rng rng(16);
  for (int it = 0; it < 30; ++it) {
    IntMat A = random_full_rank(rng, 5, 3, -4, 4);
    BaseSelection b = max_det_submatrix(A, BaseMode::Exact);
    CHECK(b.abs_det == minor_stats(A, 3).delta);
    CHECK(abs(det(A.select_rows(b.rows))) == b.abs_det);
    BaseSelection g = max_det_submatrix(A, BaseMode::Greedy);
    CHECK(g.abs_det > 0);
    CHECK(g.abs_det <= b.abs_det);
  }
}

TEST_CASE("integer kernel") {
  Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    int m = static_cast<int>(rng.uniform(1, 3));
    int n = m + static_cast<int>(rng.uniform(1, 3));
    IntMat A = random_full_rank(rng, m, n, -5, 5);
    IntMat K = integer_kernel(A);
    CHECK(K.cols() == n - m);
    CHECK(A * K == IntMat(m, n - m));
    // saturated: the kernel basis extends to a unimodular matrix, so its maximal minors are coprime
    CHECK(delta_gcd(K) == 1);
  }
}

TEST_CASE("perpendicular matrices identity") {
  Rng rng(18);
  for (int it = 0; it < 60; ++it) {
    int m = static_cast<int>(rng.uniform(1, 3));
    int n = m + static_cast<int>(rng.uniform(1, 3));
    IntMat A = random_full_rank(rng, n, m, -4, 4);  // n x m
    IntMat B = integer_kernel(A.transpose());      // n x (n-m), A^T B = 0
    if (rng.coin()) {
      for (int j = 0; j < B.cols(); ++j)
        for (int i = 0; i < n; ++i) B(i, j) *= (j + 2);
    }
    Int gA = delta_gcd(A), gB = delta_gcd(B);
    for_each_subset(n, m, [&](const std::vector<int>& C) {
      std::vector<int> N;
      for (int i = 0; i < n; ++i)
        if (std::find(C.begin(), C.end(), i) == C.end()) N.push_back(i);
      CHECK(gB * abs(det(A.select_rows(C))) == gA * abs(det(B.select_rows(N))));
      return true;
    });
  }
}

}  // TEST_SUITE
