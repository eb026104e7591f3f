#include <doctest.h>

#include "dilp/lp.hpp"
#include "dilp/oracle.hpp"
#include "dilp/specials.hpp"
#include "helpers.hpp"

using namespace dilp;
using namespace testutil;

namespace {

CanonicalInstance ilp_cf(const IntMat& A, const IntVec& b, const IntVec& c) {
  CanonicalInstance I;
  I.A = A;
  I.b_l.assign(A.rows(), ExtInt::neg_inf());
  I.b_r = b;
  I.c = c;
  return I;
}

Box cube(int n, long r) {
  Box B;
  B.lo.assign(n, Int(-r));
  B.hi.assign(n, Int(r));
  return B;
}

// max c x over {A_B x <= b_B} by enumeration around v; the optimum is within
// n * Delta_B of v along every coordinate for a pointed corner.
SolveOutcome corner_oracle(const IntMat& AB, const IntVec& bB, const IntVec& c, const RatVec& v) {
  const int n = AB.cols();
  long r = 2 + n * to_i64(abs(det(AB)));
  Box B;
  for (int j = 0; j < n; ++j) {
    B.lo.push_back(rat_floor(v[j]) - r);
    B.hi.push_back(rat_ceil(v[j]) + r);
  }
  return brute_force_ilp(ilp_cf(AB, bB, c), B);
}

}  // namespace

TEST_SUITE("specials") {
  TEST_CASE("locality test examples") {
    // m = 0
    auto I0 = ilp_cf(IntMat{{2, 1}, {0, 3}}, ivec({4, 5}), ivec({1, 1}));
    auto v0 = locality_test(I0, {0, 1});
    CHECK(v0.pass);
    CHECK(v0.nonbase.empty());
    CHECK(v0.delta_base == 6);

    // Delta = 1: pass iff v feasible, and infeasible v is a base error
    auto I1 = ilp_cf(IntMat{{1, 0}, {0, 1}, {1, 1}}, ivec({2, 3, 5}), ivec({1, 1}));
    CHECK(locality_test(I1, {0, 1}).pass);
    auto I1b = ilp_cf(IntMat{{1, 0}, {0, 1}, {1, 1}}, ivec({2, 3, 4}), ivec({1, 1}));
    CHECK_THROWS_AS(locality_test(I1b, {0, 1}), Error);

    // boundary: Delta = 3, slack exactly 2 passes, slack 1 fails
    IntMat A{{1, 0}, {0, 1}, {1, 3}};
    CHECK(delta(A) == 3);
    auto Ib = ilp_cf(A, ivec({0, 0, 2}), ivec({1, 1}));
    auto vb = locality_test(Ib, {0, 1});
    REQUIRE(vb.slack.size() == 1);
    CHECK(vb.slack[0] == 2);
    CHECK(vb.pass);
    Ib.b_r[2] = 1;
    CHECK_FALSE(locality_test(Ib, {0, 1}).pass);

    try {
      locality_test(ilp_cf(IntMat{{1, 1}, {2, 2}, {1, 0}}, ivec({1, 2, 0}), ivec({1, 1})), {0, 1});
      FAIL("singular base accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Base);
    }
    auto bl = I1;
    bl.b_l[0] = Int(-5);
    try {
      locality_test(bl, {0, 1});
      FAIL("bounded instance accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }

  TEST_CASE("solve_local examples") {
    // unimodular base: z = v
    auto I = ilp_cf(IntMat{{1, 0}, {1, 1}, {0, 1}}, ivec({3, 5, 4}), ivec({2, 1}));
    auto L = solve_local(I, {0, 1});
    REQUIRE(L.outcome.status == Status::Optimal);
    CHECK(L.outcome.x == ivec({3, 2}));
    CHECK(L.y == ivec({0, 0}));
    CHECK(L.report.all_pass());

    IntMat AB{{2, 0}, {1, 3}};
    auto K = ilp_cf(AB, ivec({1, 2}), ivec({1, 1}));
    auto LK = solve_local(K, {0, 1});
    REQUIRE(LK.outcome.status == Status::Optimal);
    auto bf = corner_oracle(AB, ivec({1, 2}), ivec({1, 1}), LK.v);
    CHECK(LK.outcome.value == bf.value);
    CHECK(LK.report.all_pass());

    // b_B = A_B p
    IntVec p = ivec({4, -3});
    auto P = ilp_cf(AB, AB * p, ivec({1, 1}));
    auto LP = solve_local(P, {0, 1});
    CHECK(LP.outcome.x == p);
    CHECK(LP.y == ivec({0, 0}));

    // c outside the cone of the base rows
    auto U = ilp_cf(AB, ivec({1, 2}), ivec({-1, 0}));
    CHECK(solve_local(U, {0, 1}).outcome.status == Status::Unbounded);
  }

  TEST_CASE("local optimum is global when the test passes") {
    Rng rng(5150);
    int checked = 0, passed = 0;
    for (int it = 0; it < 250; ++it) {
      const int n = rng.uniform(1, 2), rows = n + rng.uniform(0, 2);
      IntMat A = random_full_rank(rng, rows, n, -3, 3);
      IntVec x0(n);
      for (auto& v : x0) v = rng.uniform(-2, 2);
      IntVec b = A * x0;
      for (auto& v : b) v += rng.uniform(0, 6);
      IntVec c(n);
      for (auto& v : c) v = rng.uniform(-3, 3);
      auto I = ilp_cf(A, b, c);
      auto lp = solve_lp(I);
      if (lp.status != Status::Optimal) continue;
      if (rank(A.select_rows(lp.base)) != n || static_cast<int>(lp.base.size()) != n) continue;
      auto lv = locality_test(I, lp.base);
      auto L = solve_local(I, lp.base);
      REQUIRE(L.outcome.status == Status::Optimal);
      CHECK(L.report.find("non-base shift linf")->pass);
      for (auto& e : L.report.entries) CHECK_MESSAGE(e.pass, e.name, " ", e.lhs, " ", e.rhs);
      ++checked;
      if (!lv.pass) continue;
      ++passed;
      CHECK(L.feasible);
      auto bf = brute_force_ilp(I, cube(n, 40));
      REQUIRE(bf.status == Status::Optimal);
      CHECK(L.outcome.value == bf.value);
    }
    CHECK(checked > 100);
    CHECK(passed > 20);
  }

  TEST_CASE("simplex feasibility examples") {
    // x >= 0, y >= 0, x + y <= 3 contains the origin
    IntMat T{{-1, 0}, {0, -1}, {1, 1}};
    auto s0 = simplex_feasibility(T, ivec({0, 0, 3}));
    CHECK(s0.feasible);
    CHECK(s0.report.all_pass());

    IntMat E{{-2, 0}, {0, -2}, {2, 2}};
    auto s1 = simplex_feasibility(E, ivec({-1, -1, 3}));
    CHECK_FALSE(s1.feasible);
    CHECK_FALSE(s1.empty_relaxation);
    CHECK(brute_force_ilp(ilp_cf(E, ivec({-1, -1, 3}), ivec({0, 0})), cube(2, 5)).status == Status::Infeasible);

    auto s2 = simplex_feasibility(E, ivec({-1, -1, 1}));
    CHECK_FALSE(s2.feasible);
    CHECK(s2.empty_relaxation);

    try {
      simplex_feasibility(IntMat{{1, 0}, {0, 1}, {1, 1}}, ivec({1, 1, 1}));
      FAIL("unbounded accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }

  TEST_CASE("simplex feasibility matches enumeration") {
    Rng rng(1717);
    int done = 0, feas = 0;
    while (done < 150) {
      const int n = rng.uniform(2, 3);
      IntMat B = random_full_rank(rng, n, n, -3, 3);
      // last row = -(positive combination of the others)
      IntVec lam(n);
      for (auto& v : lam) v = rng.uniform(1, 2);
      IntMat A(n + 1, n);
      for (int i = 0; i < n; ++i) A.set_row(i, B.row(i));
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s -= lam[i] * B(i, j);
        A(n, j) = s;
      }
      if (delta(A) > 6) continue;
      IntVec b(n + 1);
      for (auto& v : b) v = rng.uniform(-4, 4);
      auto I = ilp_cf(A, b, IntVec(n, Int(0)));
      if (!lp_feasible(I)) continue;
      auto s = simplex_feasibility(A, b);
      auto bf = brute_force_ilp(I, cube(n, 30));
      CHECK(s.feasible == (bf.status == Status::Optimal));
      if (s.feasible) {
        ++feas;
        CHECK(feasible(I, s.point));
        for (auto& e : s.report.entries) CHECK_MESSAGE(e.pass, e.name, " ", e.lhs, " ", e.rhs);
      }
      ++done;
    }
    CHECK(feas > 20);
    CHECK(feas < 150);
  }

  TEST_CASE("subset sum examples") {
    CHECK_FALSE(subset_sum_unbounded(ivec({3, 5}), 7).feasible);
    auto f = subset_sum_unbounded(ivec({2, 3}), 7);
    REQUIRE(f.feasible);
    CHECK(dot(ivec({2, 3}), f.x) == 7);
    auto z = subset_sum_unbounded(ivec({4, 6}), 0);
    CHECK(z.feasible);
    CHECK(z.x == ivec({0, 0}));
    CHECK(subset_sum_unbounded(ivec({5}), 15).x == ivec({3}));
    CHECK_THROWS_AS(subset_sum_unbounded(ivec({2, 0}), 3), Error);
  }

  TEST_CASE("subset sum matches the capacity oracle") {
    Rng rng(808);
    for (int it = 0; it < 400; ++it) {
      const int n = rng.uniform(1, 4);
      IntVec w(n);
      for (auto& v : w) v = rng.uniform(1, 30);
      const long W = rng.uniform(0, 400);
      auto s = subset_sum_unbounded(w, W);
      REQUIRE(s.feasible == subset_sum_oracle(w, W));
      if (!s.feasible) continue;
      CHECK(dot(w, s.x) == W);
      for (auto& v : s.x) CHECK(v >= 0);
      // at most 1 + log2 w_min nonzero entries
      Int p = 1;
      for (long k = 1; k < l0(s.x); ++k) p *= 2;
      CHECK(p <= w[s.pivot]);
    }
  }

  TEST_CASE("knapsack examples") {
    auto one = knapsack_unbounded(ivec({3}), ivec({5}), 10);
    CHECK(one.value == 15);
    CHECK(one.x == ivec({3}));
    auto g = knapsack_unbounded(ivec({2, 3}), ivec({3, 5}), 100);
    CHECK(g.value == knapsack_capacity_oracle(ivec({2, 3}), ivec({3, 5}), 100));
    bool group = false;
    for (auto& [k, v] : g.info) group |= k == "path" && v.rfind("group", 0) == 0;
    CHECK(group);
    auto small = knapsack_unbounded(ivec({4, 7}), ivec({1, 2}), 3);
    CHECK(small.value == 0);
    CHECK(small.x == ivec({0, 0}));
    CHECK(knapsack_pivot(ivec({2, 4, 3}), ivec({3, 6, 2})) == 0);
    // group witness with x_j < 0 falls back to the capacity DP
    auto fb = knapsack_unbounded(ivec({3, 50}), ivec({6, 99}), 11, KnapsackPath::Group);
    CHECK(fb.value == knapsack_capacity_oracle(ivec({3, 50}), ivec({6, 99}), 11));
  }

  TEST_CASE("knapsack paths agree with the capacity oracle") {
    Rng rng(2024);
    int group_cases = 0;
    for (int it = 0; it < 500; ++it) {
      const int n = rng.uniform(1, 5);
      IntVec w(n), c(n);
      for (auto& v : w) v = rng.uniform(1, 30);
      for (auto& v : c) v = rng.uniform(1, 40);
      const int j = knapsack_pivot(w, c);
      long W = rng.coin() ? rng.uniform(0, 300) : to_i64(w[j] * w[j]) + rng.uniform(0, 500);
      Int want = knapsack_capacity_oracle(w, c, W);
      auto a = knapsack_unbounded(w, c, W);
      auto gp = knapsack_unbounded(w, c, W, KnapsackPath::Group);
      auto cp = knapsack_unbounded(w, c, W, KnapsackPath::Capacity);
      CHECK(a.value == want);
      CHECK(gp.value == want);
      CHECK(cp.value == want);
      for (auto* o : {&a, &gp, &cp}) {
        CHECK(dot(w, o->x) <= W);
        CHECK(dot(c, o->x) == o->value);
      }
      if (W >= w[j] * w[j]) {
        ++group_cases;
        for (auto& [k, v] : gp.info) CHECK(k != "group_witness");
      }
    }
    CHECK(group_cases > 150);
  }

  TEST_CASE("locality sampler") {
    auto id = locality_sampler(IntMat::identity(3), {5, 50}, 200, 7);
    for (auto& r : id) CHECK(r.local == r.feasible);
    auto sq = locality_sampler(IntMat{{2, 1}, {1, 3}}, {10, 100}, 100, 7);
    for (auto& r : sq) {
      CHECK(r.feasible == r.samples);
      CHECK(r.local == r.feasible);
    }
    IntMat A{{1, 0}, {0, 1}, {-1, -3}};
    CHECK(delta(A) == 3);
    auto rows = locality_sampler(A, {10, 100, 1000}, 1500, 99);
    REQUIRE(rows.size() == 3);
    for (auto& r : rows) CHECK(r.feasible > 0);
    CHECK(rows[0].fraction() <= rows[1].fraction());
    CHECK(rows[1].fraction() <= rows[2].fraction());
    auto again = locality_sampler(A, {10, 100, 1000}, 1500, 99);
    for (size_t k = 0; k < rows.size(); ++k) {
      CHECK(again[k].feasible == rows[k].feasible);
      CHECK(again[k].local == rows[k].local);
    }
    CHECK(sampler_table(rows).find("fraction") != std::string::npos);
  }
}
