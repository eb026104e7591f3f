#include <algorithm>
#include <set>

#include "doctest.h"
#include "dilp/group.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"
#include "dilp/oracle.hpp"
#include "dilp/reductions.hpp"
#include "helpers.hpp"

using namespace dilp;
using namespace testutil;

namespace {

std::string meta(const ReductionMap& R, const std::string& key) {
  for (auto& [k, v] : R.meta)
    if (k == key) return v;
  return "";
}

CanonicalInstance random_bilp_cf(Rng& r, int n, int m) {
  CanonicalInstance I;
  I.A = random_full_rank(r, n + m, n, -3, 3);
  for (int i = 0; i < n + m; ++i) {
    long lo = r.uniform(-4, 2);
    I.b_l.push_back(ExtInt(lo));
    I.b_r.emplace_back(lo + r.uniform(0, 4));
  }
  for (int j = 0; j < n; ++j) I.c.emplace_back(r.uniform(-3, 3));
  return I;
}

Box cbox(const CanonicalInstance& I) {
  auto b = vertex_box(I);
  if (b) return *b;
  return Box{IntVec(I.n(), Int(0)), IntVec(I.n(), Int(-1))};
}

std::vector<IntVec> points(const CanonicalInstance& I) {
  std::vector<IntVec> pts;
  auto box = vertex_box(I);
  if (box) enumerate_feasible(I, *box, [&](const IntVec& x) { pts.push_back(x); });
  return pts;
}

std::vector<IntVec> points(const StandardInstance& I, const Box& box) {
  std::vector<IntVec> pts;
  enumerate_feasible(I, box, [&](const IntVec& x) { pts.push_back(x); });
  return pts;
}

// forward maps the source set onto the target set, backward inverts it, objectives agree
template <class Src, class Dst>
void check_bijection(const Src& src, const std::vector<IntVec>& sp, const Dst& dst, const std::vector<IntVec>& tp,
                     const ReductionMap& R) {
  std::set<IntVec> image;
  for (auto& x : sp) {
    IntVec y = R.forward(x);
    CHECK(feasible(dst, y));
    CHECK(R.backward(y) == x);
    CHECK(R.source_objective(objective(dst, y)) == Rat(objective(src, x)));
    image.insert(y);
  }
  CHECK(image.size() == sp.size());
  CHECK(std::set<IntVec>(tp.begin(), tp.end()) == image);
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("cf_to_sf square systems") {
  CanonicalInstance I;
  I.A = IntMat{{2, 1}, {0, 3}};
  I.b_l = {ExtInt(-2), ExtInt(0)};
  I.b_r = ivec({3, 5});
  I.c = ivec({1, -1});
  auto [S, R] = cf_to_sf(I);
  CHECK(S.m() == 0);
  CHECK(S.A.rows() == 0);
  CHECK(S.det_S() == 6);
  CHECK(validate(S).empty());
  check_bijection(I, points(I), S, points(S, standard_box(S)), R);

  I.A = IntMat{{1, 1}, {0, 1}};
  auto [U, R2] = cf_to_sf(I);
  CHECK(U.det_S() == 1);
  check_bijection(I, points(I), U, points(U, standard_box(U)), R2);
}

TEST_CASE("cf_to_sf rejects mixed lower bounds") {
  CanonicalInstance I;
  I.A = IntMat{{1}, {-1}};
  I.b_l = {ExtInt(0), ExtInt::neg_inf()};
  I.b_r = ivec({3, 0});
  I.c = ivec({1});
  CHECK_THROWS_AS(cf_to_sf(I), Error);
}

TEST_CASE("cf_to_sf bijection and delta relations") {
  Rng rng(201);
  for (int it = 0; it < 120; ++it) {
    Rng r = rng.split(it);
    CanonicalInstance I = random_bilp_cf(r, static_cast<int>(r.uniform(1, 3)), static_cast<int>(r.uniform(0, 2)));
    auto [S, R] = cf_to_sf(I);
    REQUIRE(validate(S).empty());
    CHECK(meta(R, "annihilates") == "ok");
    CHECK(meta(R, "delta_relation") == "ok");
    CHECK(S.det_S() == delta_gcd(I.A));
    auto sp = points(I);
    auto tp = points(S, standard_box(S));
    check_bijection(I, sp, S, tp, R);
    SolveOutcome a = brute_force_ilp(I, cbox(I));
    SolveOutcome b = brute_force_ilp(S, standard_box(S));
    REQUIRE(a.status == b.status);
    if (a.status == Status::Optimal) CHECK(R.source_objective(b.value) == Rat(a.value));
  }
}

TEST_CASE("cf_to_sf in ILP mode solves a corner through the group problem") {
  CanonicalInstance I;
  I.A = IntMat{{2, 0}, {1, 3}};
  I.b_l = {ExtInt::neg_inf(), ExtInt::neg_inf()};
  I.b_r = ivec({1, 2});
  I.c = ivec({1, 1});
  auto [S, R] = cf_to_sf(I);
  REQUIRE(validate(S).empty());
  CHECK(S.unbounded());
  GroupInstance G = standard_to_group(S);
  SolveOutcome g = gomory_solve(G);
  REQUIRE(g.status == Status::Optimal);
  IntVec x = R.backward(g.x);
  CHECK(feasible(I, x));
  SolveOutcome b = brute_force_ilp(I, Box{ivec({-20, -20}), ivec({20, 20})});
  REQUIRE(b.status == Status::Optimal);
  CHECK(objective(I, x) == b.value);
  CHECK(R.source_objective(g.value) == Rat(b.value));
}

TEST_CASE("cf_to_sf in ILP mode on random instances") {
  Rng rng(202);
  int done = 0;
  for (int it = 0; it < 200 && done < 60; ++it) {
    Rng r = rng.split(it);
    int n = static_cast<int>(r.uniform(1, 3)), m = static_cast<int>(r.uniform(0, 2));
    CanonicalInstance I;
    I.A = random_full_rank(r, n + m, n, -3, 3);
    for (int i = 0; i < n + m; ++i) I.b_l.push_back(ExtInt::neg_inf()), I.b_r.emplace_back(r.uniform(-3, 6));
    for (int j = 0; j < n; ++j) I.c.emplace_back(r.uniform(-3, 3));
    LpOutcome lp = solve_lp(I);
    if (lp.status != Status::Optimal) {
      CHECK_THROWS_AS(cf_to_sf(I), Error);
      continue;
    }
    auto [S, R] = cf_to_sf(I);
    REQUIRE(validate(S).empty());
    Box box{IntVec(n, Int(-8)), IntVec(n, Int(8))};
    enumerate_feasible(I, box, [&](const IntVec& x) {
      IntVec y = R.forward(x);
      CHECK(feasible(S, y));
      CHECK(R.backward(y) == x);
      CHECK(R.source_objective(objective(S, y)) == Rat(objective(I, x)));
    });
    ++done;
  }
  CHECK(done == 60);
}

TEST_CASE("sf_to_cf examples") {
  // knapsack row through the classic embedding
  ClassicReduction cr = classic_to_generalized(IntMat{{2, 3, 5}}, ivec({11}), ivec({-1, -1, -1}),
                                               {ExtInt(4), ExtInt(4), ExtInt(4)});
  REQUIRE_FALSE(cr.infeasible);
  REQUIRE(validate(cr.inst).empty());
  auto [C, R] = sf_to_cf(cr.inst);
  CHECK(C.n() == 2);
  CHECK(C.rows() == 3);
  CHECK(cr.inst.A * C.A == IntMat(1, 2));
  CHECK(meta(R, "delta_relation") == "ok");
  check_bijection(cr.inst, points(cr.inst, standard_box(cr.inst)), C, points(C), R);

  // pure group problem
  StandardInstance P;
  P.A = IntMat(0, 2);
  P.G = IntMat{{1, 1}, {0, 1}};
  P.S = IntMat{{2, 0}, {0, 4}};
  P.b = {};
  P.g = ivec({1, 3});
  P.u = {ExtInt(5), ExtInt(5)};
  P.c = ivec({1, 2});
  REQUIRE(validate(P).empty());
  auto [Q, R2] = sf_to_cf(P);
  CHECK(Q.rows() == 2);
  CHECK(Q.n() == 2);
  CHECK(delta(Q.A) == 8);
  check_bijection(P, points(P, standard_box(P)), Q, points(Q), R2);
}

TEST_CASE("sf_to_cf without free variables evaluates directly") {
  StandardInstance P;
  P.A = IntMat{{1, 1}, {0, 1}};
  P.G = IntMat(0, 2);
  P.S = IntMat(0, 0);
  P.b = ivec({3, 1});
  P.g = {};
  P.u = {ExtInt(5), ExtInt(5)};
  P.c = ivec({2, 1});
  REQUIRE(validate(P).empty());
  auto [C, R] = sf_to_cf(P);
  CHECK(C.n() == 0);
  CHECK(feasible(C, IntVec{}));
  CHECK(R.backward(IntVec{}) == ivec({2, 1}));
  CHECK(R.source_objective(objective(C, IntVec{})) == 5);
}

TEST_CASE("round trip cf -> sf -> cf preserves optima") {
  Rng rng(203);
  for (int it = 0; it < 80; ++it) {
    Rng r = rng.split(it);
    CanonicalInstance I = random_bilp_cf(r, static_cast<int>(r.uniform(1, 3)), static_cast<int>(r.uniform(0, 2)));
    auto [S, R1] = cf_to_sf(I);
    if (S.n() == S.m()) continue;
    auto [C, R2] = sf_to_cf(S);
    CHECK(meta(R2, "annihilates") == "ok");
    std::string rel = meta(R2, "delta_relation");
    CHECK((rel == "ok" || rel == "skipped"));
    auto sp = points(S, standard_box(S));
    auto cp = points(C);
    check_bijection(S, sp, C, cp, R2);
    SolveOutcome a = brute_force_ilp(I, cbox(I));
    SolveOutcome c = brute_force_ilp(C, cbox(C));
    REQUIRE(a.status == c.status);
    if (a.status == Status::Optimal)
      CHECK(R1.source_objective(rat_floor(R2.source_objective(c.value))) == Rat(a.value));
  }
}

TEST_CASE("sf_to_cf on unbounded variables gives an ILP-CF") {
  ClassicReduction cr =
      classic_to_generalized(IntMat{{1, 1, 1}}, ivec({5}), ivec({1, 2, 0}), ExtVec(3, ExtInt::pos_inf()));
  REQUIRE_FALSE(cr.infeasible);
  REQUIRE(validate(cr.inst).empty());
  auto [C, R] = sf_to_cf(cr.inst);
  for (auto& v : C.b_l) CHECK(v.is_neg_inf());
  Box box{IntVec(3, Int(0)), IntVec(3, Int(5))};
  SolveOutcome t = brute_force_ilp(cr.inst, box);
  REQUIRE(t.status == Status::Optimal);
  CHECK(cr.map.source_objective(t.value) == 10);
  IntVec xc = R.forward(t.x);
  CHECK(feasible(C, xc));
  CHECK(R.backward(xc) == t.x);
}

TEST_CASE("classic_to_generalized examples") {
  ExtVec u(2, ExtInt(10));
  ClassicReduction bad = classic_to_generalized(IntMat{{2, 4}}, ivec({3}), ivec({0, 0}), u);
  CHECK(bad.infeasible);

  ClassicReduction ok = classic_to_generalized(IntMat{{2, 4}}, ivec({6}), ivec({0, 0}), u);
  REQUIRE_FALSE(ok.infeasible);
  REQUIRE(validate(ok.inst).empty());
  CHECK(abs(ok.inst.A(0, 0)) == 1);
  CHECK(abs(ok.inst.A(0, 1)) == 2);
  CHECK(ok.inst.det_S() == 1);
  // {x in [0,10]^2 : 2x1 + 4x2 = 6} = {(3,0), (1,1)}
  auto tp = points(ok.inst, standard_box(ok.inst));
  std::set<IntVec> back;
  for (auto& y : tp) back.insert(ok.map.backward(y));
  CHECK(back == std::set<IntVec>{ivec({3, 0}), ivec({1, 1})});
}

TEST_CASE("classic_to_generalized agrees with brute force") {
  Rng rng(204);
  for (int it = 0; it < 80; ++it) {
    Rng r = rng.split(it);
    int n = static_cast<int>(r.uniform(2, 4)), m = static_cast<int>(r.uniform(1, std::min(2, n - 1)));
    IntMat A = random_full_rank(r, m, n, -3, 3);
    IntVec x0(n), c(n);
    ExtVec u(n);
    for (int j = 0; j < n; ++j) {
      u[j] = ExtInt(r.uniform(1, 4));
      x0[j] = r.uniform(0, u[j].value().get_si());
      c[j] = r.uniform(-3, 3);
    }
    IntVec b = A * x0;
    if (r.coin(0.3)) b[0] += 1;
    ClassicReduction cr = classic_to_generalized(A, b, c, u);
    // source brute force: max c x over the box
    Int best = 0;
    bool any = false;
    Box box{IntVec(n, Int(0)), IntVec(n)};
    for (int j = 0; j < n; ++j) box.hi[j] = u[j].value();
    std::vector<IntVec> src;
    IntVec x = box.lo;
    for (;;) {
      if (A * x == b) {
        src.push_back(x);
        if (!any || dot(c, x) > best) best = dot(c, x);
        any = true;
      }
      int j = n - 1;
      while (j >= 0 && x[j] == box.hi[j]) x[j] = 0, --j;
      if (j < 0) break;
      ++x[j];
    }
    if (cr.infeasible) {
      CHECK_FALSE(any);
      continue;
    }
    REQUIRE(validate(cr.inst).empty());
    CHECK(abs(det(IntMat::vstack(cr.inst.A, cr.inst.G))) == 1);
    CHECK(delta_gcd(cr.inst.A) == 1);
    auto tp = points(cr.inst, standard_box(cr.inst));
    CHECK(tp.size() == src.size());
    for (auto& p : src) {
      IntVec y = cr.map.forward(p);
      CHECK(feasible(cr.inst, y));
      CHECK(cr.map.source_objective(objective(cr.inst, y)) == Rat(dot(c, p)));
    }
    SolveOutcome t = brute_force_ilp(cr.inst, standard_box(cr.inst));
    CHECK((t.status == Status::Optimal) == any);
    if (any) CHECK(cr.map.source_objective(t.value) == Rat(best));
  }
}

}  // TEST_SUITE
