#include <cmath>

#include "doctest.h"
#include "dilp/bounds.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"
#include "dilp/oracle.hpp"
#include "helpers.hpp"

using namespace dilp;
using namespace testutil;

namespace {

double d(const Real& x) { return static_cast<double>(x); }

CanonicalInstance random_ilp_cf(Rng& r, int n, int m, long amax) {
  CanonicalInstance I;
  I.A = random_full_rank(r, n + m, n, -amax, amax);
  for (int i = 0; i < n + m; ++i) I.b_l.push_back(ExtInt::neg_inf()), I.b_r.emplace_back(r.uniform(-3, 8));
  for (int j = 0; j < n; ++j) I.c.emplace_back(r.uniform(-3, 3));
  return I;
}

std::vector<IntVec> optimal_points(const CanonicalInstance& I, const Box& box) {
  SolveOutcome best = brute_force_ilp(I, box);
  std::vector<IntVec> out;
  if (best.status != Status::Optimal) return out;
  enumerate_feasible(I, box, [&](const IntVec& x) {
    if (objective(I, x) == best.value) out.push_back(x);
  });
  return out;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("sparsity closed form") {
  const double e = std::exp(1.0);
  double c = std::log2(std::sqrt(2 * e * e / (e - std::log2(e)))) + 0.5;
  CHECK(d(sparsity_constant()) == doctest::Approx(c).epsilon(1e-12));
  CHECK(sparsity_constant() <= Real("2.27"));
  CHECK(d(sparsity_log_offset()) == doctest::Approx(std::log2(std::sqrt(2 * e))).epsilon(1e-12));
  CHECK(d(sparsity_bound(1, 1)) == doctest::Approx(2.4113).epsilon(1e-4));
  CHECK(d(sparsity_bound(0, 8)) == doctest::Approx(3.0));
  for (int m = 1; m <= 4; ++m) CHECK(sparsity_bound(m, 16) < sparsity_bound(m, 17));
  CHECK_THROWS_AS(sparsity_bound(1, 0), Error);
}

TEST_CASE("rough coefficients") {
  const double c1 = d(sparsity_constant()), c2 = d(sparsity_log_offset());
  for (double k : {0.5, 3.0, 10.0, 100.0}) {
    auto [a, b] = rough_sparsity_coeffs(sparsity_constant(), sparsity_log_offset(), Real(k));
    CHECK(d(a) == doctest::Approx(c1 + std::log2(std::sqrt(k + c2)) - 1 / std::log(4.0)).epsilon(1e-12));
    CHECK(d(b) == doctest::Approx(1 + 1 / ((k + c2) * std::log(4.0))).epsilon(1e-12));
  }
  Real prev = 10;
  for (int k = 1; k <= 200; ++k) {
    Real b = rough_sparsity_coeffs(Real(1), Real(1), Real(k)).second;
    CHECK(b < prev);
    prev = b;
  }
  // the tangent form dominates the closed form for every m, Delta
  for (double k : {0.5, 1.0, 3.0, 100.0}) {
    auto [a, b] = rough_sparsity_coeffs_tangent(sparsity_constant(), sparsity_log_offset(), Real(k));
    for (int m = 1; m <= 6; ++m)
      for (long D : {1L, 2L, 7L, 64L, 1000L, 123456L})
        CHECK(sparsity_bound(m, D) <= a * m + b * log2r(Real(D)) + Real("1e-30"));
  }
}

TEST_CASE("relaxed rough coefficients undershoot for small k") {
  auto [a, b] = rough_sparsity_coeffs(sparsity_constant(), sparsity_log_offset(), Real(1));
  CHECK(a + b * log2r(Real(1)) < sparsity_bound(1, 1));
  auto [ta, tb] = rough_sparsity_coeffs_tangent(sparsity_constant(), sparsity_log_offset(), Real(1));
  CHECK(ta > a);
  CHECK(tb == b);
}

TEST_CASE("proximity and chi formulas") {
  CHECK(proximity_bound_bounded(0, 5, 7) == 6);
  CHECK(proximity_bound_bounded(1, 2, 1) == 6);
  CHECK(proximity_bound_bounded(2, 1, 1) == 50);
  CHECK(proximity_bound_unbounded(1, 0, 1) == 4);
  CHECK_THROWS_AS(proximity_bound_unbounded(1, 0, 0), Error);
  CHECK(chi_bound(1, 2, 0, 1, ChiMode::Delta) == 6);
  CHECK(chi_bound(1, 2, 0, 1, ChiMode::DiffCol) == 36);
  CHECK(chi_bound(0, 1, 3, 5, ChiMode::Delta1) == 5);
  CHECK(chi_bound(2, 1, 1, 1, ChiMode::Delta1) == 2 * 25);
  CHECK(parse_chi_mode("diffcol") == ChiMode::DiffCol);
  CHECK_THROWS_AS(parse_chi_mode("hadamard"), Error);
}

TEST_CASE("mcmullen xi") {
  CHECK(mcmullen_xi(3, 4) == 4);
  CHECK(mcmullen_xi(1, 2) == 2);
  for (int k = 2; k <= 12; ++k) CHECK(mcmullen_xi(2, k) == k);
  for (int n = 1; n <= 8; ++n) CHECK(mcmullen_xi(n, n + 1) == n + 1);
  for (int n = 1; n <= 6; ++n)
    for (int k = n; k < 14; ++k) CHECK(mcmullen_xi(n, k) <= mcmullen_xi(n, k + 1));
  // cube: 6 facets, 8 vertices
  CHECK(mcmullen_xi(3, 6) >= 8);
  CHECK_THROWS_AS(mcmullen_xi(3, 2), Error);
}

TEST_CASE("vertex count bound") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m) CHECK(vertex_count_bound(n, m, 1, 5, Form::CF) == Real(16 * (n + m)));
  CHECK(vertex_count_bound(3, 2, 2, 4, Form::CF) < vertex_count_bound(3, 2, 2, 5, Form::CF));
  CHECK(vertex_count_bound(3, 2, 2, 4, Form::SF) < vertex_count_bound(3, 2, 2, 4, Form::CF));

  Rng rng(301);
  for (int it = 0; it < 25; ++it) {
    Rng r = rng.split(it);
    CanonicalInstance I = random_ilp_cf(r, static_cast<int>(r.uniform(1, 3)), static_cast<int>(r.uniform(0, 2)), 3);
    auto box = vertex_box(I);
    if (!box) continue;
    auto hull = hull_vertices(I, *box, true);
    if (hull.empty()) continue;
    BoundsReport rep = verify_instance_bounds(I, hull, {});
    int s = std::stoi(rep.find("slack sparsity (determinant)")->lhs);
    Real b = vertex_count_bound(I.n(), I.m(), std::max(1, s), delta(I.A), Form::CF);
    CHECK(Real(static_cast<long>(hull.size())) <= b);
  }
}

TEST_CASE("unimodular instance passes with zero log term") {
  CanonicalInstance I;
  I.A = IntMat{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}};
  I.b_l.assign(5, ExtInt::neg_inf());
  I.b_r = ivec({3, 2, 0, 0, 4});
  I.c = ivec({1, 2});
  Box box{ivec({0, 0}), ivec({3, 2})};
  auto hull = hull_vertices(I, box, true);
  BoundsReport rep = verify_instance_bounds(I, hull, optimal_points(I, box));
  CHECK(rep.all_pass());
  const BoundEntry* e = rep.find("slack sparsity (determinant)");
  REQUIRE(e);
  CHECK(std::stoi(e->lhs) <= I.m());
  REQUIRE(rep.find("slack proximity (sparsity)"));
  CHECK(rep.find("slack proximity (sparsity)")->lhs == "0");
}

TEST_CASE("random instances satisfy every bound") {
  Rng rng(302);
  int checked = 0, normalized = 0;
  for (int it = 0; it < 120; ++it) {
    Rng r = rng.split(it);
    CanonicalInstance I = random_ilp_cf(r, static_cast<int>(r.uniform(1, 3)), static_cast<int>(r.uniform(0, 2)), 3);
    if (r.coin(0.5)) {
      auto base = max_det_submatrix(I.A).rows;
      I = normalize(I, base).first;
    }
    auto box = vertex_box(I);
    if (!box || box->volume() > 20000) continue;
    auto hull = hull_vertices(I, *box, true);
    BoundsReport rep = verify_instance_bounds(I, hull, optimal_points(I, *box));
    INFO(rep.table());
    CHECK(rep.all_pass());
    normalized += rep.find("vertex support (normalized)") != nullptr;
    ++checked;
  }
  CHECK(checked >= 80);
  CHECK(normalized >= 20);
}

TEST_CASE("bounded instances satisfy the Steinitz proximity") {
  Rng rng(303);
  int checked = 0;
  for (int it = 0; it < 80; ++it) {
    Rng r = rng.split(it);
    int n = static_cast<int>(r.uniform(1, 3)), m = static_cast<int>(r.uniform(0, 2));
    CanonicalInstance I;
    I.A = random_full_rank(r, n + m, n, -3, 3);
    for (int i = 0; i < n + m; ++i) {
      long lo = r.uniform(-5, 2);
      I.b_l.push_back(ExtInt(lo));
      I.b_r.emplace_back(lo + r.uniform(0, 6));
    }
    for (int j = 0; j < n; ++j) I.c.emplace_back(r.uniform(-3, 3));
    auto box = vertex_box(I);
    if (!box) continue;
    auto opt = optimal_points(I, *box);
    if (opt.empty()) continue;
    BoundsReport rep = verify_instance_bounds(I, {}, opt);
    const BoundEntry* e = rep.find("slack proximity (Steinitz)");
    REQUIRE(e);
    CHECK(e->pass);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("formula report") {
  BoundInputs in;
  in.m = 2;
  in.Delta = 16;
  in.detS = 3;
  in.n = 4;
  BoundsReport rep = formula_report(in);
  REQUIRE(rep.find("proximity bounded"));
  CHECK(rep.find("proximity bounded")->rhs == str(proximity_bound_bounded(2, 16, 3)));
  CHECK(rep.find("vertex count"));
  CHECK(rep.table().find("chi diffcol") != std::string::npos);
}

}  // TEST_SUITE
