#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dilp/problem.hpp"

namespace dilp {

struct Box {
  IntVec lo, hi;
  Int volume() const;  // 0 when some range is empty
  bool contains(const IntVec& x) const;
};

// Default 10^7 points; the DELTA_ILP_POINT_CAP environment variable overrides it.
Int point_cap();

using PointFn = std::function<void(const IntVec&)>;
void enumerate_feasible(const CanonicalInstance& I, const Box& box, const PointFn& f);
void enumerate_feasible(const StandardInstance& I, const Box& box, const PointFn& f);

SolveOutcome brute_force_ilp(const CanonicalInstance& I, const Box& box);
SolveOutcome brute_force_ilp(const StandardInstance& I, const Box& box);
Box standard_box(const StandardInstance& I);  // [0, u], requires finite u
// LP vertex x* plus or minus m (2m+1)^m Delta |det S| per coordinate, clipped to [0, u];
// holds an optimum whenever one exists. Empty when the LP is infeasible.
Box proximity_box(const StandardInstance& I);
// Exact LP-based branch and bound over a box; an integral point off the lattice is cut off by
// branching on G_i x <= g_i + S_ii floor(k) or >= g_i + S_ii ceil(k).
SolveOutcome branch_and_bound(const StandardInstance& I, const Box& box);

// All points of {x >= 0 : A x = b, G x = g (mod S)} with c x <= budget; requires c > 0.
void enumerate_cost_ball(const StandardInstance& I, const Int& budget, const PointFn& f);
SolveOutcome brute_force_cost_ball(const StandardInstance& I, const Int& budget);
// Minimum c x over nonzero homogeneous solutions with |x|_1 <= radius, if negative.
std::optional<IntVec> negative_homogeneous_point(const StandardInstance& I, long radius);

// Vertices of conv(points) (+ cone(rays) when given); exact LP separation.
std::vector<IntVec> extreme_points(const std::vector<IntVec>& points, const std::vector<IntVec>& rays = {});
std::vector<IntVec> hull_vertices(const CanonicalInstance& I, const Box& box, bool with_recession = false);
std::vector<IntVec> recession_rays(const CanonicalInstance& I);  // primitive extreme rays
std::optional<Box> vertex_box(const CanonicalInstance& I);       // contains every vertex of P_I

std::vector<IntVec> group_minimal_solutions(const GroupInstance& I);
std::vector<IntVec> group_hull_vertices(const GroupInstance& I);
SolveOutcome brute_force_group(const GroupInstance& I, long radius);
// Dimension of the smallest face of the unbounded group polyhedron containing p.
int group_face_dimension(const GroupInstance& I, const IntVec& p);

Int knapsack_capacity_oracle(const IntVec& w, const IntVec& c, long W);
bool subset_sum_oracle(const IntVec& w, long W);

}  // namespace dilp
