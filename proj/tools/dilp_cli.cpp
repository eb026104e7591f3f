// dilp: solve, reduce, normalize, bound and verify Delta-modular ILP instances.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dilp/bench.hpp"
#include "dilp/bounds.hpp"
#include "dilp/dp.hpp"
#include "dilp/gen.hpp"
#include "dilp/group.hpp"
#include "dilp/io.hpp"
#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"
#include "dilp/oracle.hpp"
#include "dilp/reductions.hpp"
#include "dilp/specials.hpp"

using namespace dilp;

namespace {

enum Exit { kOk = 0, kRuntime = 1, kInfeasible = 2, kUnbounded = 3, kInput = 4, kCap = 5 };

void kv(const std::string& k, const std::string& v) { std::cout << k << ": " << v << "\n"; }

std::string join(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + str(v[i]);
  return s;
}

struct SolveOpts {
  std::string form = "auto";
  std::string algo = "auto";
  std::string variant = "binarized";
  uint64_t seed = 0;
};

struct Result {
  SolveOutcome out;
  std::string algo;
  BoundsReport report;
  std::vector<std::pair<std::string, std::string>> extra;
};

int exit_for(Status s) {
  if (s == Status::Infeasible) return kInfeasible;
  if (s == Status::Unbounded) return kUnbounded;
  return kOk;
}

BoundInputs inputs_for(const IntMat& A, int m, const Int& detS) {
  BoundInputs in;
  in.m = m;
  in.n = A.cols();
  in.Delta = A.rows() ? delta(A) : Int(1);
  in.Delta1 = A.rows() ? max_abs(A) : Int(1);
  in.detS = detS;
  return in;
}

// Bounded group problem as a standard instance with m = 0; unit factors go first.
StandardInstance group_as_standard(const GroupInstance& G) {
  const int n = G.n(), k = static_cast<int>(G.group.moduli.size());
  if (k > n) fail(ErrorKind::Precondition, "group has more factors than generators");
  StandardInstance I;
  I.A = IntMat(0, n);
  I.G = IntMat(n, n);
  IntVec d(n, Int(1));
  I.g.assign(n, Int(0));
  for (int i = 0; i < k; ++i) {
    const int row = n - k + i;
    d[row] = G.group.moduli[i];
    for (int j = 0; j < n; ++j) I.G(row, j) = G.gens[j][i];
    I.g[row] = G.target[i];
  }
  I.S = diag(d);
  I.c = G.c;
  I.u = G.u.empty() ? ExtVec(n, ExtInt::pos_inf()) : G.u;
  return I;
}

Result solve_sf(const StandardInstance& I, const SolveOpts& o);

Result solve_group(const GroupInstance& G, const SolveOpts& o) {
  Result r;
  std::string algo = o.algo;
  const bool unb = G.unbounded();
  if (algo == "auto") algo = unb ? (G.group.cyclic() ? "cyclic" : "gomory") : "bounded-dp";
  r.algo = algo;
  if (algo == "gomory") {
    r.out = gomory_solve(G);
  } else if (algo == "cyclic") {
    r.out = cyclic_minplus_solve(G);
  } else if (algo == "oracle") {
    r.out = brute_force_group(G, to_i64(G.group.order()) - 1);
  } else if (algo == "bounded-dp" || algo == "unbounded-dp") {
    SolveOpts inner = o;
    inner.algo = algo;
    Result s = solve_sf(group_as_standard(G), inner);
    s.algo = algo;
    return s;
  } else {
    fail(ErrorKind::Parameter, "algorithm " + algo + " does not apply to group instances");
  }
  BoundInputs in;
  in.m = 0;
  in.n = G.n();
  in.detS = G.group.order();
  r.report = formula_report(in);
  return r;
}

Result solve_sf(const StandardInstance& I, const SolveOpts& o) {
  Result r;
  std::string algo = o.algo;
  if (algo == "auto") algo = I.bounded() ? "bounded-dp" : "unbounded-dp";
  r.algo = algo;
  const Int D = I.m() ? delta(I.A) : Int(1);
  if (algo == "bounded-dp") {
    if (!I.bounded()) fail(ErrorKind::Precondition, "bounded-dp needs finite u");
    const Int chi = proximity_bound_bounded(I.m(), D, I.det_S());
    DpStats st;
    r.out = solve_bilp_sf(I, chi, parse_bilp_variant(o.variant), &st);
    r.extra = {{"variant", o.variant},
               {"chi", str(chi)},
               {"budget", std::to_string(st.budget)},
               {"layers", std::to_string(st.layers)},
               {"states", std::to_string(st.states)},
               {"max_layer_rhs", std::to_string(st.max_layer_rhs)},
               {"layer_bound", str(st.layer_bound)}};
  } else if (algo == "unbounded-dp") {
    if (!I.unbounded()) fail(ErrorKind::Precondition, "unbounded-dp needs u = +inf");
    UnboundedTrace tr;
    r.out = solve_ilp_sf_unbounded(I, &tr);
    r.extra = {{"rho", std::to_string(tr.rho)},
               {"shifted", tr.shifted ? "yes" : "no"},
               {"mu", str(tr.mu.mu)},
               {"mu_proven", str(tr.mu.mu_proven)}};
  } else if (algo == "oracle") {
    r.out = I.bounded() ? brute_force_ilp(I, standard_box(I)) : branch_and_bound(I, proximity_box(I));
  } else if (algo == "gomory" || algo == "cyclic") {
    if (I.m() != 0) fail(ErrorKind::Precondition, algo + " needs m = 0");
    Result g = solve_group(standard_to_group(I), o);
    g.algo = algo;
    return g;
  } else {
    fail(ErrorKind::Parameter, "algorithm " + algo + " does not apply to standard instances");
  }
  r.report = formula_report(inputs_for(I.A, I.m(), I.det_S()));
  return r;
}

// Rows w x <= W and -x <= 0 (knapsack); w x <= W, -w x <= -W and -x <= 0 (subset sum).
bool knapsack_rows(const CanonicalInstance& I, bool subset, IntVec& w, Int& W) {
  const int n = I.n(), head = subset ? 2 : 1;
  if (I.rows() != n + head) return false;
  w = I.A.row(0);
  W = I.b_r[0];
  for (auto& v : w)
    if (v <= 0) return false;
  if (subset) {
    for (int j = 0; j < n; ++j)
      if (I.A(1, j) != -w[j]) return false;
    if (I.b_r[1] != -W) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (I.b_r[head + i] != 0) return false;
    for (int j = 0; j < n; ++j)
      if (I.A(head + i, j) != (i == j ? -1 : 0)) return false;
  }
  return true;
}

Result solve_cf(const CanonicalInstance& I, const SolveOpts& o) {
  Result r;
  const bool ilp = wrap(I).form == InstanceForm::IlpCf;
  std::string algo = o.algo;
  if (algo == "auto") algo = ilp ? (I.m() == 0 ? "local" : "unbounded-dp") : "bounded-dp";
  r.algo = algo;
  r.report = formula_report(inputs_for(I.A, I.m(), Int(1)));

  if (algo == "oracle") {
    auto box = vertex_box(I);
    if (!box) {
      r.out.status = Status::Infeasible;
      return r;
    }
    r.out = brute_force_ilp(I, *box);
    if (r.out.status == Status::Optimal && solve_lp(I).status == Status::Unbounded) {
      r.out.status = Status::Unbounded;
      for (auto& ray : recession_rays(I))
        if (dot(I.c, ray) > 0) {
          r.out.ray = ray;
          break;
        }
    }
    return r;
  }
  if (algo == "knapsack" || algo == "subset-sum") {
    IntVec w;
    Int W;
    if (!ilp || !knapsack_rows(I, algo == "subset-sum", w, W))
      fail(ErrorKind::Precondition, algo + " expects rows w x <= W" + (algo == "subset-sum" ? ", -w x <= -W" : "") +
                                        " and -x <= 0");
    if (algo == "knapsack") {
      r.out = knapsack_unbounded(w, I.c, W);
    } else {
      SubsetSumOutcome s = subset_sum_unbounded(w, W);
      r.out.status = s.feasible ? Status::Optimal : Status::Infeasible;
      if (s.feasible) {
        r.out.x = s.x;
        r.out.value = dot(I.c, s.x);
      }
      r.out.info = s.info;
      r.extra = {{"pivot", std::to_string(s.pivot)}, {"group_value", str(s.group_value)}};
    }
    return r;
  }

  LpOutcome lp = solve_lp(I);
  if (lp.status == Status::Infeasible) {
    r.out.status = Status::Infeasible;
    r.out.note("lp", "infeasible");
    return r;
  }
  if (lp.status == Status::Unbounded) {
    // integer feasibility decides between infeasible and unbounded
    CanonicalInstance Z = I;
    Z.c.assign(I.n(), Int(0));
    SolveOpts inner = o;
    inner.algo = algo == "local" ? "unbounded-dp" : algo;
    Result f = solve_cf(Z, inner);
    r.out.status = f.out.status == Status::Optimal ? Status::Unbounded : Status::Infeasible;
    r.out.note("lp", "unbounded");
    if (r.out.status == Status::Unbounded) {
      r.out.x = f.out.x;
      for (auto& ray : recession_rays(I))
        if (dot(I.c, ray) > 0) {
          r.out.ray = ray;
          break;
        }
    }
    return r;
  }
  if (algo == "local") {
    if (!ilp) fail(ErrorKind::Precondition, "local needs an ILP-CF instance");
    LocalOutcome L = solve_local(I, lp.base);
    r.out = L.outcome;
    r.report = L.report;
    r.extra = {{"base", [&] {
                  std::string s;
                  for (int b : lp.base) s += (s.empty() ? "" : " ") + std::to_string(b);
                  return s;
                }()},
               {"slack_y", join(L.y)}};
    if (I.m() > 0 && !L.feasible) r.out.note("global", "local optimum infeasible for the full system");
    return r;
  }
  auto [S, map] = cf_to_sf(I);
  SolveOpts inner = o;
  inner.algo = algo;
  Result s = solve_sf(S, inner);
  r.extra = s.extra;
  r.extra.emplace_back("reduced_form", to_string(wrap(S).form));
  r.out = s.out;
  if (r.out.status == Status::Optimal) {
    r.out.x = map.backward(s.out.x);
    r.out.value = dot(I.c, r.out.x);
  }
  return r;
}

Result solve_file(const InstanceFile& f, const SolveOpts& o) {
  const std::string& form = o.form;
  if (form == "auto" || (form == "cf" && f.canonical()) || (form == "sf" && f.standard()) ||
      (form == "group" && f.form == InstanceForm::Group)) {
    if (f.canonical()) return solve_cf(f.cf, o);
    if (f.standard()) return solve_sf(f.sf, o);
    return solve_group(f.group, o);
  }
  if (form == "sf" && f.canonical()) {
    auto [S, map] = cf_to_sf(f.cf);
    Result r = solve_sf(S, o);
    if (r.out.status == Status::Optimal) {
      r.out.x = map.backward(r.out.x);
      r.out.value = dot(f.cf.c, r.out.x);
    }
    return r;
  }
  if (form == "cf" && f.standard()) {
    auto [C, map] = sf_to_cf(f.sf);
    Result r = solve_cf(C, o);
    if (r.out.status == Status::Optimal) {
      r.out.x = map.backward(r.out.x);
      r.out.value = dot(f.sf.c, r.out.x);
    }
    return r;
  }
  if (form == "group" && f.standard()) return solve_group(standard_to_group(f.sf), o);
  if (form == "sf" && f.form == InstanceForm::Group) return solve_sf(group_as_standard(f.group), o);
  fail(ErrorKind::Parameter, "cannot solve a " + std::string(to_string(f.form)) + " instance in form " + form);
}

int cmd_solve(const std::string& file, const SolveOpts& o) {
  InstanceFile f = read_instance(file);
  auto t0 = std::chrono::steady_clock::now();
  Result r = solve_file(f, o);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  kv("form", to_string(f.form));
  kv("algo", r.algo);
  kv("seed", std::to_string(o.seed));
  kv("status", to_string(r.out.status));
  if (r.out.status == Status::Optimal) {
    kv("optimum", str(r.out.value));
    kv("x", join(r.out.x));
  }
  if (!r.out.ray.empty()) kv("ray", join(r.out.ray));
  for (auto& [k, v] : r.extra) kv(k, v);
  for (auto& [k, v] : r.out.info) kv("note." + k, v);
  if (!r.report.entries.empty()) {
    std::cout << "report:\n" << r.report.table();
  }
  // timing goes to stderr so stdout stays byte-identical across runs
  std::cerr << "time_ms: " << ms << "\n";
  return exit_for(r.out.status);
}

void emit(const InstanceFile& f, const std::string& out) {
  if (out.empty()) {
    std::cout << write_instance(f);
    return;
  }
  std::ofstream os(out);
  if (!os) fail(ErrorKind::Parse, "cannot write " + out);
  os << write_instance(f);
  kv("written", out);
}

std::string map_comment(const ReductionMap& m) {
  std::string s = m.direction + "; source objective = " + str(m.alpha) + " * target + " + str(m.beta);
  for (auto& [k, v] : m.meta) s += "; " + k + "=" + v;
  return s;
}

int cmd_reduce(const std::string& file, const std::string& dir, const std::string& out) {
  if (dir == "classic") {
    // max c x  s.t.  A x = b, 0 <= x <= u, written as a standard file with empty G, S and g
    InstanceFile f = read_instance(file, false);
    if (!f.standard() || f.sf.G.rows() != 0) fail(ErrorKind::Precondition, "classic input is a standard file with G = []");
    auto red = classic_to_generalized(f.sf.A, f.sf.b, f.sf.c, f.sf.u);
    if (red.infeasible) {
      kv("status", "infeasible");
      for (auto& [k, v] : red.map.meta) kv("note." + k, v);
      return kInfeasible;
    }
    InstanceFile g = wrap(red.inst);
    g.comment = map_comment(red.map);
    emit(g, out);
    return kOk;
  }
  InstanceFile f = read_instance(file);
  if (dir == "cf2sf") {
    if (!f.canonical()) fail(ErrorKind::Precondition, "cf2sf needs a canonical instance");
    auto [S, map] = cf_to_sf(f.cf);
    InstanceFile g = wrap(S);
    g.comment = map_comment(map);
    emit(g, out);
    return kOk;
  }
  if (dir == "sf2cf") {
    if (!f.standard()) fail(ErrorKind::Precondition, "sf2cf needs a standard instance");
    auto [C, map] = sf_to_cf(f.sf);
    InstanceFile g = wrap(C);
    g.comment = map_comment(map);
    emit(g, out);
    return kOk;
  }
  fail(ErrorKind::Parameter, "unknown direction " + dir);
}

std::vector<int> parse_base(const std::string& s) {
  std::vector<int> b;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      b.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::Parameter, "bad base index \"" + tok + "\"");
    }
  }
  return b;
}

int cmd_normalize(const std::string& file, const std::string& base_s, const std::string& out) {
  InstanceFile f = read_instance(file);
  if (!f.canonical()) fail(ErrorKind::Precondition, "normalize needs a canonical instance");
  std::vector<int> base = base_s.empty() ? max_det_submatrix(f.cf.A).rows : parse_base(base_s);
  auto [N, rec] = normalize(f.cf, base);
  auto issues = check_normalized(N);
  InstanceFile g = wrap(N);
  std::string b;
  for (int i : rec.base) b += (b.empty() ? "" : ",") + std::to_string(i);
  g.comment = "normalized at base " + b + "; delta=" + str(rec.delta) + " s=" + std::to_string(rec.s) +
              " t=" + std::to_string(rec.t_diag) + (issues.empty() ? "; normalized" : "; NOT normalized");
  if (out.empty()) {
    std::cout << write_instance(g);
  } else {
    emit(g, out);
    kv("delta", str(rec.delta));
    kv("normalized", issues.empty() ? "yes" : "no");
    for (auto& s : issues) kv("issue", s);
  }
  return issues.empty() ? kOk : kRuntime;
}

int cmd_bounds(const std::string& file) {
  InstanceFile f = read_instance(file);
  BoundInputs in;
  if (f.canonical()) in = inputs_for(f.cf.A, f.cf.m(), Int(1));
  else if (f.standard()) in = inputs_for(f.sf.A, f.sf.m(), f.sf.det_S());
  else {
    in.m = 0;
    in.n = f.group.n();
    in.detS = f.group.group.order();
  }
  kv("form", to_string(f.form));
  kv("m", std::to_string(in.m));
  kv("Delta", str(in.Delta));
  kv("Delta1", str(in.Delta1));
  kv("detS", str(in.detS));
  std::cout << formula_report(in).table();
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& suite) {
  if (suite != "sparsity" && suite != "proximity" && suite != "hull" && suite != "all")
    fail(ErrorKind::Parameter, "unknown suite " + suite);
  InstanceFile f = read_instance(file);
  BoundsReport R;
  if (f.form == InstanceForm::Group) {
    const GroupInstance& G = f.group;
    auto verts = group_hull_vertices(G);
    BoundEntry e{"group vertex certificate", "|G|=" + str(G.group.order()), std::to_string(verts.size()) + " vertices",
                 "prod(1 + v_i) <= |G|"};
    for (auto& v : verts)
      if (!vertex_certificate(v, G.group.order()).pass) ++e.violations;
    e.pass = e.violations == 0;
    R.entries.push_back(e);
  } else {
    CanonicalInstance C = f.canonical() ? f.cf : sf_to_cf(f.sf).first;
    auto box = vertex_box(C);
    if (!box) {
      kv("status", "infeasible");
      return kInfeasible;
    }
    auto hull = hull_vertices(C, *box);
    std::vector<IntVec> optimal;
    SolveOutcome best = brute_force_ilp(C, *box);
    if (best.status == Status::Optimal && solve_lp(C).status == Status::Optimal)
      enumerate_feasible(C, *box, [&](const IntVec& x) {
        if (dot(C.c, x) == best.value) optimal.push_back(x);
      });
    BoundsReport all = verify_instance_bounds(C, hull, optimal);
    for (auto& e : all.entries) {
      const bool prox = e.name.find("proximity") != std::string::npos;
      if (suite == "all" || (suite == "proximity") == prox) R.entries.push_back(e);
    }
    if (suite == "hull" || suite == "all") {
      // s is the largest slack support over the hull vertices
      const Int D = delta(C.A);
      int s = 1;
      for (auto& z : hull) {
        IntVec Az = C.A * z;
        int k = 0;
        for (int i = 0; i < C.rows(); ++i) k += Az[i] != C.b_r[i];
        s = std::max(s, k);
      }
      Real bound = vertex_count_bound(C.n(), C.m(), s, D, Form::CF);
      BoundEntry e{"vertex count", "n=" + std::to_string(C.n()) + " m=" + std::to_string(C.m()) + " s=" + std::to_string(s),
                   std::to_string(hull.size()), bound.str(6)};
      e.pass = Real(static_cast<long>(hull.size())) <= bound;
      e.violations = !e.pass;
      R.entries.push_back(e);
    }
  }
  kv("form", to_string(f.form));
  kv("suite", suite);
  kv("violations", std::to_string(R.violations()));
  std::cout << R.table();
  return R.all_pass() ? kOk : kRuntime;
}

int cmd_gen(const GenSpec& spec, uint64_t seed, int count, const std::string& out_dir) {
  if (count < 1) fail(ErrorKind::Parameter, "count must be positive");
  if (out_dir.empty()) {
    if (count != 1) fail(ErrorKind::Parameter, "several instances need --out");
    std::cout << write_instance(generate(spec, seed));
    return kOk;
  }
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    const uint64_t s = seed + static_cast<uint64_t>(i);
    std::string path = out_dir + "/" + spec.kind + "_" + std::to_string(s) + ".json";
    std::ofstream os(path);
    if (!os) fail(ErrorKind::Parse, "cannot write " + path);
    os << write_instance(generate(spec, s));
  }
  kv("written", std::to_string(count));
  return kOk;
}

int cmd_bench(const std::string& suite, uint64_t seed, int reps) {
  if (suite == "knapsack") {
    auto r = knapsack_scaling(50, 50, 100, reps, seed);
    kv("n", "50");
    kv("median_ms_delta_50", std::to_string(r.lo.median()));
    kv("median_ms_delta_100", std::to_string(r.hi.median()));
    kv("ratio", std::to_string(r.ratio()));
    return kOk;
  }
  if (suite == "sampler") {
    auto rows = locality_sampler(trend_matrix(), {10, 100, 1000}, reps, seed);
    std::cout << sampler_table(rows);
    return kOk;
  }
  if (suite == "dp") {
    auto r = bounded_dp_sweep(reps, seed);
    kv("instances", std::to_string(r.instances));
    kv("optimal", std::to_string(r.optimal));
    kv("mismatches", std::to_string(r.mismatches));
    kv("seconds", std::to_string(r.seconds));
    return r.mismatches ? kRuntime : kOk;
  }
  fail(ErrorKind::Parameter, "unknown bench suite " + suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-modular ILP toolkit"};
  app.require_subcommand(1);

  SolveOpts so;
  std::string file, out, direction = "cf2sf", base, suite = "all", bench_suite = "knapsack";
  GenSpec gs;
  uint64_t seed = 0;
  int count = 1, reps = 20;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", file)->required();
  solve->add_option("--form", so.form)->check(CLI::IsMember({"auto", "cf", "sf", "group"}));
  solve->add_option("--algo", so.algo)
      ->check(CLI::IsMember({"auto", "bounded-dp", "unbounded-dp", "gomory", "cyclic", "local", "knapsack",
                             "subset-sum", "oracle"}));
  solve->add_option("--variant", so.variant)->check(CLI::IsMember({"queue", "binarized"}));
  solve->add_option("--seed", so.seed);

  auto* reduce = app.add_subcommand("reduce", "rewrite an instance in another form");
  reduce->add_option("file", file)->required();
  reduce->add_option("--direction", direction)->check(CLI::IsMember({"cf2sf", "sf2cf", "classic"}));
  reduce->add_option("-o,--out", out);

  auto* norm = app.add_subcommand("normalize", "normalize a canonical instance at a base");
  norm->add_option("file", file)->required();
  norm->add_option("--base", base, "comma separated row indices; default is a maximal-determinant base");
  norm->add_option("-o,--out", out);

  auto* bounds = app.add_subcommand("bounds", "evaluate the bound formulas for an instance");
  bounds->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "check bounds against oracle enumeration");
  verify->add_option("file", file)->required();
  verify->add_option("--suite", suite)->check(CLI::IsMember({"sparsity", "proximity", "hull", "all"}));

  auto* gen = app.add_subcommand("gen", "generate random valid instances");
  gen->add_option("--kind", gs.kind)
      ->check(CLI::IsMember({"ilp-cf", "bilp-cf", "ilp-sf", "bilp-sf", "group", "knapsack"}));
  gen->add_option("--n", gs.n);
  gen->add_option("--m", gs.m);
  gen->add_option("--delta-max", gs.delta_max);
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_option("--out", out, "directory");

  auto* bench = app.add_subcommand("bench", "scaling and trend runs");
  bench->add_option("--suite", bench_suite)->check(CLI::IsMember({"knapsack", "sampler", "dp"}));
  bench->add_option("--seed", seed);
  bench->add_option("--reps", reps, "seeds (knapsack), samples per radius (sampler), instances (dp)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*solve) return cmd_solve(file, so);
    if (*reduce) return cmd_reduce(file, direction, out);
    if (*norm) return cmd_normalize(file, base, out);
    if (*bounds) return cmd_bounds(file);
    if (*verify) return cmd_verify(file, suite);
    if (*gen) return cmd_gen(gs, seed, count, out);
    if (*bench) return cmd_bench(bench_suite, seed, reps);
  } catch (const Error& e) {
    std::cout << "error: " << to_string(e.kind()) << "\n";
    std::cout << "message: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Cap) return kCap;
    if (e.kind() == ErrorKind::Domain) return kRuntime;
    return kInput;
  } catch (const std::exception& e) {
    std::cout << "error: internal\nmessage: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}
