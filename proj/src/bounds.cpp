#include "dilp/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "dilp/linalg.hpp"
#include "dilp/lp.hpp"

namespace dilp {

namespace {

using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

std::string fmt(const Real& x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << x;
  return os.str();
}

// integer lhs against a real rhs, with a margin so rounding never fails a check
bool int_le(const Int& a, const Real& b) {
  Real margin = Real("1e-40") * std::max(Real(1), abs(b));
  return to_real(a) <= b + margin;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::Parameter, what);
}

}  // namespace

Real to_real(const Int& v) { return Real(v.get_str()); }

Real log2r(const Real& x) { return log(x) / log(Real(2)); }

Real sparsity_constant() {
  const Real e = exp(Real(1));
  return log2r(sqrt(2 * e * e / (e - log2r(e)))) + Real(1) / 2;
}

Real sparsity_log_offset() { return log2r(sqrt(2 * exp(Real(1)))); }

Real sparsity_bound(int m, const Int& Delta) {
  require(m >= 0 && Delta >= 1, "sparsity bound needs m >= 0 and Delta >= 1");
  Real L = log2r(to_real(Delta));
  if (m == 0) return L;
  return sparsity_constant() * m + L + Real(m) / 2 * log2r(sparsity_log_offset() + L / m);
}

std::pair<Real, Real> rough_sparsity_coeffs(const Real& c1, const Real& c2, const Real& k) {
  require(c1 > 0 && c2 > 0 && k > 0, "rough coefficients need positive inputs");
  const Real ln4 = log(Real(4));
  return {c1 + log2r(sqrt(k + c2)) - 1 / ln4, 1 + 1 / ((k + c2) * ln4)};
}

std::pair<Real, Real> rough_sparsity_coeffs_tangent(const Real& c1, const Real& c2, const Real& k) {
  require(c1 > 0 && c2 > 0 && k > 0, "rough coefficients need positive inputs");
  const Real ln4 = log(Real(4));
  return {c1 + log2r(sqrt(k + c2)) - k / ((k + c2) * ln4), 1 + 1 / ((k + c2) * ln4)};
}

Int proximity_bound_bounded(int m, const Int& Delta, const Int& detS) {
  require(m >= 0 && Delta >= 1 && detS >= 1, "proximity bound needs m >= 0, Delta >= 1, |det S| >= 1");
  if (m == 0) return detS - 1;
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2 * m + 1, m);
  return m * p * Delta * detS;
}

Int proximity_bound_unbounded(int m, int s, const Int& Delta) {
  require(m >= 0 && s >= 0 && Delta >= 1, "proximity bound needs m >= 0, s >= 0, Delta >= 1");
  return Int(m + 1) * (m + s + 1) * Delta;
}

ChiMode parse_chi_mode(const std::string& s) {
  if (s == "delta") return ChiMode::Delta;
  if (s == "delta1") return ChiMode::Delta1;
  if (s == "diffcol") return ChiMode::DiffCol;
  fail(ErrorKind::Parameter, "unknown chi mode " + s);
}

Int chi_bound(int m, const Int& Delta, const Int& Delta1, const Int& detS, ChiMode mode) {
  require(m >= 0 && Delta >= 1 && Delta1 >= 0 && detS >= 1, "chi bound inputs out of range");
  Int p;
  switch (mode) {
    case ChiMode::Delta:
      mpz_ui_pow_ui(p.get_mpz_t(), 2 * m * m + 1, m);
      return p * Delta * detS + (m - 1);
    case ChiMode::Delta1: {
      if (m == 0) return detS;
      Int base = 2 * m * Delta1 + 1;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), m);
      return m * p * detS;
    }
    case ChiMode::DiffCol:
      return Int(m) * (m + 1) * (m + 1) * Delta * Delta * Delta + (m + 1) * Delta;
  }
  fail(ErrorKind::Parameter, "unknown chi mode");
}

Int binomial_exact(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int mcmullen_xi(int n, int k) {
  if (n < 1) fail(ErrorKind::Domain, "xi needs n >= 1");
  if (k < n) fail(ErrorKind::Domain, "xi needs k >= n");
  return binomial_exact(k - (n + 1) / 2, n / 2) + binomial_exact(k - n / 2 - 1, (n - 1) / 2);
}

Real vertex_count_bound(int n, int m, int s, const Int& Delta, Form form) {
  require(n >= 1 && m >= 0 && s >= 1 && Delta >= 1, "vertex count bound inputs out of range");
  Int choose = binomial_exact(form == Form::CF ? n + m : n, s);
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), s);
  Int lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), s + 1, s + 1);
  Real v = to_real(choose * lead * fact * mcmullen_xi(s, s) * mcmullen_xi(s, 2 * s));
  Real lg = log2r(2 * pow(Real(s + 1), Real(2.5)) * to_real(Delta) * to_real(Delta));
  return v * pow(lg, s - 1);
}

bool BoundsReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.pass; });
}

long BoundsReport::violations() const {
  long v = 0;
  for (auto& e : entries) v += e.violations;
  return v;
}

const BoundEntry* BoundsReport::find(const std::string& name) const {
  for (auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string BoundsReport::table() const {
  std::ostringstream os;
  for (auto& e : entries) {
    os << e.name << " | " << e.inputs << " | ";
    if (!e.lhs.empty()) os << e.lhs << " <= ";
    os << e.rhs;
    if (!e.lhs.empty()) os << " | " << (e.pass ? "ok" : "VIOLATED (" + std::to_string(e.violations) + ")");
    os << "\n";
  }
  return os.str();
}

BoundsReport formula_report(const BoundInputs& in) {
  BoundsReport R;
  auto add = [&](std::string name, std::string inputs, std::string value) {
    R.entries.push_back({std::move(name), std::move(inputs), "", std::move(value)});
  };
  const std::string md = "m=" + std::to_string(in.m) + " Delta=" + str(in.Delta);
  Real sp = sparsity_bound(in.m, in.Delta);
  add("sparsity", md, fmt(sp));
  Int dstar = in.Delta * in.detS;
  add("sparsity standard form", "m=" + std::to_string(in.m) + " Delta*=" + str(dstar), fmt(sparsity_bound(in.m, dstar)));
  for (int k : {3, 100}) {
    auto [a, b] = rough_sparsity_coeffs(sparsity_constant(), sparsity_log_offset(), Real(k));
    add("rough coefficients", "k=" + std::to_string(k), fmt(a) + " " + fmt(b));
  }
  int s = in.s >= 0 ? in.s : static_cast<int>(static_cast<long>(ceil(sp)));
  add("proximity bounded", md + " detS=" + str(in.detS), str(proximity_bound_bounded(in.m, in.Delta, in.detS)));
  add("proximity unbounded", md + " s=" + std::to_string(s), str(proximity_bound_unbounded(in.m, s, in.Delta)));
  add("chi delta", md + " detS=" + str(in.detS), str(chi_bound(in.m, in.Delta, in.Delta1, in.detS, ChiMode::Delta)));
  add("chi delta1", "m=" + std::to_string(in.m) + " Delta1=" + str(in.Delta1) + " detS=" + str(in.detS),
      str(chi_bound(in.m, in.Delta, in.Delta1, in.detS, ChiMode::Delta1)));
  add("chi diffcol", md, str(chi_bound(in.m, in.Delta, in.Delta1, in.detS, ChiMode::DiffCol)));
  // a slack vector has n + m entries, so its support never exceeds that
  const int sv = std::min(s, in.n + in.m);
  if (sv >= 1)
    add("vertex count", "n=" + std::to_string(in.n) + " " + md + " s=" + std::to_string(sv),
        fmt(vertex_count_bound(in.n, in.m, sv, in.Delta, Form::CF)));
  return R;
}

BoundsReport verify_instance_bounds(const CanonicalInstance& I, const std::vector<IntVec>& hull,
                                    const std::vector<IntVec>& optimal) {
  require_valid(I);
  BoundsReport R;
  const int n = I.n(), m = I.m();
  const Int D = delta(I.A);
  const bool ilp = std::all_of(I.b_l.begin(), I.b_l.end(), [](const ExtInt& v) { return v.is_neg_inf(); });
  const std::string md = "m=" + std::to_string(m) + " Delta=" + str(D);

  int s_obs = 0;
  if (ilp) {
    const Int gram = det(I.A.transpose() * I.A);
    const Real rhs1 = m + log2r(sqrt(to_real(gram)));
    const Real rhs2 = sparsity_bound(m, D);
    BoundEntry e1{"slack sparsity (determinant)", md + " det(A^T A)=" + str(gram), "", fmt(rhs1)};
    BoundEntry e2{"slack sparsity (closed form)", md, "", fmt(rhs2)};
    for (auto& z : hull) {
      IntVec Az = I.A * z;
      int k = 0;
      for (int i = 0; i < I.rows(); ++i) k += Az[i] != I.b_r[i];
      s_obs = std::max(s_obs, k);
      // 2^(k - m) <= sqrt(det), squared and exact
      bool ok1 = k <= m;
      if (!ok1) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 4, k - m);
        ok1 = p <= gram;
      }
      if (!ok1) ++e1.violations;
      if (!int_le(Int(k), rhs2)) ++e2.violations;
    }
    e1.lhs = e2.lhs = std::to_string(s_obs);
    e1.pass = e1.violations == 0;
    e2.pass = e2.violations == 0;
    R.entries.push_back(e1);
    R.entries.push_back(e2);

    if (check_normalized(I).empty()) {
      Int dl = 1;
      for (int i = 0; i < n; ++i) dl *= I.A(i, i);
      BoundEntry e{"vertex support (normalized)", "delta=" + str(dl), "", "|u|_0 + " + fmt(log2r(to_real(dl)))};
      int worst = -1 << 30;
      for (auto& z : hull) {
        IntVec Az = I.A * z;
        int k = 0;
        for (int i = 0; i < I.rows(); ++i) k += Az[i] != I.b_r[i];
        int gap = l0(z) - k;
        worst = std::max(worst, gap);
        bool ok = gap <= 0;
        if (!ok) {
          Int p;
          mpz_ui_pow_ui(p.get_mpz_t(), 2, gap);
          ok = p <= dl;
        }
        if (!ok) ++e.violations;
      }
      e.lhs = "|v|_0 - |u|_0 = " + std::to_string(hull.empty() ? 0 : worst);
      e.pass = e.violations == 0;
      R.entries.push_back(e);
    }
  }

  if (optimal.empty()) return R;
  LpOutcome lp = solve_lp(I);
  if (lp.status != Status::Optimal) return R;
  Rat best = -1;
  const RatVec d = to_rat(I.A) * lp.vertex;
  for (auto& z : optimal) {
    IntVec Az = I.A * z;
    Rat t = 0;
    for (int i = 0; i < I.rows(); ++i) t += abs(d[i] - Rat(Az[i]));
    if (best < 0 || t < best) best = t;
  }
  {
    Int rhs = m == 0 ? D - 1 : proximity_bound_bounded(m, D, 1);
    BoundEntry e{"slack proximity (Steinitz)", md, str(best), str(rhs)};
    e.pass = best <= Rat(rhs);
    e.violations = !e.pass;
    R.entries.push_back(e);
  }
  if (ilp) {
    Int rhs = proximity_bound_unbounded(m, s_obs, D);
    BoundEntry e{"slack proximity (sparsity)", md + " s=" + std::to_string(s_obs), str(best), str(rhs)};
    e.pass = best <= Rat(rhs);
    e.violations = !e.pass;
    R.entries.push_back(e);
  }
  return R;
}

}  // namespace dilp
