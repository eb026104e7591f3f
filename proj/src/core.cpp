#include "dilp/core.hpp"

#include <limits>
#include <sstream>

#include "dilp/matrix.hpp"

namespace dilp {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Rank: return "rank";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Base: return "base";
    case ErrorKind::Cap: return "cap";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

const Int& ExtInt::value() const {
  if (kind_ != Kind::Finite) fail(ErrorKind::Domain, "value() of an infinite bound");
  return v_;
}

bool ExtInt::operator==(const ExtInt& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ != Kind::Finite || v_ == o.v_;
}

std::string ExtInt::str() const {
  if (kind_ == Kind::PosInf) return "+inf";
  if (kind_ == Kind::NegInf) return "-inf";
  return v_.get_str();
}

bool ext_le(const ExtInt& a, const Int& x) { return a.is_neg_inf() || (a.finite() && a.value() <= x); }
bool ext_ge(const ExtInt& a, const Int& x) { return a.is_pos_inf() || (a.finite() && a.value() >= x); }

bool fits_i64(const Int& v) {
  static const Int lo(std::to_string(std::numeric_limits<int64_t>::min()));
  static const Int hi(std::to_string(std::numeric_limits<int64_t>::max()));
  return v >= lo && v <= hi;
}

int64_t to_i64(const Int& v) {
  if (!fits_i64(v)) fail(ErrorKind::Cap, "integer does not fit in 64 bits: " + v.get_str());
  if (v.fits_slong_p()) return v.get_si();
  return std::stoll(v.get_str());
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }
int sign(const Int& v) { return sgn(v); }

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& q) { return q.get_str(); }

std::string str(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

std::string str(const RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

IntVec ivec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

bool is_integral(const RatVec& v) {
  for (auto& q : v)
    if (q.get_den() != 1) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (auto& q : v) {
    if (q.get_den() != 1) fail(ErrorKind::Domain, "non-integral rational " + q.get_str());
    r.push_back(q.get_num());
  }
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail(ErrorKind::Dimension, "dot size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorKind::Dimension, "dot size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int l1(const IntVec& v) {
  Int s = 0;
  for (auto& x : v) s += abs(x);
  return s;
}

Int linf(const IntVec& v) {
  Int s = 0;
  for (auto& x : v)
    if (abs(x) > s) s = abs(x);
  return s;
}

int l0(const IntVec& v) {
  int k = 0;
  for (auto& x : v) k += x != 0;
  return k;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) fail(ErrorKind::Domain, "non-integral matrix entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Int max_abs(const IntMat& m) {
  Int s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > s) s = abs(m(i, j));
  return s;
}

std::string str(const IntMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

IntMat diag(const IntVec& d) {
  IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

}  // namespace dilp
