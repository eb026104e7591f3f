#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dilp {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class ErrorKind { Dimension, Rank, Precondition, Parameter, Base, Cap, Parse, Domain };

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& what);

// Extended integer: -inf, finite, +inf.
class ExtInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };
  ExtInt() = default;
  ExtInt(const Int& v) : kind_(Kind::Finite), v_(v) {}
  ExtInt(long v) : kind_(Kind::Finite), v_(v) {}
  template <class T, class U>
  ExtInt(const __gmp_expr<T, U>& e) : kind_(Kind::Finite), v_(e) {}
  static ExtInt pos_inf() { ExtInt e; e.kind_ = Kind::PosInf; return e; }
  static ExtInt neg_inf() { ExtInt e; e.kind_ = Kind::NegInf; return e; }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  Kind kind() const { return kind_; }
  const Int& value() const;

  bool operator==(const ExtInt& o) const;
  std::string str() const;

 private:
  Kind kind_ = Kind::Finite;
  Int v_ = 0;
};

using ExtVec = std::vector<ExtInt>;

bool ext_le(const ExtInt& a, const Int& x);  // a <= x
bool ext_ge(const ExtInt& a, const Int& x);  // a >= x

int64_t to_i64(const Int& v);
bool fits_i64(const Int& v);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int mod_pos(const Int& a, const Int& m);  // representative in [0, m)
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
int sign(const Int& v);

std::string str(const Int& v);
std::string str(const Rat& q);
std::string str(const IntVec& v);
std::string str(const RatVec& v);

IntVec ivec(std::initializer_list<long> xs);
RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);  // requires integral entries
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Int l1(const IntVec& v);
Int linf(const IntVec& v);
int l0(const IntVec& v);

}  // namespace dilp
