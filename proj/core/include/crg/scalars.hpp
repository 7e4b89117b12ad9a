#pragma once

// Exact scalars: rationals, the quadratic cyclotomic fields Q(xi_r) for
// r in {1,2,3,4,6}, and degree-one polynomials c0 + c1*alpha over them with
// alpha a formal transcendental.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crg/error.hpp"

namespace crg {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

// Identifies Q(xi) with xi a primitive r-th root of unity, xi^2 = u*xi + v.
// For r = 1, 2 the field is Q and xi = 1 or -1 is folded into the rational part.
class RingTag {
 public:
  RingTag() = default;
  explicit RingTag(int r);

  int r() const { return r_; }
  bool has_xi() const { return r_ >= 3; }
  // Minimal relation coefficients; meaningful only when has_xi().
  int u() const;
  int v() const;

  friend bool operator==(RingTag a, RingTag b) { return a.r_ == b.r_; }

 private:
  int r_ = 1;
};

void require_same_ring(RingTag a, RingTag b);

// a + b*xi in Q(xi_r).
class CycloScalar {
 public:
  CycloScalar() = default;
  explicit CycloScalar(RingTag ring) : ring_(ring) {}
  CycloScalar(RingTag ring, Rational a, Rational b = Rational());

  static CycloScalar zero(RingTag ring) { return CycloScalar(ring); }
  static CycloScalar one(RingTag ring) { return CycloScalar(ring, 1); }

  RingTag ring() const { return ring_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  // Both coordinates integral, i.e. an element of Z[xi].
  bool is_integral() const { return a_.is_integer() && b_.is_integer(); }

  CycloScalar inverse() const;
  CycloScalar pow(long k) const;
  // Complex conjugate: xi -> xi^{-1}.
  CycloScalar conj() const;

  CycloScalar operator-() const { return CycloScalar(ring_, -a_, -b_); }
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator*=(const Rational& q);

  friend CycloScalar operator+(CycloScalar x, const CycloScalar& y) { return x += y; }
  friend CycloScalar operator-(CycloScalar x, const CycloScalar& y) { return x -= y; }
  friend CycloScalar operator*(CycloScalar x, const CycloScalar& y) { return x *= y; }
  friend CycloScalar operator*(CycloScalar x, const Rational& q) { return x *= q; }
  friend CycloScalar operator*(const Rational& q, CycloScalar x) { return x *= q; }
  friend CycloScalar operator/(const CycloScalar& x, const CycloScalar& y) { return x * y.inverse(); }
  friend bool operator==(const CycloScalar& x, const CycloScalar& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void normalize();

  RingTag ring_;
  Rational a_;
  Rational b_;
};

// xi^m reduced to a + b*xi; m is taken modulo r.
CycloScalar root_of_unity(RingTag ring, long m);

// c0 + c1*alpha. No product of two elements with nonzero c1 is ever formed.
class ParamScalar {
 public:
  ParamScalar() = default;
  explicit ParamScalar(RingTag ring) : c0_(ring), c1_(ring) {}
  ParamScalar(CycloScalar c0);  // NOLINT(google-explicit-constructor)
  ParamScalar(CycloScalar c0, CycloScalar c1);

  static ParamScalar zero(RingTag ring) { return ParamScalar(ring); }
  static ParamScalar one(RingTag ring) { return ParamScalar(CycloScalar::one(ring)); }
  static ParamScalar alpha(RingTag ring) {
    return ParamScalar(CycloScalar::zero(ring), CycloScalar::one(ring));
  }

  RingTag ring() const { return c0_.ring(); }
  const CycloScalar& c0() const { return c0_; }
  const CycloScalar& c1() const { return c1_; }
  bool has_alpha() const { return !c1_.is_zero(); }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  // Throws AlphaNotInvertible when c1 != 0.
  ParamScalar inverse() const;

  ParamScalar operator-() const { return ParamScalar(-c0_, -c1_); }
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);

  friend ParamScalar operator+(ParamScalar x, const ParamScalar& y) { return x += y; }
  friend ParamScalar operator-(ParamScalar x, const ParamScalar& y) { return x -= y; }
  friend ParamScalar operator*(ParamScalar x, const ParamScalar& y) { return x *= y; }
  friend ParamScalar operator*(const CycloScalar& c, const ParamScalar& x) {
    return ParamScalar(c * x.c0_, c * x.c1_);
  }
  friend ParamScalar operator*(const ParamScalar& x, const CycloScalar& c) { return c * x; }
  friend ParamScalar operator*(const Rational& q, const ParamScalar& x) {
    return ParamScalar(q * x.c0_, q * x.c1_);
  }
  friend bool operator==(const ParamScalar& x, const ParamScalar& y) {
    return x.c0_ == y.c0_ && x.c1_ == y.c1_;
  }

 private:
  CycloScalar c0_;
  CycloScalar c1_;
};

enum class ScalarOp { Add, Sub, Mul, Neg };

// Dispatching form of the ring operations (Neg ignores y).
ParamScalar scalar_arith(ScalarOp op, const ParamScalar& x, const ParamScalar& y);
ParamScalar scalar_inverse(const ParamScalar& x);

// Coordinates in the basis {1, xi} (no alpha) or {1, xi, alpha, xi*alpha}.
std::vector<Rational> real_coordinates(const ParamScalar& x);
ParamScalar from_real_coordinates(RingTag ring, const std::vector<Rational>& coords);

// Canonical text "a + b*x + c*al + d*x*al"; unit coefficients are dropped
// ("1 + x"), zero terms omitted, zero prints as "0".
std::string to_text(const Rational& q);
std::string to_text(const CycloScalar& x);
std::string to_text(const ParamScalar& x);
ParamScalar parse_scalar(RingTag ring, std::string_view text);

// Strict weak ordering for use as container keys; ring tags are ignored.
bool scalar_less(const ParamScalar& x, const ParamScalar& y);

}  // namespace crg
