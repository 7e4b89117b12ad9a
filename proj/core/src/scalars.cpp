#include "crg/scalars.hpp"

#include <cctype>
#include <sstream>

namespace crg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::AlphaSquared: return "AlphaSquared";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::AlphaNotInvertible: return "AlphaNotInvertible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::EmptySubspace: return "EmptySubspace";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::NotRankOne: return "NotRankOne";
    case Errc::ConstantNotAdmissible: return "ConstantNotAdmissible";
    case Errc::NotAMember: return "NotAMember";
    case Errc::ExpectedPositiveGroup: return "ExpectedPositiveGroup";
    case Errc::CounterexampleRejected: return "CounterexampleRejected";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  CRG_CHECK(den != 0, Errc::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  CRG_CHECK(den != 0, Errc::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  CRG_CHECK(!o.is_zero(), Errc::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  CRG_CHECK(!s.empty(), Errc::ParseError, "empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad rational '" + s + "'");
  CRG_CHECK(q.get_den() != 0, Errc::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(q);
}

// ---------------------------------------------------------------- RingTag

RingTag::RingTag(int r) : r_(r) {
  CRG_CHECK(r == 1 || r == 2 || r == 3 || r == 4 || r == 6, Errc::InvalidParameters,
            "unsupported root-of-unity order r=" + std::to_string(r));
}

int RingTag::u() const {
  switch (r_) {
    case 3: return -1;
    case 4: return 0;
    case 6: return 1;
    default: return 0;
  }
}

int RingTag::v() const { return r_ >= 3 ? -1 : 0; }

void require_same_ring(RingTag a, RingTag b) {
  if (!(a == b)) {
    throw Error(Errc::RingMismatch,
                "r=" + std::to_string(a.r()) + " vs r=" + std::to_string(b.r()));
  }
}

// ---------------------------------------------------------------- CycloScalar

CycloScalar::CycloScalar(RingTag ring, Rational a, Rational b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  normalize();
}

void CycloScalar::normalize() {
  if (ring_.has_xi() || b_.is_zero()) return;
  // xi = 1 (r = 1) or -1 (r = 2)
  if (ring_.r() == 1) {
    a_ += b_;
  } else {
    a_ -= b_;
  }
  b_ = Rational();
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  require_same_ring(ring_, o.ring_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  require_same_ring(ring_, o.ring_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  require_same_ring(ring_, o.ring_);
  if (!ring_.has_xi()) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b x)(c + d x) = ac + bd v + (ad + bc + bd u) x
  const Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  if (!bd.is_zero()) {
    na += bd * Rational(ring_.v());
    if (ring_.u() != 0) nb += bd * Rational(ring_.u());
  }
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& q) {
  a_ *= q;
  b_ *= q;
  return *this;
}

CycloScalar CycloScalar::conj() const {
  if (!ring_.has_xi()) return *this;
  // conj(xi) = u - xi
  return CycloScalar(ring_, a_ + b_ * Rational(ring_.u()), -b_);
}

CycloScalar CycloScalar::inverse() const {
  CRG_CHECK(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  if (!ring_.has_xi()) return CycloScalar(ring_, Rational(1) / a_);
  // x * conj(x) = a(a + b u) - b^2 v is rational.
  const Rational c = a_ + b_ * Rational(ring_.u());
  const Rational norm = a_ * c - b_ * b_ * Rational(ring_.v());
  return CycloScalar(ring_, c / norm, -b_ / norm);
}

CycloScalar CycloScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloScalar result = one(ring_);
  CycloScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CycloScalar root_of_unity(RingTag ring, long m) {
  const int r = ring.r();
  long e = m % r;
  if (e < 0) e += r;
  if (r == 1) return CycloScalar::one(ring);
  if (r == 2) return CycloScalar(ring, e == 0 ? 1 : -1);
  return CycloScalar(ring, Rational(), Rational(1)).pow(e);
}

// ---------------------------------------------------------------- ParamScalar

ParamScalar::ParamScalar(CycloScalar c0) : c0_(std::move(c0)), c1_(c0_.ring()) {}

ParamScalar::ParamScalar(CycloScalar c0, CycloScalar c1) : c0_(std::move(c0)), c1_(std::move(c1)) {
  require_same_ring(c0_.ring(), c1_.ring());
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  c0_ += o.c0_;
  c1_ += o.c1_;
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  c0_ -= o.c0_;
  c1_ -= o.c1_;
  return *this;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  require_same_ring(ring(), o.ring());
  const bool mine = !c1_.is_zero();
  const bool theirs = !o.c1_.is_zero();
  CRG_CHECK(!(mine && theirs), Errc::AlphaSquared, "product would contain alpha^2");
  if (theirs) {
    c1_ = c0_ * o.c1_;
  } else if (mine) {
    c1_ *= o.c0_;
  }
  c0_ *= o.c0_;
  return *this;
}

ParamScalar ParamScalar::inverse() const {
  CRG_CHECK(c1_.is_zero(), Errc::AlphaNotInvertible, "cannot invert a scalar involving alpha");
  return ParamScalar(c0_.inverse());
}

ParamScalar scalar_arith(ScalarOp op, const ParamScalar& x, const ParamScalar& y) {
  switch (op) {
    case ScalarOp::Add: return x + y;
    case ScalarOp::Sub: return x - y;
    case ScalarOp::Mul: return x * y;
    case ScalarOp::Neg: return -x;
  }
  throw Error(Errc::Internal, "unknown scalar op");
}

ParamScalar scalar_inverse(const ParamScalar& x) { return x.inverse(); }

std::vector<Rational> real_coordinates(const ParamScalar& x) {
  std::vector<Rational> out{x.c0().a(), x.c0().b()};
  if (x.has_alpha()) {
    out.push_back(x.c1().a());
    out.push_back(x.c1().b());
  }
  return out;
}

ParamScalar from_real_coordinates(RingTag ring, const std::vector<Rational>& coords) {
  CRG_CHECK(coords.size() == 2 || coords.size() == 4, Errc::DimensionMismatch,
            "expected 2 or 4 coordinates");
  CycloScalar c0(ring, coords[0], coords[1]);
  if (coords.size() == 2) return ParamScalar(c0);
  return ParamScalar(c0, CycloScalar(ring, coords[2], coords[3]));
}

// ---------------------------------------------------------------- text

std::string to_text(const Rational& q) { return q.to_string(); }

namespace {

void append_term(std::string& out, const Rational& coeff, std::string_view monomial) {
  if (coeff.is_zero()) return;
  const bool negative = coeff.sign() < 0;
  const Rational mag = negative ? -coeff : coeff;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += monomial;
  } else {
    out += mag.to_string();
    out += "*";
    out += monomial;
  }
}

}  // namespace

std::string to_text(const CycloScalar& x) {
  std::string out;
  append_term(out, x.a(), "");
  append_term(out, x.b(), "x");
  return out.empty() ? "0" : out;
}

std::string to_text(const ParamScalar& x) {
  std::string out;
  append_term(out, x.c0().a(), "");
  append_term(out, x.c0().b(), "x");
  append_term(out, x.c1().a(), "al");
  append_term(out, x.c1().b(), "x*al");
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(RingTag ring, std::string_view text) : ring_(ring), text_(text) {}

  ParamScalar parse() {
    ParamScalar total(ring_);
    skip_ws();
    CRG_CHECK(pos_ < text_.size(), Errc::ParseError, "empty scalar text");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += parse_term(sign);
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " in '" + std::string(text_) + "'");
  }

  bool try_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  // 0 = none, 1 = x, 2 = al, 3 = x*al
  int parse_monomial() {
    int mask = 0;
    while (true) {
      skip_ws();
      if (try_word("alpha") || try_word("al")) {
        if (mask & 2) fail("repeated alpha");
        mask |= 2;
      } else if (try_word("xi") || try_word("x")) {
        if (mask & 1) fail("repeated xi");
        mask |= 1;
      } else {
        if (mask == 0) fail("expected monomial");
        return mask;
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
      } else {
        return mask;
      }
    }
  }

  ParamScalar parse_term(int sign) {
    Rational coeff(sign);
    int mask = 0;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
        ++pos_;
      }
      coeff *= Rational::parse(text_.substr(start, pos_ - start));
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        mask = parse_monomial();
      }
    } else {
      mask = parse_monomial();
    }
    const CycloScalar c = (mask & 1) ? CycloScalar(ring_, Rational(), coeff) : CycloScalar(ring_, coeff);
    if (mask & 2) return ParamScalar(CycloScalar::zero(ring_), c);
    return ParamScalar(c);
  }

  RingTag ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamScalar parse_scalar(RingTag ring, std::string_view text) {
  return ScalarParser(ring, text).parse();
}

bool scalar_less(const ParamScalar& x, const ParamScalar& y) {
  const Rational* lhs[4] = {&x.c0().a(), &x.c0().b(), &x.c1().a(), &x.c1().b()};
  const Rational* rhs[4] = {&y.c0().a(), &y.c0().b(), &y.c1().a(), &y.c1().b()};
  for (int i = 0; i < 4; ++i) {
    if (*lhs[i] < *rhs[i]) return true;
    if (*rhs[i] < *lhs[i]) return false;
  }
  return false;
}

}  // namespace crg
