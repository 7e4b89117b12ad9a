#pragma once

// Vectors in C^n, monomial linear parts, affine maps v -> Lin v + Tran and
// their fixed spaces.

#include <optional>
#include <string>
#include <vector>

#include "crg/scalars.hpp"

namespace crg {

class Vector {
 public:
  Vector() = default;
  Vector(RingTag ring, std::size_t n) : ring_(ring), coords_(n, ParamScalar(ring)) {}
  Vector(RingTag ring, std::vector<ParamScalar> coords);

  static Vector unit(RingTag ring, std::size_t n, std::size_t j);

  RingTag ring() const { return ring_; }
  std::size_t size() const { return coords_.size(); }
  const ParamScalar& operator[](std::size_t j) const { return coords_[j]; }
  ParamScalar& operator[](std::size_t j) { return coords_[j]; }
  const std::vector<ParamScalar>& coords() const { return coords_; }

  bool is_zero() const;
  bool has_alpha() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const ParamScalar& s, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b) {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

 private:
  RingTag ring_;
  std::vector<ParamScalar> coords_;
};

std::string to_text(const Vector& v);

// Column j is sent to xi^{exps[j]} e_{perm[j]}; exponents are kept in [0, r).
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(RingTag ring, std::vector<int> perm, std::vector<int> exps);

  static MonomialMatrix identity(RingTag ring, std::size_t n);
  static MonomialMatrix diagonal(RingTag ring, std::vector<int> exps);

  RingTag ring() const { return ring_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& exps() const { return exps_; }
  CycloScalar weight(std::size_t j) const { return root_of_unity(ring_, exps_[j]); }

  bool is_identity() const;
  bool is_diagonal() const;
  // Sum of weight exponents mod r (the weight product is xi^this).
  int weight_exponent() const;
  long order() const;
  // Dimension of the fixed space: cycles whose weight product is 1.
  std::size_t fixed_dimension() const;
  std::vector<std::vector<int>> cycles() const;

  Vector apply(const Vector& v) const;
  MonomialMatrix inverse() const;
  MonomialMatrix pow(long k) const;
  // Dense entry (row i, column j).
  CycloScalar entry(std::size_t i, std::size_t j) const;

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.ring_ == b.ring_ && a.perm_ == b.perm_ && a.exps_ == b.exps_;
  }
  friend bool operator<(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.perm_ != b.perm_ ? a.perm_ < b.perm_ : a.exps_ < b.exps_;
  }

 private:
  RingTag ring_;
  std::vector<int> perm_;
  std::vector<int> exps_;
};

bool is_central_reflection(const MonomialMatrix& m);
// Cycle notation (1-based) followed by the weight exponents, e.g. "(1 2) w=[0,1]".
std::string to_text(const MonomialMatrix& m);

// x_j, or x_j - xi^m x_k with j < k (0-based).
struct LinearForm {
  enum class Kind { Coordinate, Difference };
  Kind kind = Kind::Coordinate;
  int j = 0;
  int k = 0;
  int m = 0;

  static LinearForm coordinate(int j) { return {Kind::Coordinate, j, 0, 0}; }
  static LinearForm difference(int j, int k, int m) { return {Kind::Difference, j, k, m}; }

  ParamScalar evaluate(const Vector& v) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_text(const LinearForm& f);

struct AffineMap {
  MonomialMatrix lin;
  Vector tran;

  static AffineMap identity(RingTag ring, std::size_t n);
  static AffineMap translation(const Vector& t);

  std::size_t size() const { return tran.size(); }
  Vector apply(const Vector& v) const { return lin.apply(v) + tran; }
  bool is_identity() const { return lin.is_identity() && tran.is_zero(); }
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.lin == b.lin && a.tran == b.tran;
  }
};

std::string to_text(const AffineMap& g);

AffineMap compose(const AffineMap& g, const AffineMap& h);
AffineMap inverse(const AffineMap& g);
AffineMap power(const AffineMap& g, long k);

// base + span(directions); `empty` marks the empty set.
struct AffineSubspace {
  bool empty = true;
  Vector base;
  std::vector<Vector> directions;

  bool is_point() const { return !empty && directions.empty(); }
  std::size_t dimension() const { return directions.size(); }
};

// Solves (1 - L) u = t for a fixed monomial L; the factorization is reused
// across right-hand sides.
class FixedPointSolver {
 public:
  explicit FixedPointSolver(const MonomialMatrix& lin);

  const MonomialMatrix& lin() const { return lin_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<Vector>& kernel() const { return kernel_; }

  // Residuals of the consistency equations; all zero iff a solution exists.
  std::vector<ParamScalar> residual(const Vector& t) const;
  bool solvable(const Vector& t) const;
  // Particular solution with free coordinates zero; nullopt when inconsistent.
  std::optional<Vector> particular(const Vector& t) const;
  AffineSubspace solve(const Vector& t) const;

 private:
  MonomialMatrix lin_;
  std::size_t n_ = 0;
  std::vector<std::vector<CycloScalar>> transform_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> kernel_;
};

AffineSubspace fixed_space(const AffineMap& g);
bool has_finite_order(const AffineMap& g);
bool is_reflection(const AffineMap& g);
bool subspace_satisfies_form(const AffineSubspace& a, const LinearForm& form, const ParamScalar& c);
// Whether the form takes one value on the subspace (vanishes on directions).
bool form_constant_on(const std::vector<Vector>& directions, const LinearForm& form);
bool contains_point(const AffineSubspace& a, const Vector& v);

}  // namespace crg
