#pragma once

// Z-lattices in C^n and Z-modules of scalars, both handled through the
// flattening of each scalar c0 + c1*alpha to its four rational coordinates.

#include <optional>
#include <string>
#include <vector>

#include "crg/affine.hpp"
#include "crg/linalg.hpp"

namespace crg {

// Coefficient rings attached to lattice generators.
enum class CoeffRing {
  Zxi,             // Z[xi]
  Z2xi,            // Z[2xi] = Z + 2xi Z
  ZAlpha,          // Z + Z alpha
  ZAlphaHalf,      // Z + Z alpha/2
  HalfZAlpha,      // (1/2)Z + Z alpha
  ZOnePlusAlphaHalf,   // Z + Z (1+alpha)/2
  HalfOfZAlpha,    // (1/2)(Z + Z alpha)
  ZAlphaThird,     // Z + Z alpha/3
  ZOnePlusAlphaThird,  // Z + Z (1+alpha)/3
  ZTwoPlusAlphaThird,  // Z + Z (2+alpha)/3
};

std::vector<ParamScalar> coefficient_basis(CoeffRing ring, RingTag tag);
std::string to_text(CoeffRing ring);

// Four rational coordinates (c0.a, c0.b, c1.a, c1.b) per scalar.
QVector flatten(const ParamScalar& x);
QVector flatten(const Vector& v);
ParamScalar unflatten_scalar(RingTag ring, const QVector& flat, std::size_t offset = 0);
Vector unflatten(RingTag ring, const QVector& flat);

// Membership data for a full-column-rank set of rational columns Z:
// x is an integer combination iff null*x == 0 and proj*x is integral.
class IntegralSpan {
 public:
  IntegralSpan() = default;
  IntegralSpan(const QMatrix& basis_rows, std::size_t cols);

  std::size_t rank() const { return proj_.size(); }
  bool in_rational_span(const QVector& x) const;
  bool contains(const QVector& x) const;
  // Integer coordinates when x is a member.
  std::optional<std::vector<mpz_class>> coordinates(const QVector& x) const;
  const QMatrix& proj() const { return proj_; }
  const QMatrix& null() const { return null_; }

 private:
  QMatrix proj_;
  QMatrix null_;
};

// A Z-submodule of Q(xi) + Q(xi) alpha with a canonical Z-basis.
class ScalarModule {
 public:
  ScalarModule() : span_(QMatrix{}, 4) {}
  explicit ScalarModule(RingTag ring) : ring_(ring), span_(QMatrix{}, 4) {}
  // Z-span of arbitrary (possibly dependent) scalars.
  ScalarModule(RingTag ring, const std::vector<ParamScalar>& spanning);

  RingTag ring() const { return ring_; }
  const std::vector<ParamScalar>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const ParamScalar& x) const;
  ScalarModule scaled(const CycloScalar& c) const;
  // other is a submodule of this.
  bool includes(const ScalarModule& other) const;
  friend bool operator==(const ScalarModule& a, const ScalarModule& b) {
    return a.includes(b) && b.includes(a);
  }

 private:
  RingTag ring_;
  std::vector<ParamScalar> gens_;
  IntegralSpan span_;
};

bool module_contains(const ScalarModule& m, const ParamScalar& x);
std::string to_text(const ScalarModule& m);

struct LatticeGenerator {
  Vector v;
  CoeffRing coeffs = CoeffRing::Zxi;
};

class Lattice {
 public:
  Lattice() = default;
  // Throws RankDeficient unless the span has exactly expected_rank over Z.
  Lattice(std::size_t n, RingTag ring, std::vector<LatticeGenerator> gens, std::size_t expected_rank);

  std::size_t dim() const { return n_; }
  RingTag ring() const { return ring_; }
  std::size_t rank() const { return zbasis_.size(); }
  bool uses_alpha() const { return uses_alpha_; }
  const std::vector<Vector>& zbasis() const { return zbasis_; }
  const std::vector<LatticeGenerator>& generators() const { return gens_; }

  bool contains(const Vector& v) const;
  std::optional<std::vector<mpz_class>> coordinates(const Vector& v) const;
  bool is_invariant(const MonomialMatrix& m) const;
  // {t : t*w in the lattice}.
  ScalarModule line_intersection(const Vector& w) const;

 private:
  std::size_t n_ = 0;
  RingTag ring_;
  std::vector<LatticeGenerator> gens_;
  std::vector<Vector> zbasis_;
  IntegralSpan span_;
  bool uses_alpha_ = false;
};

Lattice lattice_from_generators(std::size_t n, RingTag ring, std::vector<LatticeGenerator> gens,
                                std::size_t expected_rank);

}  // namespace crg
