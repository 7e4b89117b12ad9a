#pragma once

// The reflecting-hyperplane arrangement of a cataloged group, organized as
// finitely many families {form = c : c in module}.

#include <optional>
#include <string>
#include <vector>

#include "crg/catalog.hpp"

namespace crg {

struct HyperplaneBranch {
  CycloScalar eigenvalue;   // eigenvalue of the linear part on the root line
  ScalarModule constants;  // admissible c in {form = c}
};

struct HyperplaneFamily {
  LinearForm form;
  std::vector<HyperplaneBranch> branches;
};

struct Witness {
  AffineMap reflection;
  std::size_t family = 0;
  std::size_t branch = 0;
  LinearForm form;
  ParamScalar constant;
};

std::vector<HyperplaneFamily> reflection_families(const GroupSpec& w);

// A group together with its cached families.
class Arrangement {
 public:
  explicit Arrangement(GroupSpec w);

  const GroupSpec& group() const { return group_; }
  const std::vector<HyperplaneFamily>& families() const { return families_; }
  // Lambda is invariant under all of G(r,1,n).
  bool fully_invariant() const { return fully_invariant_; }
  // x1 of the line through e1 - e2 (zero module when n = 1).
  const ScalarModule& difference_module() const { return difference_module_; }

  // Families whose form is constant along the given directions.
  std::vector<std::size_t> constant_families(const std::vector<Vector>& directions) const;

  std::optional<Witness> point_on(const Vector& u) const;
  std::optional<Witness> subspace_on(const AffineSubspace& a) const;
  std::optional<Witness> subspace_on(const AffineSubspace& a,
                                     const std::vector<std::size_t>& candidates) const;

  // Throws ConstantNotAdmissible.
  AffineMap witness_reflection(std::size_t family, std::size_t branch, const ParamScalar& c) const;
  // Searches the branches of the family; throws ConstantNotAdmissible.
  Witness witness_for(std::size_t family, const ParamScalar& c) const;
  // Index of the family with the given form.
  std::optional<std::size_t> find_family(const LinearForm& form) const;

 private:
  GroupSpec group_;
  std::vector<HyperplaneFamily> families_;
  bool fully_invariant_ = false;
  ScalarModule difference_module_;
};

std::optional<Witness> point_on_arrangement(const GroupSpec& w, const Vector& u);
std::optional<Witness> subspace_on_arrangement(const GroupSpec& w, const AffineSubspace& a);
AffineMap witness_reflection(const GroupSpec& w, const HyperplaneFamily& family, const ParamScalar& c);

// Exact test of a + b*xi against the box [-R, R]^2 in the complex plane.
bool in_box(const CycloScalar& z, const Rational& radius);
std::pair<double, double> complex_position(const CycloScalar& z);
// Points of a rank-2 module (no alpha) inside the box, sorted.
std::vector<CycloScalar> module_points_in_box(const ScalarModule& m, const Rational& radius);

struct Rank1Window {
  Rational radius;
  std::vector<CycloScalar> lattice_points;
  std::vector<CycloScalar> hyperplane_points;
};

// Throws NotRankOne for n != 1 and InvalidParameters for alpha lattices.
Rank1Window rank1_window(const GroupSpec& w, const Rational& radius);

}  // namespace crg
