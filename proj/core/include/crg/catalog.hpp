#pragma once

// The catalog of crystallographic groups G(r,p,n) x| Lambda: group ids, lattices,
// linear generators, expected verdicts and known counterexample elements.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crg/affine.hpp"
#include "crg/lattices.hpp"

namespace crg {

struct GroupId {
  bool genuine = true;
  bool weyl_a = false;  // [W(A_{n-1})]^a_1, linear part G(1,1,n)
  int r = 1;
  int p = 1;
  int n = 1;
  int k = 1;

  bool uses_alpha() const { return !genuine; }
  // "[G(4,2,2)]_3", "[G(2,1,3)]^a_5", "[W(A2)]^a_1".
  std::string name() const;
  friend bool operator==(const GroupId&, const GroupId&) = default;
};

// Accepts the bracketed notation (with ^a, ^alpha or the Greek letter) and the
// ASCII aliases "G(6,3,2):2", "G(2,1,3):a:3", "W(A2):a:1". Aliased indices are
// canonicalized. Throws UnknownGroup.
GroupId parse_group_id(std::string_view text);
// Throws UnknownGroup when the id is not a catalog row.
void validate_group_id(const GroupId& id);
GroupId genuine_id(int r, int p, int n, int k);
GroupId nongenuine_id(int r, int p, int n, int k);
GroupId weyl_a_id(int n);

struct GroupSpec {
  GroupId id;
  RingTag ring;
  Lattice lattice;
  std::vector<MonomialMatrix> linear_generators;
  bool expected_steinberg = true;
  std::optional<AffineMap> counterexample;

  int r() const { return id.r; }
  int p() const { return id.p; }
  std::size_t n() const { return static_cast<std::size_t>(id.n); }
};

std::vector<MonomialMatrix> generators_of_linear_part(int r, int p, int n);
std::vector<MonomialMatrix> enumerate_linear_group(int r, int p, int n, std::size_t cap = 100000);
bool in_linear_group(int r, int p, const MonomialMatrix& m);

GroupSpec build_group(const GroupId& id);
bool is_member(const GroupSpec& w, const AffineMap& g);

// Every catalog row at its smallest admissible dimension.
std::vector<GroupId> catalog_rows();

}  // namespace crg
