#include "crg/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace crg {

std::string GroupId::name() const {
  if (weyl_a) return "[W(A" + std::to_string(n - 1) + ")]^a_" + std::to_string(k);
  std::string s = "[G(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ")]";
  if (!genuine) s += "^a";
  return s + "_" + std::to_string(k);
}

GroupId genuine_id(int r, int p, int n, int k) { return {true, false, r, p, n, k}; }
GroupId nongenuine_id(int r, int p, int n, int k) { return {false, false, r, p, n, k}; }
GroupId weyl_a_id(int n) { return {false, true, 1, 1, n, 1}; }

namespace {

[[noreturn]] void unknown(const GroupId& id) {
  throw Error(Errc::UnknownGroup, "no catalog row for " + id.name());
}

bool genuine_row_exists(int r, int p, int n, int k) {
  if (n < 1) return false;
  if (n == 1) return p == 1 && k == 1 && (r == 3 || r == 4 || r == 6);
  switch (r) {
    case 3:
      if (p == 1) return k == 1 || k == 2;
      if (p == 3) return n >= 3 && k == 1;
      return false;
    case 4:
      if (p == 1) return k == 1 || k == 2;
      if (p == 2) return k == 1 || k == 2 || (k == 3 && n == 2);
      if (p == 4) return n >= 3 && k == 1;
      return false;
    case 6:
      if (p == 1) return k == 1;
      if (p == 2 || p == 3) return k == 1 || (k == 2 && n == 2);
      if (p == 6) return n >= 3 && k == 1;
      return false;
    default:
      return false;
  }
}

bool nongenuine_row_exists(int r, int p, int n, int k) {
  if (r == 2 && p == 1) {
    if (n == 1) return k == 1;
    if (n == 2) return k == 1 || k == 2 || k == 4;
    return n >= 3 && k >= 1 && k <= 5;
  }
  if (r == 2 && p == 2) return n >= 3 && k == 1;
  if (r == 6 && p == 6) return n == 2 && k >= 1 && k <= 4;
  return false;
}

GroupId canonicalize(GroupId id) {
  // In rank 2 the index-3 and index-5 lattices coincide up to equivalence with 4 and 1.
  if (!id.genuine && !id.weyl_a && id.r == 2 && id.p == 1 && id.n == 2) {
    if (id.k == 3) id.k = 4;
    if (id.k == 5) id.k = 1;
  }
  return id;
}

}  // namespace

void validate_group_id(const GroupId& id) {
  if (id.weyl_a) {
    if (id.n < 3 || id.k != 1 || id.r != 1 || id.p != 1 || id.genuine) unknown(id);
    return;
  }
  const bool ok = id.genuine ? genuine_row_exists(id.r, id.p, id.n, id.k)
                             : nongenuine_row_exists(id.r, id.p, id.n, id.k);
  if (!ok) unknown(id);
}

GroupId parse_group_id(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  static const std::regex bracket_g(
      R"(\[G\((\d+),(\d+),(\d+)\)\](\^(?:a|alpha|\xCE\xB1))?_\{?(\d+)\}?)");
  static const std::regex bracket_w(R"(\[W\(A\(?(\d+)\)?\)\]\^(?:a|alpha|\xCE\xB1)_\{?(\d+)\}?)");
  static const std::regex ascii_g(R"(G\((\d+),(\d+),(\d+)\)(:a)?:(\d+))");
  static const std::regex ascii_w(R"(W\(A\(?(\d+)\)?\):a:(\d+))");

  auto num = [](const std::ssub_match& m) {
    const std::string t = m.str();
    if (t.size() > 4) throw Error(Errc::UnknownGroup, "index out of range: " + t);
    return std::stoi(t);
  };

  std::smatch m;
  GroupId id;
  if (std::regex_match(s, m, bracket_g) || std::regex_match(s, m, ascii_g)) {
    id.genuine = !m[4].matched;
    id.r = num(m[1]);
    id.p = num(m[2]);
    id.n = num(m[3]);
    id.k = num(m[5]);
  } else if (std::regex_match(s, m, bracket_w) || std::regex_match(s, m, ascii_w)) {
    id = weyl_a_id(num(m[1]) + 1);
    id.k = num(m[2]);
  } else {
    throw Error(Errc::UnknownGroup, "cannot parse group name '" + std::string(text) + "'");
  }
  id = canonicalize(id);
  validate_group_id(id);
  return id;
}

// ---------------------------------------------------------------- linear parts

std::vector<MonomialMatrix> generators_of_linear_part(int r, int p, int n) {
  CRG_CHECK(n >= 1 && p >= 1 && r >= 1 && r % p == 0, Errc::InvalidParameters,
            "need p | r and n >= 1");
  const RingTag ring(r);
  std::vector<MonomialMatrix> gens;
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[j], perm[j + 1]);
    gens.emplace_back(ring, perm, std::vector<int>(n, 0));
  }
  if (p < r) {
    std::vector<int> exps(n, 0);
    exps[0] = p;
    gens.push_back(MonomialMatrix::diagonal(ring, exps));
  }
  if (p > 1 && n >= 2) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[1]);
    std::vector<int> exps(n, 0);
    exps[0] = -1;
    exps[1] = 1;
    gens.emplace_back(ring, perm, exps);
  }
  return gens;
}

bool in_linear_group(int r, int p, const MonomialMatrix& m) {
  return m.ring().r() == r && m.weight_exponent() % p == 0;
}

std::vector<MonomialMatrix> enumerate_linear_group(int r, int p, int n, std::size_t cap) {
  CRG_CHECK(n >= 1 && p >= 1 && r % p == 0, Errc::InvalidParameters, "need p | r and n >= 1");
  double count = 1;
  for (int i = 1; i <= n; ++i) count *= static_cast<double>(r) * i;
  count /= p;
  CRG_CHECK(count <= static_cast<double>(cap), Errc::TooLarge,
            "group order " + std::to_string(static_cast<long long>(count)) + " exceeds cap");
  const RingTag ring(r);
  std::vector<MonomialMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> exps(n, 0);
    while (true) {
      int s = 0;
      for (int e : exps) s += e;
      if (s % p == 0) out.emplace_back(ring, perm, exps);
      int j = n - 1;
      while (j >= 0 && exps[j] == r - 1) exps[j--] = 0;
      if (j < 0) break;
      ++exps[j];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------- lattices

namespace {

Vector vec(RingTag ring, std::vector<ParamScalar> c) { return Vector(ring, std::move(c)); }

// e_{j-1} - e_j for j = 2..n (0-based: e_{j-1} - e_j for j = 1..n-1).
std::vector<LatticeGenerator> differences(RingTag ring, int n, const ParamScalar& scale, CoeffRing cr) {
  std::vector<LatticeGenerator> out;
  for (int j = 1; j < n; ++j) {
    Vector v(ring, n);
    v[j - 1] = scale;
    v[j] = -scale;
    out.push_back({v, cr});
  }
  return out;
}

Vector xi_e1_minus_e2(RingTag ring, int n) {
  Vector v(ring, n);
  v[0] = ParamScalar(root_of_unity(ring, 1));
  v[1] = -ParamScalar::one(ring);
  return v;
}

Vector scaled_e1_minus_e2(RingTag ring, int n, const ParamScalar& c) {
  Vector v(ring, n);
  v[0] = c;
  v[1] = -c;
  return v;
}

CoeffRing alpha_ring_for_b_index(int k) {
  switch (k) {
    case 1: return CoeffRing::ZAlpha;
    case 2: return CoeffRing::ZOnePlusAlphaHalf;
    case 3: return CoeffRing::HalfZAlpha;
    case 4: return CoeffRing::ZAlphaHalf;
    case 5: return CoeffRing::HalfOfZAlpha;
  }
  throw Error(Errc::Internal, "bad index");
}

CoeffRing alpha_ring_for_dihedral_index(int k) {
  switch (k) {
    case 1: return CoeffRing::ZAlpha;
    case 2: return CoeffRing::ZAlphaThird;
    case 3: return CoeffRing::ZOnePlusAlphaThird;
    case 4: return CoeffRing::ZTwoPlusAlphaThird;
  }
  throw Error(Errc::Internal, "bad index");
}

Lattice build_lattice(const GroupId& id, RingTag ring) {
  const int n = id.n;
  const ParamScalar one = ParamScalar::one(ring);
  const std::size_t full = 2 * static_cast<std::size_t>(n);
  std::vector<LatticeGenerator> gens;
  auto append = [&gens](std::vector<LatticeGenerator> more) {
    gens.insert(gens.end(), more.begin(), more.end());
  };

  if (id.weyl_a) {
    append(differences(ring, n, one, CoeffRing::ZAlpha));
    return Lattice(n, ring, gens, full - 2);
  }

  if (!id.genuine) {
    if (id.r == 2 && id.p == 1) {
      gens.push_back({Vector::unit(ring, n, 0), CoeffRing::ZAlpha});
      append(differences(ring, n, one, alpha_ring_for_b_index(id.k)));
    } else if (id.r == 2 && id.p == 2) {
      Vector v(ring, n);
      v[0] = -one;
      v[1] = -one;
      gens.push_back({v, CoeffRing::ZAlpha});
      append(differences(ring, n, one, CoeffRing::ZAlpha));
    } else {
      // (1 + xi)(e1 - e2): the swap-invariant choice, matching the counterexamples.
      gens.push_back({xi_e1_minus_e2(ring, n), CoeffRing::ZAlpha});
      const ParamScalar c(CycloScalar::one(ring) + root_of_unity(ring, 1));
      gens.push_back({scaled_e1_minus_e2(ring, n, c), alpha_ring_for_dihedral_index(id.k)});
    }
    return Lattice(n, ring, gens, full);
  }

  const CycloScalar xi = root_of_unity(ring, 1);
  const CycloScalar c_one = CycloScalar::one(ring);
  if (id.p == 1) {
    gens.push_back({Vector::unit(ring, n, 0), CoeffRing::Zxi});
    const ParamScalar scale = id.k == 2 ? ParamScalar((c_one - xi).inverse()) : one;
    append(differences(ring, n, scale, CoeffRing::Zxi));
  } else if (id.k == 1 || (id.r == 4 && id.p == 2 && id.k == 2)) {
    gens.push_back({xi_e1_minus_e2(ring, n), CoeffRing::Zxi});
    append(differences(ring, n, one, CoeffRing::Zxi));
    if (id.k == 2) gens.push_back({Vector::unit(ring, n, n - 1), CoeffRing::Zxi});
  } else if (id.r == 6 && id.p == 3 && id.k == 2) {
    gens.push_back({xi_e1_minus_e2(ring, n), CoeffRing::Z2xi});
    gens.push_back({scaled_e1_minus_e2(ring, n, ParamScalar(c_one - xi)), CoeffRing::Z2xi});
  } else {
    // [G(4,2,2)]_3 and [G(6,2,2)]_2
    gens.push_back({xi_e1_minus_e2(ring, n), CoeffRing::Zxi});
    gens.push_back({scaled_e1_minus_e2(ring, n, ParamScalar(c_one + xi)), CoeffRing::Zxi});
  }
  return Lattice(n, ring, gens, full);
}

bool expected_verdict(const GroupId& id) {
  if (id.weyl_a) return true;
  if (id.genuine) {
    if (id.r == 3 && id.p == 1 && id.k == 2) return false;
    if (id.p == id.r && id.n >= 3) return false;
    if (id.r == 6 && id.p == 3 && id.k == 2) return false;
    return true;
  }
  if (id.r == 2 && id.p == 1) return id.k == 1;
  if (id.r == 2 && id.p == 2) return id.n == 3;
  return false;
}

// Tabled element data: diagonal exponents and translation, extended by the identity.
AffineMap extend(RingTag ring, int n, std::vector<int> exps, std::vector<ParamScalar> tran) {
  CRG_CHECK(static_cast<int>(exps.size()) <= n, Errc::Internal, "counterexample too large");
  exps.resize(n, 0);
  tran.resize(n, ParamScalar::zero(ring));
  return {MonomialMatrix::diagonal(ring, exps), vec(ring, std::move(tran))};
}

std::optional<AffineMap> tabled_counterexample(const GroupId& id, RingTag ring) {
  if (expected_verdict(id)) return std::nullopt;
  const int n = id.n;
  const ParamScalar one = ParamScalar::one(ring);
  const ParamScalar al = ParamScalar::alpha(ring);
  const Rational half(1, 2);
  const CycloScalar xi = root_of_unity(ring, 1);
  if (id.genuine) {
    if (id.r == 3 && id.p == 1) {
      const ParamScalar c((CycloScalar::one(ring) - xi).inverse());
      return extend(ring, n, {1, 1}, {c, -c});
    }
    if (id.r == 3 && id.p == 3) return extend(ring, n, {1, 1, 1}, {one, -one});
    if (id.r == 4 && id.p == 4) return extend(ring, n, {1, 2, 1}, {one, -one});
    if (id.r == 6 && id.p == 3) {
      const ParamScalar omega(root_of_unity(ring, 2));
      return extend(ring, n, {3, 3}, {one, omega - one});
    }
    if (id.r == 6 && id.p == 6) return extend(ring, n, {2, 3, 1}, {one, -one});
  } else if (id.r == 2 && id.p == 1) {
    switch (id.k) {
      case 2: return extend(ring, n, {1, 1}, {half * (Rational(3) * one + al), -(half * (one + al))});
      case 3: return extend(ring, n, {1, 1}, {half * (Rational(2) * al + one), -(half * one)});
      case 4: return extend(ring, n, {1, 1}, {half * (Rational(2) * one + al), -(half * al)});
      case 5:
        return extend(ring, n, {1, 1, 1},
                      {half * (Rational(3) * one + al), -(half * al), -(half * one)});
    }
  } else if (id.r == 2 && id.p == 2) {
    return extend(ring, n, {1, 1, 1, 1}, {one, one + al, -al});
  } else if (id.r == 6 && id.p == 6) {
    // c = alpha, alpha/3, (1+alpha)/3, (2+alpha)/3
    static const int shifts[] = {0, 0, 1, 2};
    const Rational scale = id.k == 1 ? Rational(1) : Rational(1, 3);
    const ParamScalar c = scale * (Rational(shifts[id.k - 1]) * one + al);
    const ParamScalar one_xi(CycloScalar::one(ring) + xi);
    return extend(ring, n, {3, 3}, {ParamScalar(xi) + c * one_xi, -one - c * one_xi});
  }
  throw Error(Errc::Internal, "no counterexample recorded for " + id.name());
}

}  // namespace

GroupSpec build_group(const GroupId& id) {
  validate_group_id(id);
  GroupSpec spec;
  spec.id = id;
  spec.ring = RingTag(id.r);
  spec.lattice = build_lattice(id, spec.ring);
  spec.linear_generators = generators_of_linear_part(id.r, id.p, id.n);
  spec.expected_steinberg = expected_verdict(id);
  spec.counterexample = tabled_counterexample(id, spec.ring);
  return spec;
}

bool is_member(const GroupSpec& w, const AffineMap& g) {
  if (g.size() != w.n() || !(g.lin.ring() == w.ring)) return false;
  return in_linear_group(w.r(), w.p(), g.lin) && w.lattice.contains(g.tran);
}

std::vector<GroupId> catalog_rows() {
  return {
      genuine_id(3, 1, 1, 1),    genuine_id(4, 1, 1, 1),    genuine_id(6, 1, 1, 1),
      genuine_id(3, 1, 2, 1),    genuine_id(3, 1, 2, 2),    genuine_id(3, 3, 3, 1),
      genuine_id(4, 1, 2, 1),    genuine_id(4, 1, 2, 2),    genuine_id(4, 2, 2, 1),
      genuine_id(4, 2, 2, 2),    genuine_id(4, 2, 2, 3),    genuine_id(4, 4, 3, 1),
      genuine_id(6, 1, 2, 1),    genuine_id(6, 2, 2, 1),    genuine_id(6, 3, 2, 1),
      genuine_id(6, 2, 2, 2),    genuine_id(6, 3, 2, 2),    genuine_id(6, 6, 3, 1),
      weyl_a_id(3),              nongenuine_id(2, 1, 1, 1), nongenuine_id(2, 1, 2, 1),
      nongenuine_id(2, 1, 2, 2), nongenuine_id(2, 1, 3, 3), nongenuine_id(2, 1, 2, 4),
      nongenuine_id(2, 1, 3, 5), nongenuine_id(2, 2, 3, 1), nongenuine_id(2, 2, 4, 1),
      nongenuine_id(6, 6, 2, 1), nongenuine_id(6, 6, 2, 2), nongenuine_id(6, 6, 2, 3),
      nongenuine_id(6, 6, 2, 4),
  };
}

}  // namespace crg
