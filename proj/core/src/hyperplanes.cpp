#include "crg/hyperplanes.hpp"

#include <algorithm>
#include <cmath>

namespace crg {

namespace {

int exponent_of(RingTag ring, const CycloScalar& root) {
  for (int e = 0; e < ring.r(); ++e) {
    if (root_of_unity(ring, e) == root) return e;
  }
  throw Error(Errc::Internal, "not a root of unity: " + to_text(root));
}

Vector root_direction(RingTag ring, std::size_t n, const LinearForm& f) {
  Vector w = Vector::unit(ring, n, f.j);
  if (f.kind == LinearForm::Kind::Difference) w[f.k] = -ParamScalar(root_of_unity(ring, -f.m));
  return w;
}

}  // namespace

std::vector<HyperplaneFamily> reflection_families(const GroupSpec& w) {
  const RingTag ring = w.ring;
  const std::size_t n = w.n();
  const int r = w.r();
  const int p = w.p();
  std::vector<HyperplaneFamily> out;

  for (std::size_t j = 0; j < n; ++j) {
    HyperplaneFamily fam{LinearForm::coordinate(static_cast<int>(j)), {}};
    const ScalarModule line = w.lattice.line_intersection(Vector::unit(ring, n, j));
    for (int t = 1; t < r / p; ++t) {
      const CycloScalar lambda = root_of_unity(ring, static_cast<long>(p) * t);
      const CycloScalar scale = (CycloScalar::one(ring) - lambda).inverse();
      fam.branches.push_back({lambda, line.scaled(scale)});
    }
    if (!fam.branches.empty()) out.push_back(std::move(fam));
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (int m = 0; m < r; ++m) {
        const LinearForm f = LinearForm::difference(static_cast<int>(j), static_cast<int>(k), m);
        const ScalarModule constants = w.lattice.line_intersection(root_direction(ring, n, f));
        out.push_back({f, {{-CycloScalar::one(ring), constants}}});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- Arrangement

Arrangement::Arrangement(GroupSpec w) : group_(std::move(w)) {
  families_ = reflection_families(group_);
  fully_invariant_ = true;
  for (const auto& g : generators_of_linear_part(group_.r(), 1, static_cast<int>(group_.n()))) {
    if (!group_.lattice.is_invariant(g)) {
      fully_invariant_ = false;
      break;
    }
  }
  difference_module_ = ScalarModule(group_.ring);
  if (group_.n() >= 2) {
    Vector d(group_.ring, group_.n());
    d[0] = ParamScalar::one(group_.ring);
    d[1] = -ParamScalar::one(group_.ring);
    difference_module_ = group_.lattice.line_intersection(d);
  }
}

std::vector<std::size_t> Arrangement::constant_families(const std::vector<Vector>& directions) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (form_constant_on(directions, families_[i].form)) out.push_back(i);
  }
  return out;
}

std::optional<Witness> Arrangement::subspace_on(const AffineSubspace& a,
                                                const std::vector<std::size_t>& candidates) const {
  CRG_CHECK(!a.empty, Errc::EmptySubspace, "subspace is empty");
  for (std::size_t i : candidates) {
    const ParamScalar c = families_[i].form.evaluate(a.base);
    for (std::size_t b = 0; b < families_[i].branches.size(); ++b) {
      if (families_[i].branches[b].constants.contains(c)) {
        return Witness{witness_reflection(i, b, c), i, b, families_[i].form, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> Arrangement::subspace_on(const AffineSubspace& a) const {
  CRG_CHECK(!a.empty, Errc::EmptySubspace, "subspace is empty");
  return subspace_on(a, constant_families(a.directions));
}

std::optional<Witness> Arrangement::point_on(const Vector& u) const {
  AffineSubspace a;
  a.empty = false;
  a.base = u;
  return subspace_on(a);
}

AffineMap Arrangement::witness_reflection(std::size_t family, std::size_t branch,
                                          const ParamScalar& c) const {
  const HyperplaneFamily& fam = families_.at(family);
  const HyperplaneBranch& br = fam.branches.at(branch);
  if (!br.constants.contains(c)) {
    throw Error(Errc::ConstantNotAdmissible,
                to_text(c) + " is not an admissible constant for " + to_text(fam.form));
  }
  const RingTag ring = group_.ring;
  const std::size_t n = group_.n();
  const LinearForm& f = fam.form;
  if (f.kind == LinearForm::Kind::Coordinate) {
    std::vector<int> exps(n, 0);
    exps[f.j] = exponent_of(ring, br.eigenvalue);
    Vector t(ring, n);
    t[f.j] = (CycloScalar::one(ring) - br.eigenvalue) * c;
    return {MonomialMatrix::diagonal(ring, exps), t};
  }
  std::vector<int> perm(n), exps(n, 0);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::swap(perm[f.j], perm[f.k]);
  exps[f.j] = -f.m;
  exps[f.k] = f.m;
  return {MonomialMatrix(ring, perm, exps), c * root_direction(ring, n, f)};
}

Witness Arrangement::witness_for(std::size_t family, const ParamScalar& c) const {
  const HyperplaneFamily& fam = families_.at(family);
  for (std::size_t b = 0; b < fam.branches.size(); ++b) {
    if (fam.branches[b].constants.contains(c)) {
      return Witness{witness_reflection(family, b, c), family, b, fam.form, c};
    }
  }
  throw Error(Errc::ConstantNotAdmissible,
              to_text(c) + " is not an admissible constant for " + to_text(fam.form));
}

std::optional<std::size_t> Arrangement::find_family(const LinearForm& form) const {
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].form == form) return i;
  }
  return std::nullopt;
}

std::optional<Witness> point_on_arrangement(const GroupSpec& w, const Vector& u) {
  return Arrangement(w).point_on(u);
}

std::optional<Witness> subspace_on_arrangement(const GroupSpec& w, const AffineSubspace& a) {
  return Arrangement(w).subspace_on(a);
}

AffineMap witness_reflection(const GroupSpec& w, const HyperplaneFamily& family, const ParamScalar& c) {
  const Arrangement arr(w);
  const auto idx = arr.find_family(family.form);
  CRG_CHECK(idx.has_value(), Errc::ConstantNotAdmissible, "family does not belong to the group");
  return arr.witness_for(*idx, c).reflection;
}

// ---------------------------------------------------------------- rank one

bool in_box(const CycloScalar& z, const Rational& radius) {
  const Rational& a = z.a();
  const Rational& b = z.b();
  auto abs_le = [&radius](const Rational& x) { return (x.sign() < 0 ? -x : x) <= radius; };
  switch (z.ring().r()) {
    case 4: return abs_le(a) && abs_le(b);
    case 3: return abs_le(a - Rational(1, 2) * b) && Rational(3) * b * b <= Rational(4) * radius * radius;
    case 6: return abs_le(a + Rational(1, 2) * b) && Rational(3) * b * b <= Rational(4) * radius * radius;
    default: return abs_le(a);
  }
}

std::pair<double, double> complex_position(const CycloScalar& z) {
  const double a = z.a().to_double();
  const double b = z.b().to_double();
  const double h = std::sqrt(3.0) / 2.0;
  switch (z.ring().r()) {
    case 4: return {a, b};
    case 3: return {a - b / 2.0, b * h};
    case 6: return {a + b / 2.0, b * h};
    default: return {a, 0.0};
  }
}

std::vector<CycloScalar> module_points_in_box(const ScalarModule& m, const Rational& radius) {
  const RingTag ring = m.ring();
  CRG_CHECK(radius.sign() >= 0, Errc::InvalidParameters, "negative window radius");
  for (const auto& g : m.generators()) {
    CRG_CHECK(!g.has_alpha(), Errc::InvalidParameters, "module involves alpha");
  }
  std::vector<CycloScalar> out;
  const auto& gens = m.generators();
  if (gens.empty()) {
    out.push_back(CycloScalar::zero(ring));
    return out;
  }
  // Every box point has |a|, |b| <= 2R; bound the integer coordinates through the inverse.
  const double span = 2.0 * radius.to_double() + 1.0;
  std::vector<long> bounds;
  if (gens.size() == 1) {
    const double norm = std::max(std::fabs(gens[0].c0().a().to_double()), std::fabs(gens[0].c0().b().to_double()));
    bounds.push_back(static_cast<long>(std::ceil(span / norm)) + 1);
  } else {
    CRG_CHECK(gens.size() == 2, Errc::InvalidParameters, "module rank exceeds 2");
    QMatrix g{{gens[0].c0().a(), gens[1].c0().a()}, {gens[0].c0().b(), gens[1].c0().b()}};
    const QMatrix inv = inverse(g);
    for (int i = 0; i < 2; ++i) {
      const double s = std::fabs(inv[i][0].to_double()) + std::fabs(inv[i][1].to_double());
      bounds.push_back(static_cast<long>(std::ceil(s * span)) + 1);
    }
  }
  const long bx = bounds[0];
  const long by = bounds.size() > 1 ? bounds[1] : 0;
  for (long x = -bx; x <= bx; ++x) {
    for (long y = -by; y <= by; ++y) {
      CycloScalar z = Rational(x) * gens[0].c0();
      if (gens.size() > 1) z += Rational(y) * gens[1].c0();
      if (in_box(z, radius)) out.push_back(std::move(z));
    }
  }
  std::sort(out.begin(), out.end(), [](const CycloScalar& u, const CycloScalar& v) {
    return scalar_less(ParamScalar(u), ParamScalar(v));
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rank1Window rank1_window(const GroupSpec& w, const Rational& radius) {
  CRG_CHECK(w.n() == 1, Errc::NotRankOne, "rank1_window needs n = 1");
  CRG_CHECK(!w.lattice.uses_alpha(), Errc::InvalidParameters, "window plots need a lattice without alpha");
  Rank1Window out;
  out.radius = radius;
  const ScalarModule lattice(w.ring, [&] {
    std::vector<ParamScalar> g;
    for (const auto& b : w.lattice.zbasis()) g.push_back(b[0]);
    return g;
  }());
  out.lattice_points = module_points_in_box(lattice, radius);
  for (const auto& fam : reflection_families(w)) {
    for (const auto& br : fam.branches) {
      auto pts = module_points_in_box(br.constants, radius);
      out.hyperplane_points.insert(out.hyperplane_points.end(), pts.begin(), pts.end());
    }
  }
  auto& h = out.hyperplane_points;
  std::sort(h.begin(), h.end(), [](const CycloScalar& u, const CycloScalar& v) {
    return scalar_less(ParamScalar(u), ParamScalar(v));
  });
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return out;
}

}  // namespace crg
