#include "crg/lattices.hpp"

namespace crg {

std::vector<ParamScalar> coefficient_basis(CoeffRing ring, RingTag tag) {
  const ParamScalar one = ParamScalar::one(tag);
  const ParamScalar al = ParamScalar::alpha(tag);
  const ParamScalar xi(root_of_unity(tag, 1));
  const Rational half(1, 2), third(1, 3);
  switch (ring) {
    case CoeffRing::Zxi:
      if (!tag.has_xi()) return {one};
      return {one, xi};
    case CoeffRing::Z2xi:
      if (!tag.has_xi()) return {one};
      return {one, Rational(2) * xi};
    case CoeffRing::ZAlpha: return {one, al};
    case CoeffRing::ZAlphaHalf: return {one, half * al};
    case CoeffRing::HalfZAlpha: return {half * one, al};
    case CoeffRing::ZOnePlusAlphaHalf: return {one, half * (one + al)};
    case CoeffRing::HalfOfZAlpha: return {half * one, half * al};
    case CoeffRing::ZAlphaThird: return {one, third * al};
    case CoeffRing::ZOnePlusAlphaThird: return {one, third * (one + al)};
    case CoeffRing::ZTwoPlusAlphaThird: return {one, third * (Rational(2) * one + al)};
  }
  throw Error(Errc::Internal, "unknown coefficient ring");
}

std::string to_text(CoeffRing ring) {
  switch (ring) {
    case CoeffRing::Zxi: return "Z[x]";
    case CoeffRing::Z2xi: return "Z[2x]";
    case CoeffRing::ZAlpha: return "Z+Z*al";
    case CoeffRing::ZAlphaHalf: return "Z+Z*al/2";
    case CoeffRing::HalfZAlpha: return "1/2*Z+Z*al";
    case CoeffRing::ZOnePlusAlphaHalf: return "Z+Z*(1+al)/2";
    case CoeffRing::HalfOfZAlpha: return "1/2*(Z+Z*al)";
    case CoeffRing::ZAlphaThird: return "Z+Z*al/3";
    case CoeffRing::ZOnePlusAlphaThird: return "Z+Z*(1+al)/3";
    case CoeffRing::ZTwoPlusAlphaThird: return "Z+Z*(2+al)/3";
  }
  return "?";
}

// ---------------------------------------------------------------- flattening

QVector flatten(const ParamScalar& x) {
  return {x.c0().a(), x.c0().b(), x.c1().a(), x.c1().b()};
}

QVector flatten(const Vector& v) {
  QVector out;
  out.reserve(4 * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out.push_back(v[j].c0().a());
    out.push_back(v[j].c0().b());
    out.push_back(v[j].c1().a());
    out.push_back(v[j].c1().b());
  }
  return out;
}

ParamScalar unflatten_scalar(RingTag ring, const QVector& flat, std::size_t offset) {
  return ParamScalar(CycloScalar(ring, flat[offset], flat[offset + 1]),
                     CycloScalar(ring, flat[offset + 2], flat[offset + 3]));
}

Vector unflatten(RingTag ring, const QVector& flat) {
  CRG_CHECK(flat.size() % 4 == 0, Errc::DimensionMismatch, "flattened length not a multiple of 4");
  Vector v(ring, flat.size() / 4);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = unflatten_scalar(ring, flat, 4 * j);
  return v;
}

// ---------------------------------------------------------------- IntegralSpan

IntegralSpan::IntegralSpan(const QMatrix& basis_rows, std::size_t cols) {
  const std::size_t m = basis_rows.size();
  RrefResult r = rref_with_transform(transpose(basis_rows, cols), m);
  CRG_CHECK(r.pivots.size() == m, Errc::RankDeficient, "basis rows are dependent");
  proj_.assign(r.transform.begin(), r.transform.begin() + static_cast<long>(m));
  null_.assign(r.transform.begin() + static_cast<long>(m), r.transform.end());
}

namespace {

Rational dot(const QVector& a, const QVector& b) {
  Rational s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j].is_zero() && !b[j].is_zero()) s += a[j] * b[j];
  }
  return s;
}

}  // namespace

bool IntegralSpan::in_rational_span(const QVector& x) const {
  for (const auto& row : null_) {
    if (!dot(row, x).is_zero()) return false;
  }
  return true;
}

bool IntegralSpan::contains(const QVector& x) const {
  if (!in_rational_span(x)) return false;
  for (const auto& row : proj_) {
    if (!dot(row, x).is_integer()) return false;
  }
  return true;
}

std::optional<std::vector<mpz_class>> IntegralSpan::coordinates(const QVector& x) const {
  if (!in_rational_span(x)) return std::nullopt;
  std::vector<mpz_class> out;
  for (const auto& row : proj_) {
    const Rational c = dot(row, x);
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.numerator());
  }
  return out;
}

// ---------------------------------------------------------------- ScalarModule

ScalarModule::ScalarModule(RingTag ring, const std::vector<ParamScalar>& spanning) : ring_(ring) {
  QMatrix rows;
  for (const auto& s : spanning) {
    require_same_ring(ring, s.ring());
    rows.push_back(flatten(s));
  }
  const QMatrix basis = rows.empty() ? QMatrix{} : lattice_basis(rows, 4);
  for (const auto& b : basis) gens_.push_back(unflatten_scalar(ring, b));
  span_ = IntegralSpan(basis, 4);
}

bool ScalarModule::contains(const ParamScalar& x) const { return span_.contains(flatten(x)); }

ScalarModule ScalarModule::scaled(const CycloScalar& c) const {
  std::vector<ParamScalar> gens;
  for (const auto& g : gens_) gens.push_back(c * g);
  return ScalarModule(ring_, gens);
}

bool ScalarModule::includes(const ScalarModule& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool module_contains(const ScalarModule& m, const ParamScalar& x) { return m.contains(x); }

std::string to_text(const ScalarModule& m) {
  std::string out = "<";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_text(m.generators()[i]);
  }
  return out + ">";
}

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(std::size_t n, RingTag ring, std::vector<LatticeGenerator> gens,
                 std::size_t expected_rank)
    : n_(n), ring_(ring), gens_(std::move(gens)) {
  QMatrix rows;
  for (const auto& g : gens_) {
    CRG_CHECK(g.v.size() == n, Errc::DimensionMismatch, "generator has wrong dimension");
    require_same_ring(ring, g.v.ring());
    for (const auto& s : coefficient_basis(g.coeffs, ring)) rows.push_back(flatten(s * g.v));
  }
  const std::size_t cols = 4 * n;
  const std::size_t rank = rank_of(rows, cols);
  CRG_CHECK(rank == expected_rank, Errc::RankDeficient,
            "lattice rank " + std::to_string(rank) + ", expected " + std::to_string(expected_rank));
  const QMatrix basis = rows.size() == rank ? rows : lattice_basis(rows, cols);
  for (const auto& b : basis) {
    zbasis_.push_back(unflatten(ring, b));
    uses_alpha_ = uses_alpha_ || zbasis_.back().has_alpha();
  }
  span_ = IntegralSpan(basis, cols);
}

bool Lattice::contains(const Vector& v) const {
  CRG_CHECK(v.size() == n_, Errc::DimensionMismatch, "vector has wrong dimension");
  require_same_ring(ring_, v.ring());
  return span_.contains(flatten(v));
}

std::optional<std::vector<mpz_class>> Lattice::coordinates(const Vector& v) const {
  CRG_CHECK(v.size() == n_, Errc::DimensionMismatch, "vector has wrong dimension");
  return span_.coordinates(flatten(v));
}

bool Lattice::is_invariant(const MonomialMatrix& m) const {
  for (const auto& b : zbasis_) {
    if (!contains(m.apply(b))) return false;
  }
  return true;
}

ScalarModule Lattice::line_intersection(const Vector& w) const {
  CRG_CHECK(!w.is_zero(), Errc::ZeroDirection, "zero direction");
  CRG_CHECK(w.size() == n_, Errc::DimensionMismatch, "direction has wrong dimension");

  std::vector<ParamScalar> scalars{ParamScalar::one(ring_)};
  if (ring_.has_xi()) scalars.emplace_back(root_of_unity(ring_, 1));
  if (uses_alpha_ && !w.has_alpha()) {
    const std::size_t base = scalars.size();
    for (std::size_t i = 0; i < base; ++i) scalars.push_back(scalars[i] * ParamScalar::alpha(ring_));
  }
  const std::size_t k = scalars.size();
  const std::size_t cols = 4 * n_;

  // Columns flat(s_i * w); we look for rational s with sum s_i col_i in the lattice.
  QMatrix wcols(k);
  for (std::size_t i = 0; i < k; ++i) wcols[i] = flatten(scalars[i] * w);
  const QMatrix wmat = transpose(wcols, cols);  // cols x k

  const QMatrix nw = mat_mul(span_.null(), wmat, k);
  const QMatrix s = kernel_basis(nw, k);  // rows: q vectors in Q^k
  if (s.empty()) return ScalarModule(ring_);
  const std::size_t q = s.size();

  // A = P W S^T; y is admissible iff A y is integral, i.e. y in the dual of A's row lattice.
  const QMatrix a = mat_mul(mat_mul(span_.proj(), wmat, k), transpose(s, k), q);
  const QMatrix b = lattice_basis(a, q);
  CRG_CHECK(b.size() == q, Errc::Internal, "line intersection lost rank");
  const QMatrix binv = inverse(b);

  std::vector<ParamScalar> gens;
  for (std::size_t c = 0; c < q; ++c) {
    ParamScalar t(ring_);
    for (std::size_t i = 0; i < k; ++i) {
      Rational coeff;
      for (std::size_t l = 0; l < q; ++l) coeff += s[l][i] * binv[l][c];
      if (!coeff.is_zero()) t += coeff * scalars[i];
    }
    gens.push_back(std::move(t));
  }
  return ScalarModule(ring_, gens);
}

Lattice lattice_from_generators(std::size_t n, RingTag ring, std::vector<LatticeGenerator> gens,
                                std::size_t expected_rank) {
  return Lattice(n, ring, std::move(gens), expected_rank);
}

}  // namespace crg
