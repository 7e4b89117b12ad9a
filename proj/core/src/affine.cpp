#include "crg/affine.hpp"

#include <numeric>
#include <sstream>

namespace crg {

// ---------------------------------------------------------------- Vector

Vector::Vector(RingTag ring, std::vector<ParamScalar> coords)
    : ring_(ring), coords_(std::move(coords)) {
  for (const auto& c : coords_) require_same_ring(ring_, c.ring());
}

Vector Vector::unit(RingTag ring, std::size_t n, std::size_t j) {
  Vector v(ring, n);
  v[j] = ParamScalar::one(ring);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Vector::has_alpha() const {
  for (const auto& c : coords_) {
    if (c.has_alpha()) return true;
  }
  return false;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_ring(ring_, o.ring_);
  CRG_CHECK(size() == o.size(), Errc::DimensionMismatch, "vector sizes differ");
  for (std::size_t j = 0; j < size(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_ring(ring_, o.ring_);
  CRG_CHECK(size() == o.size(), Errc::DimensionMismatch, "vector sizes differ");
  for (std::size_t j = 0; j < size(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

Vector operator*(const ParamScalar& s, const Vector& v) {
  Vector out = v;
  for (auto& c : out.coords_) c = s * c;
  return out;
}

std::string to_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ", ";
    out += to_text(v[j]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- MonomialMatrix

namespace {

int mod_r(long e, int r) {
  long m = e % r;
  if (m < 0) m += r;
  return static_cast<int>(m);
}

}  // namespace

MonomialMatrix::MonomialMatrix(RingTag ring, std::vector<int> perm, std::vector<int> exps)
    : ring_(ring), perm_(std::move(perm)), exps_(std::move(exps)) {
  CRG_CHECK(perm_.size() == exps_.size(), Errc::DimensionMismatch, "perm/weight size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    CRG_CHECK(p >= 0 && static_cast<std::size_t>(p) < perm_.size() && !seen[p],
              Errc::InvalidParameters, "not a permutation");
    seen[p] = true;
  }
  for (auto& e : exps_) e = mod_r(e, ring_.r());
}

MonomialMatrix MonomialMatrix::identity(RingTag ring, std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(ring, std::move(perm), std::vector<int>(n, 0));
}

MonomialMatrix MonomialMatrix::diagonal(RingTag ring, std::vector<int> exps) {
  std::vector<int> perm(exps.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(ring, std::move(perm), std::move(exps));
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t j = 0; j < size(); ++j) {
    if (perm_[j] != static_cast<int>(j) || exps_[j] != 0) return false;
  }
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (std::size_t j = 0; j < size(); ++j) {
    if (perm_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

int MonomialMatrix::weight_exponent() const {
  long s = 0;
  for (int e : exps_) s += e;
  return mod_r(s, ring_.r());
}

std::vector<std::vector<int>> MonomialMatrix::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(start); !seen[j]; j = perm_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long MonomialMatrix::order() const {
  const int r = ring_.r();
  long result = 1;
  for (const auto& cyc : cycles()) {
    long s = 0;
    for (int j : cyc) s += exps_[j];
    const int e = mod_r(s, r);
    const long root_order = e == 0 ? 1 : r / std::gcd(e, r);
    result = std::lcm(result, static_cast<long>(cyc.size()) * root_order);
  }
  return result;
}

std::size_t MonomialMatrix::fixed_dimension() const {
  std::size_t dim = 0;
  for (const auto& cyc : cycles()) {
    long s = 0;
    for (int j : cyc) s += exps_[j];
    if (mod_r(s, ring_.r()) == 0) ++dim;
  }
  return dim;
}

Vector MonomialMatrix::apply(const Vector& v) const {
  require_same_ring(ring_, v.ring());
  CRG_CHECK(v.size() == size(), Errc::DimensionMismatch, "matrix/vector size mismatch");
  Vector out(ring_, size());
  for (std::size_t j = 0; j < size(); ++j) {
    out[perm_[j]] = exps_[j] == 0 ? v[j] : weight(j) * v[j];
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> perm(size()), exps(size());
  for (std::size_t j = 0; j < size(); ++j) {
    perm[perm_[j]] = static_cast<int>(j);
    exps[perm_[j]] = -exps_[j];
  }
  return MonomialMatrix(ring_, std::move(perm), std::move(exps));
}

MonomialMatrix MonomialMatrix::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  MonomialMatrix result = identity(ring_, size());
  MonomialMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

CycloScalar MonomialMatrix::entry(std::size_t i, std::size_t j) const {
  if (perm_[j] == static_cast<int>(i)) return weight(j);
  return CycloScalar::zero(ring_);
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  CRG_CHECK(a.size() == b.size(), Errc::DimensionMismatch, "matrix sizes differ");
  std::vector<int> perm(a.size()), exps(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int mid = b.perm_[j];
    perm[j] = a.perm_[mid];
    exps[j] = b.exps_[j] + a.exps_[mid];
  }
  return MonomialMatrix(a.ring_, std::move(perm), std::move(exps));
}

bool is_central_reflection(const MonomialMatrix& m) {
  return m.size() > 0 && m.fixed_dimension() + 1 == m.size();
}

std::string to_text(const MonomialMatrix& m) {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : m.cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  os << " w=[";
  for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m.exps()[j];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- LinearForm

ParamScalar LinearForm::evaluate(const Vector& v) const {
  if (kind == Kind::Coordinate) return v[j];
  if (m == 0) return v[j] - v[k];
  return v[j] - root_of_unity(v.ring(), m) * v[k];
}

std::string to_text(const LinearForm& f) {
  const std::string xj = "x" + std::to_string(f.j + 1);
  if (f.kind == LinearForm::Kind::Coordinate) return xj;
  const std::string xk = "x" + std::to_string(f.k + 1);
  if (f.m == 0) return xj + " - " + xk;
  if (f.m == 1) return xj + " - xi*" + xk;
  return xj + " - xi^" + std::to_string(f.m) + "*" + xk;
}

// ---------------------------------------------------------------- AffineMap

AffineMap AffineMap::identity(RingTag ring, std::size_t n) {
  return {MonomialMatrix::identity(ring, n), Vector(ring, n)};
}

AffineMap AffineMap::translation(const Vector& t) {
  return {MonomialMatrix::identity(t.ring(), t.size()), t};
}

std::string to_text(const AffineMap& g) {
  return "lin " + to_text(g.lin) + " tran " + to_text(g.tran);
}

AffineMap compose(const AffineMap& g, const AffineMap& h) {
  CRG_CHECK(g.size() == h.size(), Errc::DimensionMismatch, "affine map sizes differ");
  return {g.lin * h.lin, g.lin.apply(h.tran) + g.tran};
}

AffineMap inverse(const AffineMap& g) {
  MonomialMatrix inv = g.lin.inverse();
  Vector t = -inv.apply(g.tran);
  return {std::move(inv), std::move(t)};
}

AffineMap power(const AffineMap& g, long k) {
  if (k < 0) return power(inverse(g), -k);
  AffineMap result = AffineMap::identity(g.lin.ring(), g.size());
  AffineMap base = g;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

// ---------------------------------------------------------------- fixed spaces

namespace {

using CMatrix = std::vector<std::vector<CycloScalar>>;

// Gauss-Jordan over Q(xi); returns pivot columns and leaves a in RREF.
std::vector<std::size_t> reduce(CMatrix& a, CMatrix* t, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    if (t) std::swap((*t)[sel], (*t)[row]);
    const CycloScalar inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    if (t) {
      for (auto& x : (*t)[row]) x *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const CycloScalar f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
      }
      if (t) {
        for (std::size_t j = 0; j < t->front().size(); ++j) {
          if (!(*t)[row][j].is_zero()) (*t)[i][j] -= f * (*t)[row][j];
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FixedPointSolver::FixedPointSolver(const MonomialMatrix& lin) : lin_(lin), n_(lin.size()) {
  const RingTag ring = lin.ring();
  CMatrix a(n_, std::vector<CycloScalar>(n_, CycloScalar::zero(ring)));
  transform_.assign(n_, std::vector<CycloScalar>(n_, CycloScalar::zero(ring)));
  for (std::size_t i = 0; i < n_; ++i) {
    transform_[i][i] = CycloScalar::one(ring);
    a[i][i] = CycloScalar::one(ring);
  }
  for (std::size_t j = 0; j < n_; ++j) a[lin.perm()[j]][j] -= lin.weight(j);

  pivots_ = reduce(a, &transform_, n_);

  std::vector<bool> is_pivot(n_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  CMatrix kern;
  for (std::size_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycloScalar> v(n_, CycloScalar::zero(ring));
    v[f] = CycloScalar::one(ring);
    for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = -a[i][f];
    kern.push_back(std::move(v));
  }
  reduce(kern, nullptr, n_);
  for (auto& row : kern) {
    Vector v(ring, n_);
    for (std::size_t j = 0; j < n_; ++j) v[j] = ParamScalar(row[j]);
    kernel_.push_back(std::move(v));
  }
}

std::vector<ParamScalar> FixedPointSolver::residual(const Vector& t) const {
  CRG_CHECK(t.size() == n_, Errc::DimensionMismatch, "translation size mismatch");
  std::vector<ParamScalar> out;
  for (std::size_t i = pivots_.size(); i < n_; ++i) {
    ParamScalar s(lin_.ring());
    for (std::size_t j = 0; j < n_; ++j) {
      if (!transform_[i][j].is_zero() && !t[j].is_zero()) s += transform_[i][j] * t[j];
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool FixedPointSolver::solvable(const Vector& t) const {
  for (const auto& s : residual(t)) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<Vector> FixedPointSolver::particular(const Vector& t) const {
  if (!solvable(t)) return std::nullopt;
  Vector u(lin_.ring(), n_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    ParamScalar s(lin_.ring());
    for (std::size_t j = 0; j < n_; ++j) {
      if (!transform_[i][j].is_zero() && !t[j].is_zero()) s += transform_[i][j] * t[j];
    }
    u[pivots_[i]] = std::move(s);
  }
  return u;
}

AffineSubspace FixedPointSolver::solve(const Vector& t) const {
  AffineSubspace out;
  auto u = particular(t);
  if (!u) return out;
  out.empty = false;
  out.base = std::move(*u);
  out.directions = kernel_;
  return out;
}

AffineSubspace fixed_space(const AffineMap& g) { return FixedPointSolver(g.lin).solve(g.tran); }

bool has_finite_order(const AffineMap& g) { return FixedPointSolver(g.lin).solvable(g.tran); }

bool is_reflection(const AffineMap& g) {
  return is_central_reflection(g.lin) && has_finite_order(g);
}

bool form_constant_on(const std::vector<Vector>& directions, const LinearForm& form) {
  for (const auto& d : directions) {
    if (!form.evaluate(d).is_zero()) return false;
  }
  return true;
}

bool subspace_satisfies_form(const AffineSubspace& a, const LinearForm& form, const ParamScalar& c) {
  CRG_CHECK(!a.empty, Errc::EmptySubspace, "subspace is empty");
  return form_constant_on(a.directions, form) && form.evaluate(a.base) == c;
}

bool contains_point(const AffineSubspace& a, const Vector& v) {
  if (a.empty) return false;
  Vector diff = v - a.base;
  for (const auto& d : a.directions) {
    std::size_t lead = 0;
    while (lead < d.size() && d[lead].is_zero()) ++lead;
    if (lead == d.size()) continue;
    const ParamScalar coeff = diff[lead] * d[lead].inverse();
    diff -= coeff * d;
  }
  return diff.is_zero();
}

}  // namespace crg
