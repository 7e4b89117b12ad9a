#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string_view>

#include "crg/steinberg.hpp"

namespace crg::fixture {

inline ParamScalar S(int r, std::string_view text) { return parse_scalar(RingTag(r), text); }

inline Vector V(int r, std::initializer_list<std::string_view> coords) {
  std::vector<ParamScalar> xs;
  for (auto c : coords) xs.push_back(S(r, c));
  return Vector(RingTag(r), xs);
}

inline MonomialMatrix M(int r, std::vector<int> perm, std::vector<int> exps) {
  return MonomialMatrix(RingTag(r), std::move(perm), std::move(exps));
}

// Complex embedding with xi = exp(2 pi i / r).
inline std::complex<double> embed(const CycloScalar& x) {
  const int r = x.ring().r();
  const std::complex<double> xi = std::polar(1.0, 2.0 * std::numbers::pi / r);
  return x.a().to_double() + x.b().to_double() * (r >= 3 ? xi : std::complex<double>(0.0));
}

inline Rational random_rational(std::mt19937_64& rng, long num = 9, long den = 6) {
  std::uniform_int_distribution<long> n(-num, num);
  std::uniform_int_distribution<long> d(1, den);
  return Rational(n(rng), d(rng));
}

inline CycloScalar random_cyclo(std::mt19937_64& rng, RingTag ring) {
  return CycloScalar(ring, random_rational(rng), ring.has_xi() ? random_rational(rng) : Rational());
}

inline ParamScalar random_param(std::mt19937_64& rng, RingTag ring, bool alpha) {
  return alpha ? ParamScalar(random_cyclo(rng, ring), random_cyclo(rng, ring)) : random_cyclo(rng, ring);
}

inline MonomialMatrix random_monomial(std::mt19937_64& rng, RingTag ring, std::size_t n) {
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> e(0, ring.r() - 1);
  std::vector<int> exps(n);
  for (auto& x : exps) x = e(rng);
  return MonomialMatrix(ring, perm, exps);
}

// Translation with Z[xi] coordinates in [-bound, bound].
inline Vector random_integral_vector(std::mt19937_64& rng, RingTag ring, std::size_t n, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  Vector v(ring, n);
  for (std::size_t j = 0; j < n; ++j) v[j] = CycloScalar(ring, c(rng), ring.has_xi() ? c(rng) : 0);
  return v;
}

// Sum of coefficient * zbasis vector.
inline Vector lattice_point(const Lattice& l, const std::vector<long>& coeffs) {
  Vector v(l.ring(), l.dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    v += ParamScalar(CycloScalar(l.ring(), coeffs[i])) * l.zbasis()[i];
  }
  return v;
}

inline Vector random_lattice_point(std::mt19937_64& rng, const Lattice& l, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<long> coeffs(l.rank());
  for (auto& x : coeffs) x = c(rng);
  return lattice_point(l, coeffs);
}

}  // namespace crg::fixture
