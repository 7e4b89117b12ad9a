#pragma once

// Dense exact linear algebra over Q and Z used by the lattice code.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "crg/scalars.hpp"

namespace crg {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major
using ZVector = std::vector<mpz_class>;
using ZMatrix = std::vector<ZVector>;

struct RrefResult {
  QMatrix rref;
  QMatrix transform;  // transform * input == rref
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination. cols is needed when a has no rows.
RrefResult rref_with_transform(QMatrix a, std::size_t cols);
std::size_t rank_of(const QMatrix& a, std::size_t cols);

// Basis of {x : a x = 0}, each vector in reduced form with a leading 1.
QMatrix kernel_basis(const QMatrix& a, std::size_t cols);

QVector mat_vec(const QMatrix& a, const QVector& x);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b, std::size_t b_cols);
QMatrix transpose(const QMatrix& a, std::size_t cols);
QMatrix inverse(const QMatrix& a);

// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
ZMatrix hnf_rows(ZMatrix a);

// Scales rows of a to integers by a common positive denominator.
ZMatrix clear_denominators(const QMatrix& a, std::size_t cols, mpz_class& den);

// Canonical Z-basis (as rational rows) of the Z-span of the given rational rows.
QMatrix lattice_basis(const QMatrix& rows, std::size_t cols);

}  // namespace crg
