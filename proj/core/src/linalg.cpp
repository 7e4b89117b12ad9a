#include "crg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace crg {

RrefResult rref_with_transform(QMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  QMatrix t(rows, QVector(rows));
  for (std::size_t i = 0; i < rows; ++i) t[i][i] = Rational(1);

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    std::swap(t[sel], t[row]);

    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (auto& x : t[row]) x *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
      }
      for (std::size_t j = 0; j < rows; ++j) {
        if (!t[row][j].is_zero()) t[i][j] -= f * t[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(t), std::move(pivots)};
}

std::size_t rank_of(const QMatrix& a, std::size_t cols) {
  return rref_with_transform(a, cols).pivots.size();
}

QMatrix kernel_basis(const QMatrix& a, std::size_t cols) {
  const RrefResult r = rref_with_transform(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rref[i][f];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return rref_with_transform(std::move(basis), cols).rref;
}

QVector mat_vec(const QMatrix& a, const QVector& x) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!a[i][j].is_zero() && !x[j].is_zero()) out[i] += a[i][j] * x[j];
    }
  }
  return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b, std::size_t b_cols) {
  QMatrix out(a.size(), QVector(b_cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b_cols; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

QMatrix transpose(const QMatrix& a, std::size_t cols) {
  QMatrix out(cols, QVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  }
  return out;
}

QMatrix inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  RrefResult r = rref_with_transform(a, n);
  CRG_CHECK(r.pivots.size() == n, Errc::RankDeficient, "singular matrix");
  return std::move(r.transform);
}

ZMatrix hnf_rows(ZMatrix a) {
  if (a.empty()) return a;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    // Euclid down the column until a single nonzero entry remains at `row`.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = row; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[row], a[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
        for (std::size_t j = col; j < cols; ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (row >= a.size() || a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (auto& x : a[row]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      if (q != 0) {
        for (std::size_t j = col; j < cols; ++j) a[i][j] -= q * a[row][j];
      }
    }
    ++row;
  }
  a.resize(row);
  return a;
}

ZMatrix clear_denominators(const QMatrix& a, std::size_t cols, mpz_class& den) {
  den = 1;
  for (const auto& row : a) {
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row[j].raw().get_den_mpz_t());
    }
  }
  ZMatrix out(a.size(), ZVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = a[i][j].raw();
      out[i][j] = q.get_num() * (den / q.get_den());
    }
  }
  return out;
}

QMatrix lattice_basis(const QMatrix& rows, std::size_t cols) {
  mpz_class den;
  const ZMatrix h = hnf_rows(clear_denominators(rows, cols, den));
  QMatrix out(h.size(), QVector(cols));
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = Rational(h[i][j], den);
  }
  return out;
}

}  // namespace crg
