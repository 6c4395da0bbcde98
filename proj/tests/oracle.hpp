#pragma once

// Small independent reference routines for the tests. Deliberately naive:
// textbook Gauss-Jordan over Q, no shared code with the library.

#include <random>
#include <vector>

#include "comtrans/exact_linalg.hpp"

namespace oracle {

using comtrans::ExactMatrix;
using comtrans::Integer;
using comtrans::IntegerMatrix;
using comtrans::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline Rows rows_of(const ExactMatrix& m) {
  Rows r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Reduced row echelon form, zero rows dropped.
inline Rows gauss_jordan(Rows a, std::size_t cols) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
    std::size_t p = lead;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[lead]);
    const Rational inv = 1 / a[lead][c];
    for (auto& x : a[lead]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == lead || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[lead][j];
    }
    ++lead;
  }
  a.resize(lead);
  return a;
}

inline std::size_t rank(const Rows& a, std::size_t cols) { return gauss_jordan(a, cols).size(); }

// Solves x * basis = v; returns false if v is outside the row space.
inline bool solve_left(const Rows& basis, const std::vector<Rational>& v, std::vector<Rational>& x) {
  const std::size_t k = basis.size(), n = v.size();
  // Augmented system on the transpose: n equations, k unknowns.
  Rows a(n, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = basis[i][j];
    a[j][k] = v[j];
  }
  const Rows r = gauss_jordan(a, k + 1);
  x.assign(k, 0);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (c <= k && row[c] == 0) ++c;
    if (c == k) return false;
    x[c] = row[k];
  }
  return true;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi,
                                 bool fractions = false) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 4);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = fractions ? Rational(d(rng), den(rng)) : Rational(d(rng));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
  return m;
}

}  // namespace oracle
