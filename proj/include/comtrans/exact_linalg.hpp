#pragma once

// Exact dense linear algebra over Z and Q: row canonical form, Hermite normal
// form with transform, integer kernel lattices, LLL reduction.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comtrans/errors.hpp"

namespace comtrans {

using Integer = mpz_class;
using Rational = mpq_class;

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;

ExactMatrix to_rational(const IntegerMatrix& m);
// Throws UsageError if an entry is not integral.
IntegerMatrix to_integer(const ExactMatrix& m);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
// Rows of `top` followed by rows of `bottom`; column counts must agree.
ExactMatrix stack(const ExactMatrix& top, const ExactMatrix& bottom);
Integer determinant(const IntegerMatrix& m);

struct RcfResult {
  ExactMatrix form;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RcfResult rcf(const ExactMatrix& m);
RcfResult rcf(const IntegerMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::size_t rank(const IntegerMatrix& m);

// Nonzero rows of the RCF only.
ExactMatrix row_basis(const ExactMatrix& m);
// Rows in RCF spanning {v : m v^T = 0}.
ExactMatrix nullspace(const ExactMatrix& m);

// True iff every row of b lies in the rational row space of a.
bool row_space_contained(const ExactMatrix& a, const ExactMatrix& b);

// Incremental exact echelon form. Rows are kept as primitive integer vectors
// with positive leading entries; reducing against them never introduces
// fractions.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t cols);

  // Returns true iff the row was independent of the rows seen so far.
  bool add_row(std::span<const Integer> row);
  bool add_row(std::span<const Rational> row);
  bool contains(std::span<const Integer> row) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  // The row canonical form of everything added so far (nonzero rows only).
  ExactMatrix canonical_form() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, Integer>> entries;  // sorted by column
  };
  using Sparse = std::vector<std::pair<std::size_t, Integer>>;
  Sparse reduce(Sparse v) const;

  std::size_t cols_;
  std::vector<Row> basis_;                  // ordered by pivot column
  std::vector<std::ptrdiff_t> row_of_col_;  // pivot column -> index in basis_
};

// ---------------------------------------------------------------------------
// Lattices

struct LatticeBasis {
  std::size_t dimension = 0;  // ambient dimension
  std::vector<std::vector<Integer>> vectors;

  std::size_t size() const { return vectors.size(); }
  IntegerMatrix as_matrix() const;
  static LatticeBasis from_matrix(const IntegerMatrix& m);
};

Integer squared_length(std::span<const Integer> v);
std::vector<Integer> squared_lengths(const LatticeBasis& b);

struct HnfResult {
  IntegerMatrix h;  // row-style Hermite normal form, zero rows last
  IntegerMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

// Row-style HNF: positive pivots, entries above each pivot reduced into
// [0, pivot), zero rows at the bottom.
HnfResult hnf_with_transform(const IntegerMatrix& m);

// The nonzero rows of the row HNF of a basis: a canonical basis of its lattice.
LatticeBasis hermite_basis(const LatticeBasis& b);

// Basis of the full integer lattice {v in Z^cols : m v = 0}.
LatticeBasis integer_kernel_basis(const IntegerMatrix& m);

// Exact integral LLL (no floating point). Input vectors must be independent.
LatticeBasis lll_reduce(const LatticeBasis& b, const Rational& delta = Rational(3, 4));
bool is_lll_reduced(const LatticeBasis& b, const Rational& delta = Rational(3, 4));

// Repeated pairwise size reduction b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j
// until no vector shortens. Unimodular, so the lattice is unchanged; used as
// a cheap preconditioner ahead of LLL and on its own above the LLL cap.
LatticeBasis pairwise_reduce(const LatticeBasis& b);

// Sort by squared length then lexicographically after making the first
// nonzero entry of each vector positive.
LatticeBasis sort_and_normalize(const LatticeBasis& b);

// Row lattice equality via HNF comparison.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

// ---------------------------------------------------------------------------
// Text dump: first line "rows cols", then one row per line.

std::string dump(const ExactMatrix& m);
std::string dump(const IntegerMatrix& m);
ExactMatrix parse_dump(std::string_view text);

}  // namespace comtrans
