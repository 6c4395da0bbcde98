#include "comtrans/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace comtrans {

ExactMatrix to_rational(const IntegerMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntegerMatrix to_integer(const ExactMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw UsageError("matrix entry is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

template <class T>
static DenseMatrix<T> multiply_impl(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product: inner dimensions differ");
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) { return multiply_impl(a, b); }
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) { return multiply_impl(a, b); }

ExactMatrix stack(const ExactMatrix& top, const ExactMatrix& bottom) {
  if (top.rows() > 0 && bottom.rows() > 0 && top.cols() != bottom.cols())
    throw UsageError("stack: column counts differ");
  const std::size_t cols = top.rows() > 0 ? top.cols() : bottom.cols();
  ExactMatrix s(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) s(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) s(top.rows() + i, j) = bottom(i, j);
  return s;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// IntegerEchelon

namespace {

using Sparse = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(Sparse& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [c, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a*v - b*w, dropping zeros.
Sparse combine(const Integer& a, const Sparse& v, const Integer& b, const Sparse& w) {
  Sparse out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -b * w[j].second);
      ++j;
    } else {
      t = a * v[i].second - b * w[j].second;
      if (t != 0) out.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntegerEchelon::IntegerEchelon(std::size_t cols) : cols_(cols), row_of_col_(cols, -1) {}

IntegerEchelon::Sparse IntegerEchelon::reduce(Sparse v) const {
  std::size_t k = 0;
  Integer g, a, b;
  while (k < v.size()) {
    const std::size_t col = v[k].first;
    const std::ptrdiff_t r = row_of_col_[col];
    if (r < 0) return v;  // leading entry is not a pivot: independent
    const Row& row = basis_[static_cast<std::size_t>(r)];
    const Integer& p = row.entries.front().second;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), v[k].second.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[k].second.get_mpz_t(), g.get_mpz_t());
    v = combine(a, v, b, row.entries);
    make_primitive(v);
    k = 0;  // entries before col are zero; v is sorted so restart at front
  }
  return v;
}

bool IntegerEchelon::add_row(std::span<const Integer> row) {
  if (row.size() != cols_) throw UsageError("IntegerEchelon: row width mismatch");
  Sparse v;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) v.emplace_back(c, row[c]);
  make_primitive(v);
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.front().first;
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  basis_.insert(pos, Row{pivot, std::move(v)});
  for (std::size_t i = 0; i < basis_.size(); ++i)
    row_of_col_[basis_[i].pivot] = static_cast<std::ptrdiff_t>(i);
  return true;
}

bool IntegerEchelon::add_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> scaled(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) scaled[c] = row[c].get_num() * (l / row[c].get_den());
  return add_row(std::span<const Integer>(scaled));
}

bool IntegerEchelon::contains(std::span<const Integer> row) const {
  Sparse v;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) v.emplace_back(c, row[c]);
  make_primitive(v);
  return reduce(std::move(v)).empty();
}

ExactMatrix IntegerEchelon::canonical_form() const {
  const std::size_t r = basis_.size();
  ExactMatrix out(r, cols_);
  // Back substitution from the last pivot upwards.
  for (std::size_t ii = r; ii-- > 0;) {
    const Row& row = basis_[ii];
    const Rational lead(row.entries.front().second);
    for (const auto& [c, x] : row.entries) out(ii, c) = Rational(x) / lead;
    for (std::size_t jj = ii + 1; jj < r; ++jj) {
      const std::size_t pc = basis_[jj].pivot;
      if (sgn(out(ii, pc)) == 0) continue;
      const Rational f = out(ii, pc);
      for (std::size_t c = pc; c < cols_; ++c)
        if (sgn(out(jj, c)) != 0) out(ii, c) -= f * out(jj, c);
    }
  }
  return out;
}

RcfResult rcf(const IntegerMatrix& m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  RcfResult res;
  res.rank = e.rank();
  ExactMatrix basis = e.canonical_form();
  res.form = ExactMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) res.form(i, j) = basis(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(basis(i, j)) != 0) {
        res.pivots.push_back(j);
        break;
      }
  }
  return res;
}

RcfResult rcf(const ExactMatrix& m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  RcfResult res;
  res.rank = e.rank();
  ExactMatrix basis = e.canonical_form();
  res.form = ExactMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) res.form(i, j) = basis(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(basis(i, j)) != 0) {
        res.pivots.push_back(j);
        break;
      }
  }
  return res;
}

std::size_t rank(const ExactMatrix& m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e.rank();
}

std::size_t rank(const IntegerMatrix& m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e.rank();
}

ExactMatrix row_basis(const ExactMatrix& m) {
  IntegerEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e.canonical_form();
}

ExactMatrix nullspace(const ExactMatrix& m) {
  const ExactMatrix basis = row_basis(m);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(basis(i, j)) != 0) {
        pivots.push_back(j);
        is_pivot[j] = true;
        break;
      }
  ExactMatrix null(m.cols() - pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    null(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) null(k, pivots[i]) = -basis(i, f);
    ++k;
  }
  return row_basis(null);
}

bool row_space_contained(const ExactMatrix& a, const ExactMatrix& b) {
  if (b.rows() == 0) return true;
  if (a.rows() > 0 && a.cols() != b.cols()) throw UsageError("row_space_contained: column counts differ");
  IntegerEchelon e(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.add_row(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (e.add_row(b.row(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dump format

template <class T>
static std::string dump_impl(const DenseMatrix<T>& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string dump(const ExactMatrix& m) { return dump_impl(m); }
std::string dump(const IntegerMatrix& m) { return dump_impl(m); }

ExactMatrix parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw UsageError("matrix dump: bad header");
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(in >> tok)) throw UsageError("matrix dump: too few entries");
      Rational q;
      if (q.set_str(tok, 10) != 0) throw UsageError("matrix dump: bad entry '" + tok + "'");
      q.canonicalize();
      if (q.get_den() == 0) throw UsageError("matrix dump: zero denominator");
      m(i, j) = q;
    }
  if (in >> tok) throw UsageError("matrix dump: trailing data");
  return m;
}

}  // namespace comtrans
