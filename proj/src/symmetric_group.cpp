#include "comtrans/symmetric_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace comtrans {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw UsageError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<std::uint8_t> v;
  for (int x : images) {
    if (x < 1 || x > 255) throw UsageError("permutation image out of range");
    v.push_back(static_cast<std::uint8_t>(x - 1));
  }
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  Permutation p = identity(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint8_t>(i);
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Permutation::lex_index() const {
  const std::size_t n = img_.size();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    idx = idx * (n - i) + smaller;
  }
  return idx;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw UsageError("composing permutations of different degrees");
  Permutation r;
  r.img_.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    s += std::to_string(parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  auto bad = [&] { return UsageError("malformed partition '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      if (tok.empty() || tok.size() > 3) throw bad();
      int v = 0;
      for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
        v = v * 10 + (ch - '0');
      }
      p.parts.push_back(v);
      pos = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size();) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
      const int part = text[i] - '0';
      ++i;
      int mult = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
        // The exponent is a single digit so "2^31" reads as 2,2,2,1.
        mult = text[i] - '0';
        ++i;
      }
      for (int k = 0; k < mult; ++k) p.parts.push_back(part);
    }
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] <= 0) throw bad();
    if (i && p.parts[i] > p.parts[i - 1]) throw bad();
  }
  return p;
}

namespace {

void partitions_rec(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int k = std::min(n, maxp); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw UsageError("partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::size_t dim_irrep(const Partition& lambda) {
  const int n = lambda.weight();
  Integer num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < lambda.parts.size() && lambda.parts[r] > j; ++r) ++below;
      den *= (lambda.parts[i] - j - 1) + below + 1;
    }
  return static_cast<std::size_t>(Integer(num / den).get_ui());
}

namespace {

void tableaux_rec(const Partition& lambda, int k, int n, StandardTableau& t, std::vector<StandardTableau>& out) {
  if (k == n) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < lambda.parts.size(); ++r) {
    const int len = static_cast<int>(t.rows[r].size());
    if (len < lambda.parts[r] && (r == 0 || static_cast<int>(t.rows[r - 1].size()) > len)) {
      t.rows[r].push_back(k);
      tableaux_rec(lambda, k + 1, n, t, out);
      t.rows[r].pop_back();
    }
  }
}

std::vector<std::vector<int>> columns_of(const StandardTableau& t) {
  std::vector<std::vector<int>> cols(t.rows.empty() ? 0 : t.rows[0].size());
  for (const auto& row : t.rows)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

int sign_of_small(const int* v, std::size_t len) {
  int inv = 0;
  for (std::size_t a = 0; a < len; ++a)
    for (std::size_t b = a + 1; b < len; ++b)
      if (v[a] > v[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Coefficient of tabloid {T_i} (given by row_of) in the polytabloid of a
// tableau with the given columns after applying p to its entries.
int tabloid_coefficient(const std::vector<int>& row_of, const std::vector<std::vector<int>>& cols,
                        const Permutation& p) {
  int sign = 1;
  int target[16];
  for (const auto& col : cols) {
    unsigned seen = 0;
    for (std::size_t k = 0; k < col.size(); ++k) {
      const int r = row_of[p(static_cast<std::size_t>(col[k]))];
      if (r >= static_cast<int>(col.size()) || (seen >> r & 1U)) return 0;
      seen |= 1U << r;
      target[k] = r;
    }
    sign *= sign_of_small(target, col.size());
  }
  return sign;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("representation entry overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("representation entry overflows 64 bits");
  return r;
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  std::vector<StandardTableau> out;
  StandardTableau t;
  t.rows.resize(lambda.parts.size());
  tableaux_rec(lambda, 0, lambda.weight(), t, out);
  return out;
}

IntegerMatrix clifton_matrix(const Partition& lambda, const Permutation& p) {
  if (static_cast<int>(p.size()) != lambda.weight()) throw UsageError("clifton_matrix: degree mismatch");
  const auto tabs = standard_tableaux(lambda);
  const std::size_t d = tabs.size();
  IntegerMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int> row_of(p.size());
    for (std::size_t r = 0; r < tabs[i].rows.size(); ++r)
      for (int v : tabs[i].rows[r]) row_of[v] = static_cast<int>(r);
    for (std::size_t j = 0; j < d; ++j) a(i, j) = tabloid_coefficient(row_of, columns_of(tabs[j]), p);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Rational& c) {
  GroupAlgebraElement x(p.size());
  x.add(p, c);
  return x;
}

void GroupAlgebraElement::add(const Permutation& p, const Rational& c) {
  if (p.size() != n_) throw UsageError("group algebra: degree mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, x] : terms_) x *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n_ != b.n_) throw UsageError("group algebra: degree mismatch");
  GroupAlgebraElement r(a.n_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, e] : b.terms_) r.add(p * q, c * e);
  return r;
}

// ---------------------------------------------------------------------------
// Representations

IntegerMatrix SmallMatrix::to_integer() const {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

IrreducibleRepresentation::IrreducibleRepresentation(const Partition& lambda)
    : lambda_(lambda), n_(static_cast<std::size_t>(lambda.weight())), tableaux_(standard_tableaux(lambda)) {
  d_ = tableaux_.size();
  row_of_.assign(d_, std::vector<int>(n_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t r = 0; r < tableaux_[i].rows.size(); ++r)
      for (int v : tableaux_[i].rows[r]) row_of_[i][v] = static_cast<int>(r);
  for (const auto& t : tableaux_) cols_.push_back(columns_of(t));

  // A(id) is unit triangular, so its inverse is integral.
  const IntegerMatrix a = clifton_matrix(lambda_, Permutation::identity(n_));
  ExactMatrix aug(d_, 2 * d_);
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) aug(i, j) = Rational(a(i, j));
    aug(i, d_ + i) = 1;
  }
  const RcfResult r = rcf(aug);
  if (r.rank != d_ || (d_ > 0 && r.pivots.back() != d_ - 1)) throw Error("A(id) is singular");
  a_id_inverse_.n = d_;
  a_id_inverse_.a.assign(d_ * d_, 0);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      const Rational& x = r.form(i, d_ + j);
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw Error("A(id)^{-1} is not a small integer matrix");
      a_id_inverse_(i, j) = x.get_num().get_si();
    }
}

void IrreducibleRepresentation::add_clifton(SmallMatrix& acc, const Permutation& p, std::int64_t c) const {
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      const int s = tabloid_coefficient(row_of_[i], cols_[j], p);
      if (s) acc(i, j) = checked_add(acc(i, j), s > 0 ? c : -c);
    }
}

SmallMatrix IrreducibleRepresentation::image_small(const std::map<Permutation, std::int64_t>& x) const {
  SmallMatrix acc;
  acc.n = d_;
  acc.a.assign(d_ * d_, 0);
  for (const auto& [p, c] : x) {
    if (p.size() != n_) throw UsageError("representation: degree mismatch");
    add_clifton(acc, p, c);
  }
  SmallMatrix out;
  out.n = d_;
  out.a.assign(d_ * d_, 0);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t k = 0; k < d_; ++k) {
      const std::int64_t f = a_id_inverse_(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < d_; ++j)
        if (acc(k, j)) out(i, j) = checked_add(out(i, j), checked_mul(f, acc(k, j)));
    }
  return out;
}

IntegerMatrix IrreducibleRepresentation::matrix(const Permutation& p) const {
  return image_small({{p, 1}}).to_integer();
}

ExactMatrix IrreducibleRepresentation::image(const GroupAlgebraElement& x) const {
  // Sum over a common denominator, then divide once.
  Integer l = 1;
  for (const auto& [p, c] : x.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ExactMatrix out(d_, d_);
  if (x.is_zero()) return out;
  std::map<Permutation, std::int64_t> scaled;
  bool small = l.fits_slong_p();
  for (const auto& [p, c] : x.terms()) {
    const Integer v = c.get_num() * (l / c.get_den());
    if (!v.fits_slong_p() || cmpabs(v, Integer(1L << 40)) > 0) small = false;
    if (small) scaled.emplace(p, v.get_si());
  }
  if (small) {
    const SmallMatrix s = image_small(scaled);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) out(i, j) = Rational(Integer(static_cast<long>(s(i, j))), l);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) out(i, j).canonicalize();
    return out;
  }
  for (const auto& [p, c] : x.terms()) {
    const IntegerMatrix r = matrix(p);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        if (r(i, j) != 0) out(i, j) += c * r(i, j);
  }
  return out;
}

IntegerMatrix irrep(const Partition& lambda, const Permutation& p) {
  return IrreducibleRepresentation(lambda).matrix(p);
}

ExactMatrix algebra_image(const Partition& lambda, const GroupAlgebraElement& x) {
  if (!x.is_zero() && static_cast<int>(x.degree()) != lambda.weight())
    throw UsageError("algebra_image: degree mismatch");
  return IrreducibleRepresentation(lambda).image(x);
}

std::vector<ExactMatrix> operation_signature(const GroupAlgebraElement& op) {
  if (!op.is_zero() && op.degree() != 3) throw UsageError("operation_signature: degree must be 3");
  std::vector<ExactMatrix> out;
  for (const auto& lambda : partitions(3)) out.push_back(rcf(algebra_image(lambda, op)).form);
  return out;
}

}  // namespace comtrans
