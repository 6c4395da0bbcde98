#include <algorithm>

#include "comtrans/exact_linalg.hpp"

namespace comtrans {

IntegerMatrix LatticeBasis::as_matrix() const {
  IntegerMatrix m(vectors.size(), dimension);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dimension; ++j) m(i, j) = vectors[i][j];
  return m;
}

LatticeBasis LatticeBasis::from_matrix(const IntegerMatrix& m) {
  LatticeBasis b;
  b.dimension = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) b.vectors.emplace_back(m.row(i).begin(), m.row(i).end());
  return b;
}

Integer squared_length(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

std::vector<Integer> squared_lengths(const LatticeBasis& b) {
  std::vector<Integer> out;
  for (const auto& v : b.vectors) out.push_back(squared_length(v));
  return out;
}

namespace {

using Vec = std::vector<Integer>;

Integer dot(const Vec& a, const Vec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// a -= q * b
void axpy(Vec& a, const Integer& q, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] -= q * b[i];
}

// Nearest integer to n/d (d > 0), ties rounded up.
Integer round_div(const Integer& n, const Integer& d) {
  Integer t = 2 * n + d, q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Integer(2 * d).get_mpz_t());
  return q;
}

struct HnfWork {
  std::vector<Vec> a;
  std::vector<Vec> u;
  std::size_t rank = 0;
};

// Row HNF by repeated smallest-pivot division. With reduce_above = false the
// entries above pivots are left alone; rows at and below `rank` are the same
// either way, which is all the kernel computation needs.
HnfWork hnf_impl(const IntegerMatrix& m, bool with_transform, bool reduce_above) {
  HnfWork w;
  const std::size_t r = m.rows(), c = m.cols();
  w.a.resize(r);
  for (std::size_t i = 0; i < r; ++i) w.a[i].assign(m.row(i).begin(), m.row(i).end());
  if (with_transform) {
    w.u.assign(r, Vec(r));
    for (std::size_t i = 0; i < r; ++i) w.u[i][i] = 1;
  }
  auto row_op = [&](std::size_t i, const Integer& q, std::size_t p) {
    axpy(w.a[i], q, w.a[p]);
    if (with_transform) axpy(w.u[i], q, w.u[p]);
  };
  auto swap_rows = [&](std::size_t i, std::size_t p) {
    std::swap(w.a[i], w.a[p]);
    if (with_transform) std::swap(w.u[i], w.u[p]);
  };
  auto negate = [&](std::size_t p) {
    for (auto& x : w.a[p]) x = -x;
    if (with_transform)
      for (auto& x : w.u[p]) x = -x;
  };

  std::size_t p = 0;
  Integer q;
  for (std::size_t j = 0; j < c && p < r; ++j) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i) {
        if (w.a[i][j] == 0) continue;
        if (best == r || cmpabs(w.a[i][j], w.a[best][j]) < 0) best = i;
      }
      if (best == r) break;
      if (best != p) swap_rows(best, p);
      bool clean = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (w.a[i][j] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), w.a[i][j].get_mpz_t(), w.a[p][j].get_mpz_t());
        row_op(i, q, p);
        if (w.a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.a[p][j] == 0) continue;
    if (w.a[p][j] < 0) negate(p);
    if (reduce_above)
      for (std::size_t i = 0; i < p; ++i) {
        mpz_fdiv_q(q.get_mpz_t(), w.a[i][j].get_mpz_t(), w.a[p][j].get_mpz_t());
        if (q != 0) row_op(i, q, p);
      }
    ++p;
  }
  w.rank = p;
  return w;
}

}  // namespace

HnfResult hnf_with_transform(const IntegerMatrix& m) {
  HnfWork w = hnf_impl(m, true, true);
  HnfResult res;
  res.rank = w.rank;
  res.h = IntegerMatrix(m.rows(), m.cols());
  res.u = IntegerMatrix(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) res.h(i, j) = w.a[i][j];
    for (std::size_t j = 0; j < m.rows(); ++j) res.u(i, j) = w.u[i][j];
  }
  return res;
}

LatticeBasis hermite_basis(const LatticeBasis& b) {
  HnfWork w = hnf_impl(b.as_matrix(), false, true);
  LatticeBasis out;
  out.dimension = b.dimension;
  for (std::size_t i = 0; i < w.rank; ++i) out.vectors.push_back(std::move(w.a[i]));
  return out;
}

LatticeBasis integer_kernel_basis(const IntegerMatrix& m) {
  // Rows of U at the zero rows of HNF(m^T) span {v : v m^T = 0} = {v : m v = 0}.
  HnfWork w = hnf_impl(m.transpose(), true, false);
  LatticeBasis b;
  b.dimension = m.cols();
  for (std::size_t i = w.rank; i < w.u.size(); ++i) b.vectors.push_back(std::move(w.u[i]));
  return b;
}

// ---------------------------------------------------------------------------
// Integral LLL (all Gram-Schmidt data kept as integers d_i and lambda_ij).

namespace {

struct GsData {
  std::vector<Integer> d;                 // d[0] = 1, d[i] for vector i (1-based)
  std::vector<std::vector<Integer>> lam;  // lam[k][j], j < k, 1-based
};

// Fills d and lambda for the first k vectors, assuming rows 1..k-1 done.
void gs_row(const std::vector<Vec>& b, GsData& g, std::size_t k) {
  for (std::size_t j = 1; j <= k; ++j) {
    Integer u = dot(b[k - 1], b[j - 1]);
    for (std::size_t i = 1; i < j; ++i) {
      u = g.d[i] * u - g.lam[k][i] * g.lam[j][i];
      mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), g.d[i - 1].get_mpz_t());
    }
    if (j < k)
      g.lam[k][j] = u;
    else {
      if (u == 0) throw UsageError("lll_reduce: vectors are linearly dependent");
      g.d[k] = u;
    }
  }
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& input, const Rational& delta) {
  LatticeBasis out = input;
  const std::size_t n = out.vectors.size();
  if (n == 0) return out;
  const Integer dp = delta.get_num(), dq = delta.get_den();
  auto& b = out.vectors;
  GsData g;
  g.d.assign(n + 1, 0);
  g.lam.assign(n + 1, std::vector<Integer>(n + 1));
  g.d[0] = 1;
  g.d[1] = squared_length(b[0]);
  if (g.d[1] == 0) throw UsageError("lll_reduce: zero vector");

  auto red = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * g.lam[k][l];
    if (cmpabs(twice, g.d[l]) <= 0) return;
    const Integer q = round_div(g.lam[k][l], g.d[l]);
    axpy(b[k - 1], q, b[l - 1]);
    g.lam[k][l] -= q * g.d[l];
    for (std::size_t i = 1; i < l; ++i)
      if (g.lam[l][i] != 0) g.lam[k][i] -= q * g.lam[l][i];
  };

  std::size_t k = 2, kmax = 1;
  Integer lhs, rhs, t, B;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      gs_row(b, g, k);
    }
    for (;;) {
      red(k, k - 1);
      const Integer& lk = g.lam[k][k - 1];
      lhs = dq * g.d[k] * g.d[k - 2];
      rhs = dp * g.d[k - 1] * g.d[k - 1] - dq * lk * lk;
      if (!(lhs < rhs)) break;
      // swap(k)
      std::swap(b[k - 1], b[k - 2]);
      for (std::size_t j = 1; j + 1 < k; ++j) std::swap(g.lam[k][j], g.lam[k - 1][j]);
      const Integer lam = g.lam[k][k - 1];
      B = g.d[k - 2] * g.d[k] + lam * lam;
      mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), g.d[k - 1].get_mpz_t());
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        t = g.lam[i][k];
        Integer nk = g.d[k] * g.lam[i][k - 1] - lam * t;
        mpz_divexact(nk.get_mpz_t(), nk.get_mpz_t(), g.d[k - 1].get_mpz_t());
        g.lam[i][k] = nk;
        Integer nk1 = B * t + lam * g.lam[i][k];
        mpz_divexact(nk1.get_mpz_t(), nk1.get_mpz_t(), g.d[k].get_mpz_t());
        g.lam[i][k - 1] = nk1;
      }
      g.d[k - 1] = B;
      if (k > 2) --k;
    }
    for (std::size_t l = k - 1; l-- > 1;) red(k, l);
    ++k;
  }
  return out;
}

bool is_lll_reduced(const LatticeBasis& input, const Rational& delta) {
  const std::size_t n = input.vectors.size();
  if (n == 0) return true;
  GsData g;
  g.d.assign(n + 1, 0);
  g.lam.assign(n + 1, std::vector<Integer>(n + 1));
  g.d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) gs_row(input.vectors, g, k);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j)
      if (cmpabs(Integer(2 * g.lam[k][j]), g.d[j]) > 0) return false;
    // B_k >= (delta - mu^2) B_{k-1}, with B_k = d_k/d_{k-1}, mu = lam/d_{k-1}
    const Rational lhs = Rational(g.d[k] * g.d[k - 2]);
    const Rational lam(g.lam[k][k - 1]);
    const Rational rhs = delta * Rational(g.d[k - 1] * g.d[k - 1]) - lam * lam;
    if (lhs < rhs) return false;
  }
  return true;
}

LatticeBasis pairwise_reduce(const LatticeBasis& input) {
  // Kernel vectors are sparse, so dot products run over (index, value) lists.
  using Sparse = std::vector<std::pair<std::size_t, Integer>>;
  const auto to_sparse = [](const std::vector<Integer>& v) {
    Sparse s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) s.emplace_back(k, v[k]);
    return s;
  };
  LatticeBasis out = input;
  auto& b = out.vectors;
  const std::size_t n = b.size();
  std::vector<Sparse> sp(n);
  std::vector<Integer> len(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = to_sparse(b[i]);
    len[i] = squared_length(b[i]);
  }
  bool changed = true;
  Integer q, dt, newlen;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || len[j] == 0) continue;
        dt = 0;
        const Sparse &x = sp[i], &y = sp[j];
        for (std::size_t u = 0, v = 0; u < x.size() && v < y.size();) {
          if (x[u].first < y[v].first) ++u;
          else if (y[v].first < x[u].first) ++v;
          else dt += x[u++].second * y[v++].second;
        }
        if (cmpabs(Integer(2 * dt), len[j]) <= 0) continue;
        q = round_div(dt, len[j]);
        newlen = len[i] - 2 * q * dt + q * q * len[j];
        if (newlen >= len[i]) continue;
        axpy(b[i], q, b[j]);
        sp[i] = to_sparse(b[i]);
        len[i] = newlen;
        changed = true;
      }
  }
  return out;
}

LatticeBasis sort_and_normalize(const LatticeBasis& input) {
  LatticeBasis out = input;
  for (auto& v : out.vectors) {
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (it != v.end() && *it < 0)
      for (auto& x : v) x = -x;
  }
  std::vector<std::pair<Integer, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.vectors.size(); ++i) keyed.emplace_back(squared_length(out.vectors[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return out.vectors[x.second] < out.vectors[y.second];
  });
  LatticeBasis sorted;
  sorted.dimension = out.dimension;
  for (const auto& [l, i] : keyed) sorted.vectors.push_back(out.vectors[i]);
  return sorted;
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.dimension != b.dimension) return false;
  const HnfWork ha = hnf_impl(a.as_matrix(), false, true);
  const HnfWork hb = hnf_impl(b.as_matrix(), false, true);
  if (ha.rank != hb.rank) return false;
  for (std::size_t i = 0; i < ha.rank; ++i)
    if (ha.a[i] != hb.a[i]) return false;
  return true;
}

}  // namespace comtrans
