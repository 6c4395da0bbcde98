#include <random>

#include "comtrans/exact_linalg.hpp"
#include "comtrans/modular.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace comtrans;

TEST_CASE("rcf agrees with Gauss-Jordan, is idempotent and keeps the row space") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(1, 8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = size(rng), c = size(rng);
    // Every third matrix gets a forced dependent row.
    ExactMatrix m = oracle::random_matrix(rng, r, c, -3, 3, t % 2 == 0);
    if (t % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r / 2, j);
    const RcfResult f = rcf(m);
    const auto expect = oracle::gauss_jordan(oracle::rows_of(m), c);
    REQUIRE(f.rank == expect.size());
    for (std::size_t i = 0; i < f.rank; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(f.form(i, j) == expect[i][j]);
    for (std::size_t i = f.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) CHECK(f.form(i, j) == 0);
    CHECK(rcf(f.form).form == f.form);
    auto both = oracle::rows_of(m);
    for (const auto& row : oracle::rows_of(f.form)) both.push_back(row);
    CHECK(oracle::rank(both, c) == f.rank);
    CHECK(rank_mod_p(m, kPrimeA) == f.rank);
  }
}

TEST_CASE("nullspace rows are orthogonal to every row") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const ExactMatrix m = oracle::random_matrix(rng, 4, 7, -2, 2);
    const ExactMatrix n = nullspace(m);
    CHECK(n.rows() == 7 - rank(m));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < n.rows(); ++k) {
        Rational s = 0;
        for (std::size_t j = 0; j < 7; ++j) s += m(i, j) * n(k, j);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("HNF transform is unimodular and integer kernels are complete") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    const IntegerMatrix m = to_integer(oracle::random_matrix(rng, 5, 4, -9, 9));
    const HnfResult h = hnf_with_transform(m);
    CHECK(multiply(h.u, m) == h.h);
    const Integer det = determinant(h.u);
    CHECK(abs(det) == 1);
    const IntegerMatrix w = to_integer(oracle::random_matrix(rng, 3, 6, -5, 5));
    const LatticeBasis k = integer_kernel_basis(w);
    CHECK(k.size() == 6 - rank(w));
    for (const auto& v : k.vectors)
      for (std::size_t i = 0; i < 3; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < 6; ++j) s += w(i, j) * v[j];
        CHECK(s == 0);
      }
  }
}

namespace {

// Every vector of `a` is an integer combination of the vectors of `b`.
bool in_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  oracle::Rows basis;
  for (const auto& v : b.vectors) basis.emplace_back(v.begin(), v.end());
  for (const auto& v : a.vectors) {
    std::vector<Rational> x;
    if (!oracle::solve_left(basis, {v.begin(), v.end()}, x)) return false;
    for (const auto& c : x)
      if (c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("LLL preserves the lattice and returns a reduced basis") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> rk(1, 5), extra(0, 2);
  int done = 0;
  while (done < 50) {
    const std::size_t r = rk(rng), n = r + extra(rng);
    const ExactMatrix m = oracle::random_matrix(rng, r, n, -40, 40);
    if (oracle::rank(oracle::rows_of(m), n) != r) continue;
    const LatticeBasis b = LatticeBasis::from_matrix(to_integer(m));
    const LatticeBasis l = lll_reduce(b);
    CHECK(l.size() == r);
    CHECK(is_lll_reduced(l));
    CHECK(in_lattice(l, b));
    CHECK(in_lattice(b, l));
    CHECK(same_lattice(b, l));
    CHECK(same_lattice(b, pairwise_reduce(b)));
    ++done;
  }
}

TEST_CASE("dump format round-trips rationals") {
  ExactMatrix m(2, 3);
  m(0, 0) = Rational(1, 2);
  m(0, 2) = -7;
  m(1, 1) = Rational(-3, 4);
  const std::string text = dump(m);
  CHECK(text == "2 3\n1/2 0 -7\n0 -3/4 0\n");
  CHECK(parse_dump(text) == m);
  CHECK_THROWS_AS(parse_dump("2 2\n1 2\n"), UsageError);
}

TEST_CASE("modular echelon across two primes") {
  CHECK(is_prime(kPrimeA));
  CHECK(is_prime(kPrimeB));
  CHECK(kPrimeA != kPrimeB);
  // A matrix singular mod 5 only.
  ExactMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 1;
  CHECK(rank_mod_p(m, 5) == 1);
  CHECK(rank_mod_p(m, kPrimeA) == 2);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 5), 5), PrimeUnusable);
}
