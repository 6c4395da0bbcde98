#include <algorithm>
#include <random>

#include "comtrans/symmetric_group.hpp"
#include "doctest.h"

using namespace comtrans;

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Hook length formula.
Integer hook_dimension(const Partition& l) {
  Integer num = 1, den = 1;
  for (int i = 1; i <= l.weight(); ++i) num *= i;
  for (std::size_t r = 0; r < l.parts.size(); ++r)
    for (int c = 0; c < l.parts[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < l.parts.size(); ++s) below += l.parts[s] > c;
      den *= l.parts[r] - c - 1 + below + 1;
    }
  return num / den;
}

}  // namespace

TEST_CASE("partition parsing and notation") {
  CHECK(parse_partition("321^2").parts == std::vector<int>{3, 2, 1, 1});
  CHECK(parse_partition("2^31").parts == std::vector<int>{2, 2, 2, 1});
  CHECK(parse_partition("1^7").weight() == 7);
  CHECK(Partition{{5, 1, 1}}.to_string() == "51^2");
  CHECK_THROWS_AS(parse_partition("3x"), UsageError);
  CHECK_THROWS_AS(parse_partition("23"), UsageError);
  const auto p7 = partitions(7);
  CHECK(p7.size() == 15);
  CHECK(p7.front().to_string() == "7");
  CHECK(p7.back().to_string() == "1^7");
}

TEST_CASE("irrep dimensions follow the hook length formula") {
  for (int n = 1; n <= 7; ++n) {
    Integer sum = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& l : partitions(n)) {
      const Integer d = hook_dimension(l);
      CHECK(Integer(dim_irrep(l)) == d);
      CHECK(Integer(standard_tableaux(l).size()) == d);
      sum += d * d;
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("Clifton matrix at the identity is invertible") {
  for (const auto& l : partitions(6)) CHECK(determinant(clifton_matrix(l, Permutation::identity(6))) != 0);
}

TEST_CASE("representation matrices are homomorphisms on S_7") {
  std::mt19937_64 rng(424242);
  for (const auto& l : partitions(7)) {
    const IrreducibleRepresentation rep(l);
    CHECK(rep.matrix(Permutation::identity(7)) == IntegerMatrix::identity(rep.dim()));
    for (int t = 0; t < 200; ++t) {
      const Permutation p = random_permutation(rng, 7), q = random_permutation(rng, 7);
      REQUIRE(multiply(rep.matrix(p), rep.matrix(q)) == rep.matrix(p * q));
    }
  }
}

TEST_CASE("group algebra images are linear and multiplicative") {
  std::mt19937_64 rng(5);
  const Partition l = parse_partition("32");
  const IrreducibleRepresentation rep(l);
  for (int t = 0; t < 20; ++t) {
    GroupAlgebraElement x(5), y(5);
    std::map<Permutation, std::int64_t> xs;
    for (int k = 0; k < 4; ++k) {
      const Permutation p = random_permutation(rng, 5), q = random_permutation(rng, 5);
      x.add(p, k + 1);
      xs[p] += k + 1;
      y.add(q, 1 - 2 * k);
    }
    CHECK(multiply(rep.image(x), rep.image(y)) == rep.image(x * y));
    CHECK(rep.image_small(xs).to_integer() == to_integer(rep.image(x)));
    CHECK(algebra_image(l, x) == rep.image(x));
  }
}

TEST_CASE("sign and trivial representations") {
  const IrreducibleRepresentation triv(parse_partition("5")), sgn(parse_partition("1^5"));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Permutation p = random_permutation(rng, 5);
    CHECK(triv.matrix(p)(0, 0) == 1);
    CHECK(sgn.matrix(p)(0, 0) == p.sign());
  }
}
