#include "comtrans/comtrans_rewrite.hpp"
#include "comtrans/identity_catalog.hpp"
#include "doctest.h"

using namespace comtrans;

TEST_CASE("comtrans relation matrix and its rules") {
  const ComtransGroebner gb = comtrans_groebner();
  CHECK(gb.relations.rows() == 18);
  CHECK(gb.relations.cols() == 12);
  CHECK(rank(gb.relations) == 7);
  CHECK(gb.rcf == row_basis(gb.relations));
  const std::vector<std::string> expect = {
      "<x,y,z> -> -<z,y,x> - [y,x,z] + [z,y,x]",
      "<x,z,y> -> <z,x,y> - <z,y,x> - [y,x,z] - [z,x,y]",
      "<y,x,z> -> -<z,x,y> + [y,x,z] + [z,x,y]",
      "<y,z,x> -> -<z,x,y> + <z,y,x> + [y,x,z] - [z,y,x]",
      "[x,y,z] -> -[y,x,z]",
      "[x,z,y] -> -[z,x,y]",
      "[y,z,x] -> -[z,y,x]"};
  REQUIRE(gb.rules.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(to_string(gb.rules[i]) == expect[i]);
  CHECK(gb.irreducible.size() == 5);
}

TEST_CASE("rules are consequences of the relations") {
  const OpList ops = {OpId::Commutator, OpId::Translator};
  const ComtransGroebner gb = comtrans_groebner();
  for (const auto& rule : gb.rules) {
    // lhs - rhs must expand to zero.
    const BasisOperation& l = basis12()[rule.lhs];
    TreeMonomial m{{static_cast<std::int8_t>(l.op), -1, -1, -1}, {l.order[0], l.order[1], l.order[2]}};
    MultilinearPoly f = MultilinearPoly::of(m);
    for (const auto& [j, c] : rule.rhs) {
      const BasisOperation& r = basis12()[j];
      f.add({{static_cast<std::int8_t>(r.op), -1, -1, -1}, {r.order[0], r.order[1], r.order[2]}}, -c);
    }
    CHECK(expand(f).is_zero());
  }
  (void)ops;
}

TEST_CASE("rewriting is confluent and sound up to weight 2") {
  const ComtransGroebner gb = comtrans_groebner();
  const OpList ops = {OpId::Commutator, OpId::Translator};
  for (std::size_t w = 1; w <= 2; ++w) {
    const MonomialIndex idx(w, ops);
    std::size_t irreducible = 0;
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const TreeMonomial m = idx.monomial(c);
      const MultilinearPoly nf = normal_form(m, gb);
      const MultilinearPoly f = MultilinearPoly::of(m);
      REQUIRE(normal_form_by_steps(f, Strategy::LeftmostOutermost, gb) == nf);
      REQUIRE(normal_form_by_steps(f, Strategy::LeftmostInnermost, gb) == nf);
      for (const auto& [t, coeff] : nf.terms()) CHECK(is_irreducible(t, gb));
      REQUIRE(expand(nf) == expand(f));
      irreducible += is_irreducible(m, gb);
    }
    CHECK(Integer(irreducible) == count_normal_forms(w, CountMethod::Enumerate));
  }
}

TEST_CASE("normal form counts match the conjectured formula") {
  // (3w)! / (w! 6^w) * 5^w
  auto formula = [](std::size_t w) -> Integer {
    Integer f = 1, d = 1;
    for (std::size_t i = 1; i <= 3 * w; ++i) f *= i;
    for (std::size_t i = 1; i <= w; ++i) d *= 6 * i;
    Integer p = 1;
    for (std::size_t i = 0; i < w; ++i) p *= 5;
    return f / d * p;
  };
  const std::vector<long> printed = {1, 5, 250, 35000};
  for (std::size_t w = 0; w <= 3; ++w) {
    CHECK(count_normal_forms(w, CountMethod::Enumerate) == printed[w]);
    CHECK(conjecture_value(w) == printed[w]);
  }
  for (std::size_t w = 0; w <= 10; ++w) {
    CHECK(count_normal_forms(w, CountMethod::Structural) == formula(w));
    CHECK(conjecture_value(w) == formula(w));
  }
  CHECK_THROWS_AS(count_normal_forms(4, CountMethod::Enumerate), ResourceError);
}
