#include "comtrans/identity_catalog.hpp"
#include "comtrans/identity_search.hpp"
#include "doctest.h"

using namespace comtrans;

namespace {

std::vector<long> lengths(const KernelReport& k) {
  std::vector<long> v;
  for (const auto& l : k.lengths) v.push_back(l.get_si());
  return v;
}

bool annihilates(const IntegerMatrix& e, const LatticeBasis& b) {
  for (const auto& v : b.vectors)
    for (std::size_t i = 0; i < e.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < e.cols(); ++j) s += e(i, j) * v[j];
      if (s != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("degree 3 kernel with both operations") {
  const OpList ops = {OpId::Commutator, OpId::Translator};
  const KernelReport k = kernel_pipeline(1, ops);
  CHECK(k.expansion_rank == 5);
  CHECK(k.nullity == 7);
  CHECK(lengths(k) == std::vector<long>{2, 2, 2, 3, 4, 4, 5});
  CHECK(same_lattice(k.reduced, integer_kernel_basis(expansion_matrix(1, ops))));
  CHECK(annihilates(expansion_matrix(1, ops), k.reduced));
  // The kernel lattice is generated by the permuted defining relations.
  const MonomialIndex idx(1, ops);
  LatticeBasis rel;
  rel.dimension = idx.size();
  for (const auto& f : {relation_alternating(), relation_jacobi(), relation_comtrans()})
    for (auto& row : orbit_rows(f, idx)) rel.vectors.push_back(row);
  CHECK(same_lattice(hermite_basis(rel), k.reduced));
  CHECK(minimal_module_generators(k).size() == 3);
}

TEST_CASE("degree 3 single operations") {
  CHECK(kernel_pipeline(1, {OpId::Commutator}).nullity == 3);
  CHECK(kernel_pipeline(1, {OpId::Translator}).nullity == 2);
  CHECK(kernel_pipeline(1, {OpId::Associative}).nullity == 0);
}

TEST_CASE("degree 5 commutator: one new generator") {
  const KernelReport k = kernel_pipeline(2, {OpId::Commutator});
  CHECK(k.rows == 120);
  CHECK(k.cols == 360);
  CHECK(k.expansion_rank == 70);
  CHECK(k.nullity == 290);
  CHECK(k.lengths.back() == 6);
  const NewGeneratorReport g = find_new_generators(k, {relation_alternating()});
  CHECK(g.consequences == 6);
  CHECK(g.consequence_rank == 270);
  CHECK(g.new_identities.size() == 1);
  CHECK(g.final_rank == 290);
  for (const auto& f : g.new_identities) CHECK(verify_identity(f));
  CHECK(consequence_rank(2, {OpId::Commutator}, {relation_alternating()}, {identity_commutator5()}) == 290);
}

TEST_CASE("degree 5 translator") {
  const KernelReport k = kernel_pipeline(2, {OpId::Translator});
  CHECK(k.nullity == 272);
  CHECK(consequence_rank(2, {OpId::Translator}, {relation_jacobi()}) == 200);
  CHECK(consequence_rank(2, {OpId::Translator}, {relation_jacobi()}, {identity_translator5()}) == 272);
}

TEST_CASE("weakly anticommutative operation") {
  const WacReport w = wac_analysis();
  CHECK(w.new_module_dimension == 141);
  CHECK(w.derivation_identity_in_kernel);
  CHECK_FALSE(w.misprinted_identity_in_kernel);
  CHECK(w.derivation_orbit_dimension < 141);
}

TEST_CASE("degree 7 rows against exact recomputation") {
  TableOptions o;
  o.only = {parse_partition("52"), parse_partition("1^7")};
  o.exact_partitions = o.only;
  const MultiplicityTable t = degree7_table(OpId::Translator, o);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.types == 12);
  CHECK(t.consequences == 56);
  const MultiplicityRow& r = t.rows[0];
  CHECK(r.d == 14);
  CHECK(r.c == 156);
  CHECK(r.a == 157);
  CHECK(r.n == 1);
  for (const auto& row : t.rows) {
    CHECK(row.primes_agree);
    CHECK(row.exact_checked);
    CHECK(row.contained);
  }
}

TEST_CASE("degree 7 mixed at 43, with and without the single-operation modules") {
  MixedOptions o;
  o.only = {parse_partition("43")};
  const MixedRow with = degree7_mixed_check(o).front();
  CHECK(with.ok);
  CHECK(with.c == with.a);
  CHECK(with.single_op_rank > 0);
  // The mixed consequences already span the single-operation identities, so
  // dropping them changes nothing.
  o.include_single_op_modules = false;
  const MixedRow without = degree7_mixed_check(o).front();
  CHECK(without.single_op_rank == 0);
  CHECK(without.c == without.a);
  CHECK(without.rcf_equal);
}

TEST_CASE("weight checks") {
  TableOptions o;
  o.only = {parse_partition("6")};
  CHECK_THROWS_AS(multiplicity_table(3, {OpId::Commutator}, {}, o), UsageError);
}
