#include "comtrans/identity_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "comtrans/identity_catalog.hpp"

namespace comtrans {

std::size_t thread_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("COMTRANS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

KernelReport kernel_pipeline(std::size_t w, const OpList& ops, std::size_t lll_cap) {
  KernelReport r;
  r.weight = w;
  r.ops = ops;
  const IntegerMatrix m = expansion_matrix(w, ops);
  r.rows = m.rows();
  r.cols = m.cols();
  r.expansion_rank = rank(m);
  const LatticeBasis kernel = hermite_basis(integer_kernel_basis(m));
  r.nullity = kernel.size();
  if (r.nullity != r.cols - r.expansion_rank) throw Error("kernel dimension does not match the rank");
  r.max_length_before = 0;
  for (const auto& l : squared_lengths(kernel))
    if (l > r.max_length_before) r.max_length_before = l;
  if (kernel.size() <= lll_cap) {
    r.reduced = lll_reduce(kernel);
    r.lll_applied = true;
  } else {
    r.reduced = pairwise_reduce(kernel);
  }
  r.reduced = sort_and_normalize(r.reduced);
  r.lengths = squared_lengths(r.reduced);
  return r;
}

MultilinearPoly integral_primitive(const MultilinearPoly& f) {
  Integer l = 1, g = 0;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : f.terms()) {
    const Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  MultilinearPoly r = f;
  if (g != 0) r *= Rational(l, g);
  return r;
}

std::vector<std::vector<Integer>> orbit_rows(const MultilinearPoly& f, const MonomialIndex& idx) {
  const MultilinearPoly g = integral_primitive(f);
  std::vector<std::vector<Integer>> out;
  for (const auto& p : all_permutations(idx.degree())) out.push_back(idx.vector(apply_permutation(p, g)));
  return out;
}

namespace {

void add_orbit(IntegerEchelon& e, const MultilinearPoly& f, const MonomialIndex& idx) {
  for (const auto& row : orbit_rows(f, idx)) e.add_row(std::span<const Integer>(row));
}

}  // namespace

std::vector<std::size_t> minimal_module_generators(const KernelReport& report) {
  const MonomialIndex idx(report.weight, report.ops);
  IntegerEchelon e(idx.size());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < report.reduced.size(); ++i) {
    if (e.rank() == report.nullity) break;
    const auto& v = report.reduced.vectors[i];
    if (e.contains(v)) continue;
    kept.push_back(i);
    add_orbit(e, idx.poly(v), idx);
  }
  return kept;
}

NewGeneratorReport find_new_generators(const KernelReport& report, const std::vector<MultilinearPoly>& lower) {
  const MonomialIndex idx(report.weight, report.ops);
  NewGeneratorReport r;
  r.kernel_rank = report.nullity;
  IntegerEchelon e(idx.size());
  const auto cons = consequence_set(lower, report.weight, report.ops);
  r.consequences = cons.size();
  for (const auto& k : cons) {
    add_orbit(e, k, idx);
    r.consequence_rows += idx.perms();
  }
  r.consequence_rank = e.rank();
  for (std::size_t i = 0; i < report.reduced.size() && e.rank() < report.nullity; ++i) {
    const auto& v = report.reduced.vectors[i];
    if (e.contains(v)) continue;
    const MultilinearPoly f = idx.poly(v);
    add_orbit(e, f, idx);
    r.new_rows.push_back(i);
    r.new_identities.push_back(f);
  }
  r.final_rank = e.rank();
  return r;
}

std::size_t consequence_rank(std::size_t w, const OpList& ops, const std::vector<MultilinearPoly>& lower,
                             const std::vector<MultilinearPoly>& extra) {
  const MonomialIndex idx(w, ops);
  IntegerEchelon e(idx.size());
  for (const auto& k : consequence_set(lower, w, ops)) add_orbit(e, k, idx);
  for (const auto& f : extra) add_orbit(e, f, idx);
  return e.rank();
}

bool verify_identity(const MultilinearPoly& f) { return expand(f).is_zero(); }

WacReport wac_analysis() {
  WacReport r;
  const OpList ops = {OpId::Wac};
  const IntegerMatrix m = expansion_matrix(2, ops);
  r.kernel_rank = m.cols() - rank(m);
  const MonomialIndex idx(2, ops);
  IntegerEchelon e(idx.size());
  for (const auto& k : consequence_set({wac_symmetric_sum()}, 2, ops)) add_orbit(e, k, idx);
  r.consequence_rank = e.rank();
  r.new_module_dimension = r.kernel_rank - r.consequence_rank;
  const MultilinearPoly t = wac_derivation_identity();
  r.derivation_identity_in_kernel = verify_identity(t);
  r.misprinted_identity_in_kernel = verify_identity(wac_derivation_identity_misprint());
  add_orbit(e, t, idx);
  r.derivation_orbit_dimension = e.rank() - r.consequence_rank;
  return r;
}

std::size_t wac_new_module_dimension() { return wac_analysis().new_module_dimension; }

}  // namespace comtrans
