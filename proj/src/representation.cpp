// Per-partition ranks: each consequence K and each expansion xi_j is split
// into its association-type components, and every component is replaced by
// its image under the irreducible representation R_lambda.

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "comtrans/identity_catalog.hpp"
#include "comtrans/identity_search.hpp"
#include "comtrans/modular.hpp"

namespace comtrans {

namespace {

using Component = std::map<Permutation, std::int64_t>;
using Split = std::vector<std::pair<std::size_t, Component>>;  // (type index, component)

std::int64_t small_coefficient(const Rational& c) {
  if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw Error("coefficient is not a small integer");
  return c.get_num().get_si();
}

Split split_by_type(const MultilinearPoly& f, const std::map<AssociationType, std::size_t>& type_pos) {
  std::map<std::size_t, Component> parts;
  for (const auto& [m, c] : f.terms()) {
    auto it = type_pos.find(m.type);
    if (it == type_pos.end()) throw Error("monomial of an unexpected association type");
    parts[it->second][Permutation(m.leaves)] += small_coefficient(c);
  }
  Split out;
  for (auto& [j, comp] : parts) {
    std::erase_if(comp, [](const auto& kv) { return kv.second == 0; });
    if (!comp.empty()) out.emplace_back(j, std::move(comp));
  }
  return out;
}

Component expansion_component(const AssociationType& t) {
  Component c;
  const AssocPoly e = expand(identity_monomial(t));
  for (const auto& [p, x] : e.terms()) c[p] = small_coefficient(x);
  return c;
}

// Rows of the block row [R(K^1) ... R(K^T)] as int64 vectors of width T*d.
std::vector<std::vector<std::int64_t>> block_rows(const IrreducibleRepresentation& ir, const Split& k,
                                                  std::size_t types) {
  const std::size_t d = ir.dim();
  std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(types * d, 0));
  for (const auto& [j, comp] : k) {
    const SmallMatrix r = ir.image_small(comp);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) rows[a][j * d + b] = r(a, b);
  }
  return rows;
}

std::vector<std::uint32_t> to_mod(const std::vector<std::int64_t>& v, std::uint64_t p) {
  std::vector<std::uint32_t> out(v.size());
  const std::int64_t sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t x = v[i] % sp;
    if (x < 0) x += sp;
    out[i] = static_cast<std::uint32_t>(x);
  }
  return out;
}

std::vector<Integer> to_integer_row(const std::vector<std::int64_t>& v) {
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

// E_lambda: block j is R(xi_j)^t.
IntegerMatrix expansion_block_row(const IrreducibleRepresentation& ir, const std::vector<Component>& xi) {
  const std::size_t d = ir.dim();
  IntegerMatrix e(d, xi.size() * d);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const SmallMatrix r = ir.image_small(xi[j]);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) e(a, j * d + b) = static_cast<long>(r(b, a));
  }
  return e;
}

// sum_j R(K^j) R(xi_j) == 0, i.e. the block row of K is orthogonal to E.
bool block_in_kernel(const IrreducibleRepresentation& ir, const Split& k, const std::vector<Component>& xi) {
  const std::size_t d = ir.dim();
  std::vector<std::int64_t> acc(d * d, 0);
  for (const auto& [j, comp] : k) {
    const SmallMatrix a = ir.image_small(comp);
    const SmallMatrix b = ir.image_small(xi[j]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t m = 0; m < d; ++m) {
        const std::int64_t x = a(r, m);
        if (x == 0) continue;
        for (std::size_t c = 0; c < d; ++c) {
          std::int64_t t;
          if (__builtin_mul_overflow(x, b(m, c), &t) || __builtin_add_overflow(acc[r * d + c], t, &acc[r * d + c]))
            throw ResourceError("containment check overflows 64 bits");
        }
      }
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
}

// Runs f(i) for i in [0, n) on `threads` workers; results are written by index
// so the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& f) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next++;
        if (i >= n) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool contains_partition(const std::vector<Partition>& list, const Partition& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

std::vector<Partition> selected_partitions(int n, const std::vector<Partition>& only) {
  std::vector<Partition> all = partitions(n);
  if (only.empty()) return all;
  for (const auto& p : only)
    if (p.weight() != n) throw UsageError("partition " + p.to_string() + " is not a partition of " + std::to_string(n));
  std::vector<Partition> out;
  for (const auto& p : all)
    if (contains_partition(only, p)) out.push_back(p);
  return out;
}

}  // namespace

MultiplicityTable multiplicity_table(std::size_t w, const OpList& ops, const std::vector<MultilinearPoly>& lower,
                                     const TableOptions& options) {
  MultiplicityTable table;
  table.weight = w;
  table.ops = ops;
  const auto types = association_types(w, ops);
  table.types = types.size();
  std::map<AssociationType, std::size_t> type_pos;
  for (std::size_t i = 0; i < types.size(); ++i) type_pos[types[i]] = i;

  const auto cons = consequence_set(lower, w, ops);
  table.consequences = cons.size();
  std::vector<Split> split;
  for (const auto& k : cons) split.push_back(split_by_type(integral_primitive(k), type_pos));
  std::vector<Component> xi;
  for (const auto& t : types) xi.push_back(expansion_component(t));

  const auto parts = selected_partitions(static_cast<int>(2 * w + 1), options.only);
  table.rows.resize(parts.size());
  parallel_for(parts.size(), thread_count(options.threads), [&](std::size_t pi) {
    MultiplicityRow& row = table.rows[pi];
    row.lambda = parts[pi];
    const IrreducibleRepresentation ir(row.lambda);
    const std::size_t d = ir.dim(), width = types.size() * d;
    row.d = d;
    row.e = rank(expansion_block_row(ir, xi));
    row.a = width - row.e;

    ModularEchelon ea(width, kPrimeA), eb(width, kPrimeB);
    const bool exact = contains_partition(options.exact_partitions, row.lambda);
    IntegerEchelon ex(width);
    row.contained = true;
    for (const auto& k : split) {
      if (!block_in_kernel(ir, k, xi)) row.contained = false;
      for (const auto& r : block_rows(ir, k, types.size())) {
        if (ea.rank() < row.a) ea.add_row(to_mod(r, kPrimeA));
        if (eb.rank() < row.a) eb.add_row(to_mod(r, kPrimeB));
        if (exact) ex.add_row(std::span<const Integer>(to_integer_row(r)));
      }
    }
    row.c_prime_a = ea.rank();
    row.c_prime_b = eb.rank();
    row.primes_agree = row.c_prime_a == row.c_prime_b;
    row.c = std::max(row.c_prime_a, row.c_prime_b);
    if (exact) {
      row.exact_checked = true;
      row.c = ex.rank();
    }
    if (row.c > row.a) throw Error("consequence rank exceeds the identity multiplicity");
    row.n = row.a - row.c;
  });
  return table;
}

std::vector<MultilinearPoly> degree7_lower_identities(OpId op) {
  std::vector<MultilinearPoly> lower;
  if (op == OpId::Commutator) {
    lower = consequence_set({relation_alternating()}, 2, {op});
    lower.push_back(identity_commutator5());
  } else if (op == OpId::Translator) {
    lower = consequence_set({relation_jacobi()}, 2, {op});
    lower.push_back(identity_translator5());
  } else {
    throw UsageError("degree 7 tables are defined for the commutator and the translator");
  }
  return lower;
}

MultiplicityTable degree7_table(OpId op, const TableOptions& options) {
  return multiplicity_table(3, {op}, degree7_lower_identities(op), options);
}

std::vector<MultilinearPoly> mixed_weight2_identities() {
  auto ids = consequence_set({relation_alternating(), relation_jacobi(), relation_comtrans()}, 2,
                             {OpId::Commutator, OpId::Translator});
  for (auto f : {identity_commutator5(), identity_translator5(), identity_mixed5a(), identity_mixed5b(),
                 identity_mixed5c()})
    ids.push_back(f);
  return ids;
}

namespace {

// Basis of the right nullspace of e mod p, from its RREF.
std::vector<std::vector<std::uint32_t>> nullspace_mod(const IntegerMatrix& e, std::uint64_t p) {
  ModularEchelon ech(e.cols(), p);
  for (std::size_t i = 0; i < e.rows(); ++i) ech.add_row(e.row(i));
  const auto rows = ech.canonical_rows();
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(e.cols(), false);
  for (const auto& r : rows) {
    const auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; });
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    is_pivot[pivots.back()] = true;
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(e.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][f]) v[pivots[i]] = static_cast<std::uint32_t>(p - rows[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<MixedRow> degree7_mixed_check(const MixedOptions& options) {
  const OpList ops = {OpId::Commutator, OpId::Translator};
  const auto types = association_types(3, ops);
  std::map<AssociationType, std::size_t> type_pos;
  for (std::size_t i = 0; i < types.size(); ++i) type_pos[types[i]] = i;

  const auto cons = consequence_set(mixed_weight2_identities(), 3, ops);
  bool verified = true;
  std::vector<Split> split;
  for (const auto& k : cons) {
    if (!verify_identity(k)) verified = false;
    split.push_back(split_by_type(integral_primitive(k), type_pos));
  }
  std::vector<Component> xi;
  for (const auto& t : types) xi.push_back(expansion_component(t));

  // Single-operation types, their expansions, and their positions among the
  // two-operation types.
  struct SingleOp {
    std::vector<std::size_t> embed;
    std::vector<Component> xi;
  };
  std::vector<SingleOp> single;
  for (OpId op : ops) {
    SingleOp s;
    for (const auto& t : association_types(3, {op})) {
      s.embed.push_back(type_pos.at(t));
      s.xi.push_back(expansion_component(t));
    }
    single.push_back(std::move(s));
  }

  const auto parts = selected_partitions(7, options.only);
  std::vector<MixedRow> out(parts.size());
  parallel_for(parts.size(), thread_count(options.threads), [&](std::size_t pi) {
    MixedRow& row = out[pi];
    row.lambda = parts[pi];
    row.consequences_verified = verified;
    const IrreducibleRepresentation ir(row.lambda);
    const std::size_t d = ir.dim(), width = types.size() * d;
    row.d = d;
    const IntegerMatrix e = expansion_block_row(ir, xi);
    row.e = rank(e);
    row.a = width - row.e;

    // D^1, D^2 modulo each prime: nullspaces of the single-operation E,
    // embedded column-blockwise.
    ModularEchelon ea(width, kPrimeA), eb(width, kPrimeB);
    if (options.include_single_op_modules) {
      for (const auto& s : single) {
        const IntegerMatrix e1 = expansion_block_row(ir, s.xi);
        const std::size_t e1_rank = rank(e1);
        for (ModularEchelon* ech : {&ea, &eb}) {
          const auto null = nullspace_mod(e1, ech->prime());
          if (null.size() != e1.cols() - e1_rank) throw Error("single-operation rank differs modulo p");
          for (const auto& v : null) {
            std::vector<std::uint32_t> w(width, 0);
            for (std::size_t j = 0; j < s.embed.size(); ++j)
              for (std::size_t b = 0; b < d; ++b) w[s.embed[j] * d + b] = v[j * d + b];
            ech->add_row(std::move(w));
          }
        }
      }
    }
    row.single_op_rank = ea.rank();
    for (const auto& k : split) {
      const bool need_a = !options.early_stop || ea.rank() < row.a;
      const bool need_b = !options.early_stop || eb.rank() < row.a;
      if (!need_a && !need_b) break;
      for (const auto& r : block_rows(ir, k, types.size())) {
        if (need_a) ea.add_row(to_mod(r, kPrimeA));
        if (need_b) eb.add_row(to_mod(r, kPrimeB));
      }
    }
    row.c_prime_a = ea.rank();
    row.c_prime_b = eb.rank();
    row.c = std::max(row.c_prime_a, row.c_prime_b);

    ModularEchelon en(width, kPrimeA);
    for (auto& v : nullspace_mod(e, kPrimeA)) en.add_row(std::move(v));
    row.rcf_equal = en.canonical_rows() == ea.canonical_rows();
    row.ok = row.consequences_verified && row.c_prime_a == row.a && row.c_prime_b == row.a && row.rcf_equal;
  });
  return out;
}

}  // namespace comtrans
