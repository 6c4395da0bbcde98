#include "comtrans/comtrans_rewrite.hpp"

#include <algorithm>
#include <functional>

#include "comtrans/identity_catalog.hpp"

namespace comtrans {

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 6> kOrders = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Subtree extents of a preorder code.
struct Layout {
  std::vector<std::size_t> end;         // one past the subtree in the code
  std::vector<std::size_t> leaf_begin;  // leaves covered by the subtree
  std::vector<std::size_t> leaf_end;
  std::vector<std::array<std::size_t, 3>> child;
};

Layout layout(const AssociationType& code) {
  Layout l;
  const std::size_t n = code.size();
  l.end.resize(n);
  l.leaf_begin.resize(n);
  l.leaf_end.resize(n);
  l.child.resize(n);
  std::size_t leaf = 0;
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t i) -> std::size_t {
    l.leaf_begin[i] = leaf;
    if (code[i] < 0) {
      ++leaf;
      l.end[i] = i + 1;
    } else {
      std::size_t j = i + 1;
      for (std::size_t c = 0; c < 3; ++c) {
        l.child[i][c] = j;
        j = walk(j);
      }
      l.end[i] = j;
    }
    l.leaf_end[i] = leaf;
    return l.end[i];
  };
  if (walk(0) != n) throw Error("malformed association type");
  return l;
}

// Sort key of a subtree: (degree, smallest variable).
std::pair<std::size_t, std::uint8_t> subtree_key(const TreeMonomial& m, const Layout& l, std::size_t i) {
  const auto b = m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_begin[i]);
  const auto e = m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_end[i]);
  return {l.leaf_end[i] - l.leaf_begin[i], *std::min_element(b, e)};
}

std::array<std::uint8_t, 3> ranks(const TreeMonomial& m, const Layout& l, std::size_t i) {
  std::array<std::pair<std::size_t, std::uint8_t>, 3> k;
  for (std::size_t c = 0; c < 3; ++c) k[c] = subtree_key(m, l, l.child[i][c]);
  std::array<std::uint8_t, 3> r{};
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t o = 0; o < 3; ++o)
      if (k[o] < k[c]) ++r[c];
  return r;
}

std::size_t pattern_at(const TreeMonomial& m, const Layout& l, std::size_t i) {
  return basis12_index(static_cast<OpId>(m.type[i]), ranks(m, l, i));
}

// Rule index by lhs basis index, -1 if irreducible.
std::array<int, 12> rule_table(const ComtransGroebner& gb) {
  std::array<int, 12> t;
  t.fill(-1);
  for (std::size_t r = 0; r < gb.rules.size(); ++r) t[gb.rules[r].lhs] = static_cast<int>(r);
  return t;
}

// Replaces the node at code position i of m by basis operation j (arguments
// taken from m's children by rank).
TreeMonomial replace_node(const TreeMonomial& m, const Layout& l, std::size_t i, std::size_t j) {
  const auto r = ranks(m, l, i);
  std::array<std::size_t, 3> by_rank{};
  for (std::size_t c = 0; c < 3; ++c) by_rank[r[c]] = l.child[i][c];
  const BasisOperation& b = basis12()[j];
  TreeMonomial out;
  out.type.assign(m.type.begin(), m.type.begin() + static_cast<std::ptrdiff_t>(i));
  out.leaves.assign(m.leaves.begin(), m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_begin[i]));
  out.type.push_back(static_cast<std::int8_t>(b.op));
  for (std::size_t s = 0; s < 3; ++s) {
    const std::size_t c = by_rank[b.order[s]];
    out.type.insert(out.type.end(), m.type.begin() + static_cast<std::ptrdiff_t>(c),
                    m.type.begin() + static_cast<std::ptrdiff_t>(l.end[c]));
    out.leaves.insert(out.leaves.end(), m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_begin[c]),
                      m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_end[c]));
  }
  out.type.insert(out.type.end(), m.type.begin() + static_cast<std::ptrdiff_t>(l.end[i]), m.type.end());
  out.leaves.insert(out.leaves.end(), m.leaves.begin() + static_cast<std::ptrdiff_t>(l.leaf_end[i]),
                    m.leaves.end());
  return out;
}

void check_ops(const TreeMonomial& m) {
  for (auto c : m.type)
    if (c >= 0 && c != static_cast<std::int8_t>(OpId::Commutator) && c != static_cast<std::int8_t>(OpId::Translator))
      throw UsageError("comtrans rewriting needs commutator and translator monomials only");
}

using Piece = std::pair<TreeMonomial, Rational>;

// Node-local normal form of the subtree at code position i.
std::vector<Piece> nf_subtree(const TreeMonomial& m, const Layout& l, std::size_t i, const ComtransGroebner& gb,
                              const std::array<int, 12>& rule_of) {
  if (m.type[i] < 0) return {{TreeMonomial{{-1}, {m.leaves[l.leaf_begin[i]]}}, Rational(1)}};
  const auto r = ranks(m, l, i);
  std::array<std::vector<Piece>, 3> by_rank;
  for (std::size_t c = 0; c < 3; ++c) by_rank[r[c]] = nf_subtree(m, l, l.child[i][c], gb, rule_of);
  const std::size_t p = basis12_index(static_cast<OpId>(m.type[i]), r);
  std::vector<std::pair<std::size_t, Rational>> terms;
  if (rule_of[p] < 0)
    terms.emplace_back(p, Rational(1));
  else
    terms = gb.rules[static_cast<std::size_t>(rule_of[p])].rhs;
  std::vector<Piece> out;
  for (const auto& [j, c] : terms) {
    const BasisOperation& b = basis12()[j];
    const auto& s0 = by_rank[b.order[0]];
    const auto& s1 = by_rank[b.order[1]];
    const auto& s2 = by_rank[b.order[2]];
    for (const auto& a0 : s0)
      for (const auto& a1 : s1)
        for (const auto& a2 : s2) {
          TreeMonomial t;
          t.type.push_back(static_cast<std::int8_t>(b.op));
          for (const Piece* a : {&a0, &a1, &a2}) {
            t.type.insert(t.type.end(), a->first.type.begin(), a->first.type.end());
            t.leaves.insert(t.leaves.end(), a->first.leaves.begin(), a->first.leaves.end());
          }
          out.emplace_back(std::move(t), c * a0.second * a1.second * a2.second);
        }
  }
  return out;
}

}  // namespace

const std::array<BasisOperation, 12>& basis12() {
  static const std::array<BasisOperation, 12> b = [] {
    std::array<BasisOperation, 12> out{};
    for (std::size_t i = 0; i < 6; ++i) {
      out[i] = {OpId::Translator, kOrders[i]};
      out[6 + i] = {OpId::Commutator, kOrders[i]};
    }
    return out;
  }();
  return b;
}

std::size_t basis12_index(OpId op, const std::array<std::uint8_t, 3>& order) {
  const auto it = std::find(kOrders.begin(), kOrders.end(), order);
  if (it == kOrders.end()) throw Error("argument order is not a permutation");
  const std::size_t k = static_cast<std::size_t>(it - kOrders.begin());
  if (op == OpId::Translator) return k;
  if (op == OpId::Commutator) return 6 + k;
  throw UsageError("not a comtrans operation");
}

std::string to_string(const BasisOperation& b) {
  const OperationSymbol& s = operation(b.op);
  std::string out(1, s.open);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += static_cast<char>('x' + b.order[i]);
  }
  return out + s.close;
}

std::string to_string(const RewriteRule& r) {
  std::string out = to_string(basis12()[r.lhs]) + " -> ";
  bool first = true;
  for (const auto& [j, c] : r.rhs) {
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    const Rational a = abs(c);
    if (a != 1) out += a.get_str();
    out += to_string(basis12()[j]);
    first = false;
  }
  if (first) out += "0";
  return out;
}

ExactMatrix comtrans_relation_matrix() {
  const std::vector<MultilinearPoly> rels = {relation_alternating(), relation_jacobi(), relation_comtrans()};
  const auto perms = all_permutations(3);
  ExactMatrix m(rels.size() * perms.size(), 12);
  std::size_t row = 0;
  for (const auto& rel : rels)
    for (const auto& p : perms) {
      const MultilinearPoly g = apply_permutation(p, rel);
      for (const auto& [t, c] : g.terms()) {
        std::array<std::uint8_t, 3> order{};
        for (std::size_t s = 0; s < 3; ++s) order[s] = t.leaves[s];
        m(row, basis12_index(static_cast<OpId>(t.type[0]), order)) += c;
      }
      ++row;
    }
  return m;
}

ComtransGroebner comtrans_groebner() {
  ComtransGroebner gb;
  gb.relations = comtrans_relation_matrix();
  const RcfResult r = rcf(gb.relations);
  gb.rcf = ExactMatrix(r.pivots.size(), 12);
  std::vector<bool> pivot(12, false);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    pivot[r.pivots[i]] = true;
    RewriteRule rule;
    rule.lhs = r.pivots[i];
    for (std::size_t j = 0; j < 12; ++j) {
      gb.rcf(i, j) = r.form(i, j);
      if (j != rule.lhs && r.form(i, j) != 0) rule.rhs.emplace_back(j, -r.form(i, j));
    }
    gb.rules.push_back(std::move(rule));
  }
  for (std::size_t j = 0; j < 12; ++j)
    if (!pivot[j]) gb.irreducible.push_back(j);
  return gb;
}

std::size_t node_pattern(const TreeMonomial& m, std::size_t node) {
  if (node >= m.type.size() || m.type[node] < 0) throw UsageError("not an internal node");
  return pattern_at(m, layout(m.type), node);
}

bool is_irreducible(const TreeMonomial& m, const ComtransGroebner& gb) {
  check_ops(m);
  const Layout l = layout(m.type);
  const auto rule_of = rule_table(gb);
  for (std::size_t i = 0; i < m.type.size(); ++i)
    if (m.type[i] >= 0 && rule_of[pattern_at(m, l, i)] >= 0) return false;
  return true;
}

bool rewrite_step(const TreeMonomial& m, Strategy s, const ComtransGroebner& gb, MultilinearPoly& out) {
  check_ops(m);
  const Layout l = layout(m.type);
  const auto rule_of = rule_table(gb);
  std::vector<std::size_t> order;
  if (s == Strategy::LeftmostOutermost) {
    for (std::size_t i = 0; i < m.type.size(); ++i) order.push_back(i);
  } else {
    std::function<void(std::size_t)> post = [&](std::size_t i) {
      if (m.type[i] < 0) return;
      for (std::size_t c : l.child[i]) post(c);
      order.push_back(i);
    };
    post(0);
  }
  for (std::size_t i : order) {
    if (m.type[i] < 0) continue;
    const int r = rule_of[pattern_at(m, l, i)];
    if (r < 0) continue;
    out = MultilinearPoly(m.degree());
    for (const auto& [j, c] : gb.rules[static_cast<std::size_t>(r)].rhs) out.add(replace_node(m, l, i, j), c);
    return true;
  }
  return false;
}

MultilinearPoly normal_form(const TreeMonomial& m, const ComtransGroebner& gb) {
  check_ops(m);
  MultilinearPoly out(m.degree());
  for (auto& [t, c] : nf_subtree(m, layout(m.type), 0, gb, rule_table(gb))) out.add(t, c);
  return out;
}

MultilinearPoly normal_form(const MultilinearPoly& f, const ComtransGroebner& gb) {
  MultilinearPoly out(f.degree());
  for (const auto& [m, c] : f.terms()) {
    MultilinearPoly g = normal_form(m, gb);
    g *= c;
    out += g;
  }
  return out;
}

MultilinearPoly normal_form_by_steps(const MultilinearPoly& f, Strategy s, const ComtransGroebner& gb,
                                     std::size_t* steps) {
  MultilinearPoly cur = f;
  std::size_t n = 0;
  for (;;) {
    MultilinearPoly next(cur.degree());
    bool changed = false;
    for (const auto& [m, c] : cur.terms()) {
      MultilinearPoly r;
      if (!changed && rewrite_step(m, s, gb, r)) {
        r *= c;
        next += r;
        changed = true;
        ++n;
      } else {
        next.add(m, c);
      }
    }
    if (!changed) break;
    cur = std::move(next);
  }
  if (steps) *steps = n;
  return cur;
}

Integer count_normal_forms(std::size_t w, CountMethod method) {
  if (method == CountMethod::Structural) {
    // Triple partitions of {1..3w}: the block of the first element picks 2
    // partners among the remaining 3w-1.
    Integer triples = 1, five = 1;
    for (std::size_t k = 1; k <= w; ++k) {
      const unsigned long r = 3 * k - 1;
      triples *= Integer(r * (r - 1) / 2);
      five *= 5;
    }
    return triples * five;
  }
  if (w > 3) throw ResourceError("enumeration is limited to weight 3");
  const ComtransGroebner gb = comtrans_groebner();
  const MonomialIndex idx(w, {OpId::Commutator, OpId::Translator});
  const auto perms = all_permutations(idx.degree());
  const auto rule_of = rule_table(gb);
  std::vector<char> seen(idx.size(), 0);
  for (const auto& t : idx.types()) {
    const Layout l = layout(t);
    for (const auto& p : perms) {
      TreeMonomial m{t, {}};
      for (std::size_t i = 0; i < idx.degree(); ++i) m.leaves.push_back(static_cast<std::uint8_t>(p(i)));
      for (const auto& [u, c] : nf_subtree(m, l, 0, gb, rule_of))
        if (c != 0) seen[idx.column(u)] = 1;
    }
  }
  return static_cast<unsigned long>(std::count(seen.begin(), seen.end(), 1));
}

Integer conjecture_value(std::size_t w) {
  Integer num, wf, six;
  mpz_fac_ui(num.get_mpz_t(), 3 * w);
  mpz_fac_ui(wf.get_mpz_t(), w);
  mpz_ui_pow_ui(six.get_mpz_t(), 6, w);
  Integer five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, w);
  return num / (wf * six) * five;
}

}  // namespace comtrans
