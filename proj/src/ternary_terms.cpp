#include "comtrans/ternary_terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace comtrans {

namespace {

OperationSymbol make_op(OpId id, std::string name, char open, char close,
                        std::vector<std::pair<std::array<std::uint8_t, 3>, int>> terms) {
  OperationSymbol op{id, std::move(name), open, close, {}};
  for (const auto& [order, c] : terms) op.expansion.emplace_back(order, Rational(c));
  return op;
}

const std::vector<OperationSymbol>& registry() {
  static const std::vector<OperationSymbol> ops = {
      make_op(OpId::Commutator, "com", '[', ']', {{{0, 1, 2}, 1}, {{1, 0, 2}, -1}}),
      make_op(OpId::Translator, "tra", '<', '>', {{{0, 1, 2}, 1}, {{1, 2, 0}, -1}}),
      make_op(OpId::Wac, "wac", '{', '}', {{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{2, 1, 0}, -2}}),
      make_op(OpId::Qdef2, "qdef2", '(', ')',
              {{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, -1}, {{1, 2, 0}, 1}, {{2, 0, 1}, -1}, {{2, 1, 0}, -1}}),
      make_op(OpId::Associative, "assoc", '(', ')', {{{0, 1, 2}, 1}}),
  };
  return ops;
}

}  // namespace

GroupAlgebraElement OperationSymbol::word_element() const {
  GroupAlgebraElement x(3);
  for (const auto& [order, c] : expansion) x.add(Permutation({order[0], order[1], order[2]}), c);
  return x;
}

const OperationSymbol& operation(OpId id) { return registry().at(static_cast<std::size_t>(id)); }
const OperationSymbol& commutator() { return operation(OpId::Commutator); }
const OperationSymbol& translator() { return operation(OpId::Translator); }
const OperationSymbol& wac() { return operation(OpId::Wac); }
const OperationSymbol& qdef2() { return operation(OpId::Qdef2); }
const OperationSymbol& associative() { return operation(OpId::Associative); }

const OperationSymbol& operation_by_tag(std::string_view tag) {
  for (const auto& op : registry())
    if (op.name == tag) return op;
  throw UsageError("unknown operation '" + std::string(tag) + "'");
}

// ---------------------------------------------------------------------------
// Association types

std::size_t type_weight(const AssociationType& t) {
  return static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](std::int8_t c) { return c >= 0; }));
}

namespace {

// Skeletons use 0 for every internal node.
std::vector<AssociationType> skeletons(std::size_t w) {
  if (w == 0) return {{-1}};
  std::vector<AssociationType> out;
  for (std::size_t a = w; a-- > 0;)
    for (std::size_t b = w - 1 - a + 1; b-- > 0;) {
      const std::size_t c = w - 1 - a - b;
      for (const auto& A : skeletons(a))
        for (const auto& B : skeletons(b))
          for (const auto& C : skeletons(c)) {
            AssociationType t{0};
            t.insert(t.end(), A.begin(), A.end());
            t.insert(t.end(), B.begin(), B.end());
            t.insert(t.end(), C.begin(), C.end());
            out.push_back(std::move(t));
          }
    }
  return out;
}

}  // namespace

std::vector<AssociationType> association_types(std::size_t w, const OpList& ops) {
  if (ops.empty()) throw UsageError("association_types: no operations");
  std::size_t labelings = 1;
  for (std::size_t i = 0; i < w; ++i) labelings *= ops.size();
  std::vector<AssociationType> out;
  for (const auto& s : skeletons(w))
    for (std::size_t lab = 0; lab < labelings; ++lab) {
      AssociationType t = s;
      std::size_t digits = lab;
      for (auto& c : t)
        if (c >= 0) {
          c = static_cast<std::int8_t>(ops[digits % ops.size()]);
          digits /= ops.size();
        }
      out.push_back(std::move(t));
    }
  return out;
}

TreeMonomial identity_monomial(const AssociationType& type) {
  TreeMonomial m{type, {}};
  const std::size_t n = 2 * type_weight(type) + 1;
  for (std::size_t i = 0; i < n; ++i) m.leaves.push_back(static_cast<std::uint8_t>(i));
  return m;
}

TreeMonomial operation_monomial(OpId op) { return identity_monomial({static_cast<std::int8_t>(op), -1, -1, -1}); }

// ---------------------------------------------------------------------------
// MultilinearPoly

MultilinearPoly MultilinearPoly::of(const TreeMonomial& m, const Rational& c) {
  MultilinearPoly f(m.degree());
  f.add(m, c);
  return f;
}

void MultilinearPoly::add(const TreeMonomial& m, const Rational& c) {
  if (terms_.empty() && degree_ == 0) degree_ = m.degree();
  if (m.degree() != degree_) throw UsageError("polynomial is not homogeneous");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Text form

std::string default_letters(std::size_t degree) {
  if (degree == 3) return "xyz";
  if (degree == 5) return "vwxyz";
  if (degree == 7) return "tuvwxyz";
  std::string s;
  for (std::size_t i = 0; i < degree; ++i) s += static_cast<char>('a' + i);
  return s;
}

namespace {

struct Parser {
  std::string_view s;
  const OpList& ops;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse polynomial at column " + std::to_string(pos + 1) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  const OperationSymbol* op_for_open(char ch) const {
    for (OpId id : ops)
      if (operation(id).open == ch) return &operation(id);
    return nullptr;
  }
  // Reads a tree, appending to type and letters.
  void tree(AssociationType& type, std::string& letters) {
    const char ch = peek();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      type.push_back(-1);
      letters.push_back(ch);
      ++pos;
      return;
    }
    const OperationSymbol* op = op_for_open(ch);
    if (!op) fail(std::string("unexpected '") + ch + "'");
    ++pos;
    type.push_back(static_cast<std::int8_t>(op->id));
    for (int k = 0; k < 3; ++k) {
      tree(type, letters);
      if (k < 2) {
        if (peek() != ',') fail("expected ','");
        ++pos;
      }
    }
    if (peek() != op->close) fail(std::string("expected '") + op->close + "'");
    ++pos;
  }
  Rational number() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t ds = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (ds == pos) fail("expected denominator");
      Rational q(Integer(num), Integer(std::string(s.substr(ds, pos - ds))));
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return q;
    }
    return Rational(Integer(num));
  }
};

}  // namespace

MultilinearPoly parse_poly(std::string_view text, const OpList& ops) {
  Parser p{text, ops};
  std::vector<std::tuple<Rational, AssociationType, std::string>> raw;
  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    const char ch = p.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    first = false;
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      c = p.number();
      if (p.peek() == '*') ++p.pos;
    }
    AssociationType type;
    std::string letters;
    p.tree(type, letters);
    raw.emplace_back(c * sign, std::move(type), std::move(letters));
  }
  if (raw.empty()) throw UsageError("empty polynomial");
  std::set<char> alphabet(std::get<2>(raw[0]).begin(), std::get<2>(raw[0]).end());
  if (alphabet.size() != std::get<2>(raw[0]).size()) throw UsageError("polynomial is not multilinear");
  MultilinearPoly f(alphabet.size());
  for (auto& [c, type, letters] : raw) {
    std::set<char> here(letters.begin(), letters.end());
    if (here != alphabet || here.size() != letters.size())
      throw UsageError("polynomial is not multilinear in a common set of variables");
    TreeMonomial m{type, {}};
    for (char l : letters)
      m.leaves.push_back(static_cast<std::uint8_t>(std::distance(alphabet.begin(), alphabet.find(l))));
    f.add(m, c);
  }
  return f;
}

namespace {

void print_tree(const TreeMonomial& m, std::size_t& code, std::size_t& leaf, std::string_view letters,
                std::string& out) {
  const std::int8_t c = m.type[code++];
  if (c < 0) {
    out += letters[m.leaves[leaf++]];
    return;
  }
  const auto& op = operation(static_cast<OpId>(c));
  out += op.open;
  for (int k = 0; k < 3; ++k) {
    if (k) out += ',';
    print_tree(m, code, leaf, letters, out);
  }
  out += op.close;
}

}  // namespace

std::string to_string(const TreeMonomial& m, std::string_view letters) {
  const std::string dflt = default_letters(m.degree());
  if (letters.empty()) letters = dflt;
  std::string out;
  std::size_t code = 0, leaf = 0;
  print_tree(m, code, leaf, letters, out);
  return out;
}

std::string to_string(const MultilinearPoly& f, std::string_view letters) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Rational a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += to_string(m, letters);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

using Word = std::vector<std::uint8_t>;
using WordPoly = std::vector<std::pair<Word, Rational>>;

WordPoly expand_rec(const TreeMonomial& m, std::size_t& code, std::size_t& leaf) {
  const std::int8_t c = m.type[code++];
  if (c < 0) return {{Word{m.leaves[leaf++]}, Rational(1)}};
  WordPoly child[3];
  for (auto& ch : child) ch = expand_rec(m, code, leaf);
  WordPoly out;
  for (const auto& [order, coeff] : operation(static_cast<OpId>(c)).expansion)
    for (const auto& [w0, c0] : child[order[0]])
      for (const auto& [w1, c1] : child[order[1]])
        for (const auto& [w2, c2] : child[order[2]]) {
          Word w = w0;
          w.insert(w.end(), w1.begin(), w1.end());
          w.insert(w.end(), w2.begin(), w2.end());
          out.emplace_back(std::move(w), coeff * c0 * c1 * c2);
        }
  return out;
}

}  // namespace

AssocPoly expand(const TreeMonomial& m) {
  std::size_t code = 0, leaf = 0;
  AssocPoly out(m.degree());
  for (auto& [w, c] : expand_rec(m, code, leaf)) out.add(Permutation(std::move(w)), c);
  return out;
}

AssocPoly expand(const MultilinearPoly& f) {
  AssocPoly out(f.degree());
  for (const auto& [m, c] : f.terms()) {
    std::size_t code = 0, leaf = 0;
    for (auto& [w, e] : expand_rec(m, code, leaf)) out.add(Permutation(std::move(w)), c * e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation action and composition

TreeMonomial apply_permutation(const Permutation& p, const TreeMonomial& m) {
  if (p.size() != m.degree()) throw UsageError("apply_permutation: degree mismatch");
  TreeMonomial r = m;
  for (auto& v : r.leaves) v = static_cast<std::uint8_t>(p(v));
  return r;
}

MultilinearPoly apply_permutation(const Permutation& p, const MultilinearPoly& f) {
  MultilinearPoly r(f.degree());
  for (const auto& [m, c] : f.terms()) r.add(apply_permutation(p, m), c);
  return r;
}

MultilinearPoly partial_composition(const MultilinearPoly& f, std::size_t k, const MultilinearPoly& g) {
  if (k < 1 || k > f.degree()) throw UsageError("partial_composition: slot out of range");
  const std::size_t slot = k - 1, dg = g.degree();
  MultilinearPoly r(f.degree() + dg - 1);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      TreeMonomial t;
      std::size_t leaf = 0;
      for (std::int8_t c : mf.type) {
        if (c >= 0) {
          t.type.push_back(c);
          continue;
        }
        const std::size_t v = mf.leaves[leaf++];
        if (v == slot) {
          t.type.insert(t.type.end(), mg.type.begin(), mg.type.end());
          for (auto u : mg.leaves) t.leaves.push_back(static_cast<std::uint8_t>(u + slot));
        } else {
          t.type.push_back(-1);
          t.leaves.push_back(static_cast<std::uint8_t>(v < slot ? v : v + dg - 1));
        }
      }
      r.add(t, cf * cg);
    }
  return r;
}

std::vector<MultilinearPoly> consequence_set(const std::vector<MultilinearPoly>& identities,
                                             std::size_t target_w, const OpList& ops) {
  std::vector<MultilinearPoly> out;
  for (const auto& J : identities) {
    if (J.weight() + 1 != target_w) throw UsageError("consequence_set: identity has the wrong weight");
    for (OpId w : ops) {
      const auto om = MultilinearPoly::of(operation_monomial(w));
      for (std::size_t k = 1; k <= J.degree(); ++k) out.push_back(partial_composition(J, k, om));
    }
    for (OpId w : ops) {
      const auto om = MultilinearPoly::of(operation_monomial(w));
      for (std::size_t k = 1; k <= 3; ++k) out.push_back(partial_composition(om, k, J));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Indexing and the expansion matrix

MonomialIndex::MonomialIndex(std::size_t w, const OpList& ops)
    : w_(w), ops_(ops), types_(association_types(w, ops)) {
  for (std::size_t i = 0; i < types_.size(); ++i) type_pos_[types_[i]] = i;
  perm_list_ = all_permutations(2 * w + 1);
  perms_ = perm_list_.size();
}

std::size_t MonomialIndex::type_index(const AssociationType& t) const {
  auto it = type_pos_.find(t);
  if (it == type_pos_.end()) throw UsageError("association type not in this index");
  return it->second;
}

std::size_t MonomialIndex::column(const TreeMonomial& m) const {
  return type_index(m.type) * perms_ + Permutation(m.leaves).lex_index();
}

TreeMonomial MonomialIndex::monomial(std::size_t column) const {
  return TreeMonomial{types_.at(column / perms_), perm_list_[column % perms_].images()};
}

std::vector<Integer> MonomialIndex::vector(const MultilinearPoly& f) const {
  std::vector<Integer> v(size());
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw UsageError("MonomialIndex::vector: non-integral coefficient");
    v[column(m)] += c.get_num();
  }
  return v;
}

MultilinearPoly MonomialIndex::poly(std::span<const Integer> v) const {
  MultilinearPoly f(degree());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add(monomial(i), Rational(v[i]));
  return f;
}

IntegerMatrix expansion_matrix(std::size_t w, const OpList& ops) {
  if (w < 1) throw UsageError("expansion_matrix: weight must be at least 1");
  if (w > 2) throw ResourceError("expansion_matrix: weight " + std::to_string(w) + " is beyond desk scale");
  const MonomialIndex idx(w, ops);
  IntegerMatrix m(idx.perms(), idx.size());
  for (std::size_t col = 0; col < idx.size(); ++col) {
    const AssocPoly e = expand(idx.monomial(col));
    for (const auto& [word, c] : e.terms()) m(word.lex_index(), col) += c.get_num();
  }
  return m;
}

}  // namespace comtrans
