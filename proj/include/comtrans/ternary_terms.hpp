#pragma once

// Free multilinear ternary terms: association types, tree monomials, their
// expansion into associative words, permutation action and partial
// composition.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "comtrans/exact_linalg.hpp"
#include "comtrans/symmetric_group.hpp"

namespace comtrans {

enum class OpId : std::int8_t { Commutator = 0, Translator = 1, Wac = 2, Qdef2 = 3, Associative = 4 };

// A trilinear operation of an associative triple system, given by how it
// expands: each term lists the order in which the three argument blocks are
// concatenated, so the commutator xyz - yxz is {(0,1,2),+1}, {(1,0,2),-1}.
struct OperationSymbol {
  OpId id;
  std::string name;
  char open, close;
  std::vector<std::pair<std::array<std::uint8_t, 3>, Rational>> expansion;

  // The expansion as an element of Q[S_3] with a word read as the
  // permutation i -> (variable in position i).
  GroupAlgebraElement word_element() const;
};

const OperationSymbol& operation(OpId id);
const OperationSymbol& commutator();
const OperationSymbol& translator();
const OperationSymbol& wac();          // {x,y,z} = xyz + xzy - 2zyx
const OperationSymbol& qdef2();        // xyz + xzy - yxz + yzx - zxy - zyx
const OperationSymbol& associative();  // xyz
// Tag lookup: "com", "tra", "wac", "qdef2", "assoc". Throws UsageError.
const OperationSymbol& operation_by_tag(std::string_view tag);

using OpList = std::vector<OpId>;

// Preorder code of a labeled complete ternary tree: a leaf is -1, an internal
// node is its operation id followed by the codes of its three children.
using AssociationType = std::vector<std::int8_t>;

std::size_t type_weight(const AssociationType& t);
// Single operation: first-child weight descending, then second-child weight
// descending, recursively. Several operations: each skeleton expanded over
// labelings, preorder node k selecting ops[digit k] with node 0 least
// significant.
std::vector<AssociationType> association_types(std::size_t w, const OpList& ops);

struct TreeMonomial {
  AssociationType type;
  std::vector<std::uint8_t> leaves;  // variables (0-based) in leaf order

  std::size_t degree() const { return leaves.size(); }
  friend auto operator<=>(const TreeMonomial&, const TreeMonomial&) = default;
  friend bool operator==(const TreeMonomial&, const TreeMonomial&) = default;
};

// The monomial of `type` with leaves 0, 1, ..., n-1.
TreeMonomial identity_monomial(const AssociationType& type);
TreeMonomial operation_monomial(OpId op);

class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  explicit MultilinearPoly(std::size_t degree) : degree_(degree) {}
  static MultilinearPoly of(const TreeMonomial& m, const Rational& c = 1);

  std::size_t degree() const { return degree_; }
  std::size_t weight() const { return degree_ / 2; }
  const std::map<TreeMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TreeMonomial& m, const Rational& c);
  MultilinearPoly& operator+=(const MultilinearPoly& o);
  MultilinearPoly& operator-=(const MultilinearPoly& o);
  MultilinearPoly& operator*=(const Rational& c);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  std::size_t degree_ = 0;
  std::map<TreeMonomial, Rational> terms_;
};

// Default variable letters: x,y,z / v..z / t..z by degree, else a, b, c, ...
std::string default_letters(std::size_t degree);

// Parses e.g. "[[v,w,x],y,z] - 2[<v,w,x>,y,z] + 1/2 {x,y,z}". Brackets are
// resolved against `ops` (their open/close characters); letters are renamed
// to 0, 1, ... in alphabetical order.
MultilinearPoly parse_poly(std::string_view text, const OpList& ops);
std::string to_string(const TreeMonomial& m, std::string_view letters = {});
std::string to_string(const MultilinearPoly& f, std::string_view letters = {});

// Associative words are permutations: position i holds variable p(i).
using AssocPoly = GroupAlgebraElement;

AssocPoly expand(const TreeMonomial& m);
AssocPoly expand(const MultilinearPoly& f);

// Substitution x_i -> x_{p(i)}.
TreeMonomial apply_permutation(const Permutation& p, const TreeMonomial& m);
MultilinearPoly apply_permutation(const Permutation& p, const MultilinearPoly& f);

// Substitutes g for variable k (1-based) of f: variables below k keep their
// index, g's variables follow, and f's later variables shift up.
MultilinearPoly partial_composition(const MultilinearPoly& f, std::size_t k, const MultilinearPoly& g);

// For each J: J o_k w for w in ops, k = 1..deg J; then w o_k J for w in ops,
// k = 1..3.
std::vector<MultilinearPoly> consequence_set(const std::vector<MultilinearPoly>& identities,
                                             std::size_t target_w, const OpList& ops);

// Column indexing of the free module at weight w: type-major, leaf
// permutation lexicographic within a type.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t w, const OpList& ops);
  std::size_t weight() const { return w_; }
  std::size_t degree() const { return 2 * w_ + 1; }
  const OpList& ops() const { return ops_; }
  const std::vector<AssociationType>& types() const { return types_; }
  std::size_t perms() const { return perms_; }
  std::size_t size() const { return types_.size() * perms_; }
  std::size_t type_index(const AssociationType& t) const;  // throws if absent
  std::size_t column(const TreeMonomial& m) const;
  TreeMonomial monomial(std::size_t column) const;
  // Coefficient vector of f (integer entries required).
  std::vector<Integer> vector(const MultilinearPoly& f) const;
  MultilinearPoly poly(std::span<const Integer> v) const;

 private:
  std::size_t w_;
  OpList ops_;
  std::vector<AssociationType> types_;
  std::map<AssociationType, std::size_t> type_pos_;
  std::size_t perms_;
  std::vector<Permutation> perm_list_;
};

// Rows: the (2w+1)! words in lex order; columns: MonomialIndex order.
// Throws ResourceError beyond desk scale (weight 3 is refused).
IntegerMatrix expansion_matrix(std::size_t w, const OpList& ops);

}  // namespace comtrans
