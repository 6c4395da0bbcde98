#pragma once

// The comtrans operad at weight 1 as a shuffle operad: a linear Groebner basis
// of the relation space, the induced rewrite rules on tree monomials, and
// normal-form counts.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "comtrans/exact_linalg.hpp"
#include "comtrans/ternary_terms.hpp"

namespace comtrans {

// One of the twelve weight-1 basis operations: translators first, then
// commutators, each over the argument orders xyz, xzy, yxz, yzx, zxy, zyx.
// order[i] is the rank (x=0, y=1, z=2) of the argument in slot i.
struct BasisOperation {
  OpId op;
  std::array<std::uint8_t, 3> order;
};

const std::array<BasisOperation, 12>& basis12();
std::size_t basis12_index(OpId op, const std::array<std::uint8_t, 3>& order);
std::string to_string(const BasisOperation& b);

// 18 x 12: the six substitutions (lex order) of each defining relation.
ExactMatrix comtrans_relation_matrix();

struct RewriteRule {
  std::size_t lhs;                                   // basis12 index
  std::vector<std::pair<std::size_t, Rational>> rhs;  // basis12 index, coefficient
};

std::string to_string(const RewriteRule& r);

struct ComtransGroebner {
  ExactMatrix relations;  // 18 x 12
  ExactMatrix rcf;        // nonzero rows of the RCF, 7 x 12
  std::vector<RewriteRule> rules;
  std::vector<std::size_t> irreducible;  // basis12 indices of non-leading columns
};

ComtransGroebner comtrans_groebner();

// Submonomial order: degree first, then the sorted variable sets
// lexicographically (siblings have disjoint variables, so this decides).
// Returns the basis12 index of the internal node at preorder position `node`.
std::size_t node_pattern(const TreeMonomial& m, std::size_t node);

// One rewrite at the first reducible node in preorder (outermost) or postorder
// (innermost); returns false if m is irreducible.
enum class Strategy { LeftmostOutermost, LeftmostInnermost };
bool rewrite_step(const TreeMonomial& m, Strategy s, const ComtransGroebner& gb, MultilinearPoly& out);
bool is_irreducible(const TreeMonomial& m, const ComtransGroebner& gb);

// Rewrites every node independently; the result has irreducible monomials only.
MultilinearPoly normal_form(const TreeMonomial& m, const ComtransGroebner& gb);
MultilinearPoly normal_form(const MultilinearPoly& f, const ComtransGroebner& gb);
// Iterated rewrite_step with the given strategy; `steps` receives the count.
MultilinearPoly normal_form_by_steps(const MultilinearPoly& f, Strategy s, const ComtransGroebner& gb,
                                     std::size_t* steps = nullptr);

enum class CountMethod { Enumerate, Structural };

// Enumerate reduces every multilinear monomial of weight w (w <= 3) and counts
// distinct monomials in the normal forms. Structural multiplies 5^w by the
// number of partitions of a 3w-set into triples.
Integer count_normal_forms(std::size_t w, CountMethod method);
// (3w)! / (w! 6^w) * 5^w.
Integer conjecture_value(std::size_t w);

}  // namespace comtrans
