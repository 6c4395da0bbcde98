#pragma once

// Permutations, partitions, standard tableaux and the irreducible
// representations of S_n in Young's natural form (Clifton's construction).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "comtrans/exact_linalg.hpp"

namespace comtrans {

// Images stored 0-based: p(i) = images[i]. Composition (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(std::size_t n);
  static Permutation from_one_based(const std::vector<int>& images);
  // The transposition of 0-based points i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  // Position in the lexicographic list of all permutations of size n.
  std::size_t lex_index() const;
  std::string to_string() const;  // one-line notation, 1-based

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

// All permutations of size n in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(std::size_t n);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int weight() const;
  // Compact notation with exponents: 3,2,1,1 -> "321^2"; 2,2,2,1 -> "2^31".
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Accepts "321^2", "2^31", "1^7", "7" and comma lists "3,2,1,1".
Partition parse_partition(std::string_view text);

// Descending lexicographic order: 7, 61, 52, 51^2, 43, 421, ...
std::vector<Partition> partitions(int n);

// Hook length formula.
std::size_t dim_irrep(const Partition& lambda);

// rows[r] lists the (0-based) entries of row r.
struct StandardTableau {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// Ordered lexicographically by the row-index word (row of 0, row of 1, ...).
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

// A(p)_{ij}: coefficient of the tabloid of T_i in the polytabloid of p T_j.
IntegerMatrix clifton_matrix(const Partition& lambda, const Permutation& p);

// Sparse element of the rational group algebra Q[S_n].
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(std::size_t n) : n_(n) {}
  static GroupAlgebraElement of(const Permutation& p, const Rational& c = 1);

  std::size_t degree() const { return n_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Permutation& p, const Rational& c);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Permutation, Rational> terms_;
};

// Small dense integer matrix used on the hot paths of the representation
// pipeline; entries are checked for int64 overflow.
struct SmallMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;  // row-major n x n
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  IntegerMatrix to_integer() const;
};

class IrreducibleRepresentation {
 public:
  explicit IrreducibleRepresentation(const Partition& lambda);

  const Partition& partition() const { return lambda_; }
  std::size_t dim() const { return d_; }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

  // R(p) = A(id)^{-1} A(p), an integer matrix.
  IntegerMatrix matrix(const Permutation& p) const;
  // Linear extension; exact.
  ExactMatrix image(const GroupAlgebraElement& x) const;
  // Same for integer coefficients, computed as A(id)^{-1} * sum c_p A(p).
  SmallMatrix image_small(const std::map<Permutation, std::int64_t>& x) const;

 private:
  void add_clifton(SmallMatrix& acc, const Permutation& p, std::int64_t c) const;

  Partition lambda_;
  std::size_t n_;
  std::size_t d_;
  std::vector<StandardTableau> tableaux_;
  std::vector<std::vector<int>> row_of_;  // row_of_[i][v]: row of entry v in T_i
  std::vector<std::vector<std::vector<int>>> cols_;  // columns of T_j
  SmallMatrix a_id_inverse_;
};

IntegerMatrix irrep(const Partition& lambda, const Permutation& p);
ExactMatrix algebra_image(const Partition& lambda, const GroupAlgebraElement& x);

// RCFs of the images of a degree-3 element under (3), (2,1), (1,1,1).
std::vector<ExactMatrix> operation_signature(const GroupAlgebraElement& op);

}  // namespace comtrans
