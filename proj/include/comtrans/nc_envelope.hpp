#pragma once

// Noncommutative Groebner bases in Q<a,b,c,d> and the finite-dimensional
// analysis of the enveloping algebras of the 2x2 matrix triple systems.
// Letters: a = e11, b = e12, c = e21, d = e22.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comtrans/exact_linalg.hpp"

namespace comtrans {

using NCWord = std::string;

// Degree first, then letterwise a < b < c < d.
struct DegLex {
  bool operator()(const NCWord& u, const NCWord& v) const {
    return u.size() != v.size() ? u.size() < v.size() : u < v;
  }
};

class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly word(const NCWord& w, const Rational& c = 1);

  const std::map<NCWord, Rational, DegLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;  // 0 for the zero polynomial
  const NCWord& lead() const;  // throws on zero
  const Rational& lead_coefficient() const;
  Rational coefficient(const NCWord& w) const;

  void add(const NCWord& w, const Rational& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  NCPoly monic() const;
  // u * this * v
  NCPoly sandwich(const NCWord& u, const NCWord& v) const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<NCWord, Rational, DegLex> terms_;
};

// Greatest term first, e.g. "a^3 - a", "bc - a^2", "1/2 a + 1/2 d".
std::string to_string(const NCPoly& p);
// Terms "[+-][coeff][*]word"; a word is a letter string, "1" is the empty
// word, and a letter may carry an exponent "^k". Throws UsageError.
NCPoly parse_nc(std::string_view text);

enum class EnvelopeKind { C, T, CT };
EnvelopeKind parse_envelope_kind(std::string_view s);
std::string to_string(EnvelopeKind k);

// XYZ - YXZ - eta(XYZ - YXZ) (C) or XYZ - YZX - eta(XYZ - YZX) (T) over all
// triples of matrix units; CT is C followed by T. Zero polynomials dropped.
std::vector<NCPoly> triple_relations(EnvelopeKind kind);

NCPoly normal_form(const NCPoly& p, const std::vector<NCPoly>& gb);
// Monic, fully interreduced, deduplicated, sorted by leading word.
std::vector<NCPoly> standard_forms(const std::vector<NCPoly>& gens);

struct Composition {
  std::size_t first = 0, second = 0;  // indices into the generator list
  std::size_t overlap = 0;            // length of the shared factor
  NCPoly s;                           // g * v - u * h
  NCPoly normal;                      // reduced by the generators
};

struct CompositionReport {
  std::vector<Composition> all;         // every overlap, self-overlaps included
  std::size_t nonzero = 0;              // overlaps with nonzero normal form
  std::vector<NCPoly> distinct_monic;   // distinct nonzero normal forms, made monic
};

CompositionReport compositions(const std::vector<NCPoly>& gens);

inline constexpr std::size_t kDefaultDegreeCap = 12;

struct CompletionStep {
  std::size_t generators = 0;
  std::size_t new_normal_forms = 0;
};

// Adds normal forms of compositions and interreduces until every composition
// reduces to 0. Throws CapExceeded if a normal form exceeds the degree cap.
std::vector<NCPoly> groebner_completion(const std::vector<NCPoly>& gens, std::size_t degree_cap = kDefaultDegreeCap,
                                        std::vector<CompletionStep>* trace = nullptr);

bool is_groebner_basis(const std::vector<NCPoly>& gb);

struct NormalWords {
  std::vector<NCWord> words;  // deglex order
  bool finite = false;        // some degree <= max_degree had no normal word
  std::vector<std::size_t> per_degree;
};

NormalWords normal_words(const std::vector<NCPoly>& gb, std::size_t max_degree);

struct AlgebraPresentation {
  std::vector<NCPoly> groebner;
  std::vector<NCWord> basis;
  bool finite = false;
  std::optional<std::size_t> degree_cap;  // set when the basis is truncated
};

AlgebraPresentation make_presentation(const std::vector<NCPoly>& gb, std::size_t max_degree);
AlgebraPresentation envelope(EnvelopeKind kind, std::size_t max_degree = kDefaultDegreeCap);

// Coefficient vector of an element over the presentation basis. Throws
// ResourceError if a normal word lies outside the (truncated) basis.
std::vector<Rational> coordinates(const AlgebraPresentation& pres, const NCPoly& p);
NCPoly element(const AlgebraPresentation& pres, std::span<const Rational> v);
NCPoly multiply(const AlgebraPresentation& pres, const NCPoly& x, const NCPoly& y);

// table[i][j] = coordinates of basis[i] * basis[j].
using StructureTable = std::vector<std::vector<std::vector<Rational>>>;
StructureTable structure_constants(const AlgebraPresentation& pres);

std::vector<NCPoly> center(const AlgebraPresentation& pres);
// Monic minimal polynomial of x in the subalgebra generated by `unit` and x,
// coefficients from the constant term up.
std::vector<Rational> minimal_polynomial(const AlgebraPresentation& pres, const NCPoly& x, const NCPoly& unit);

struct WedderburnReport {
  std::size_t dimension = 0;
  std::size_t radical_dim = 0;
  std::vector<NCPoly> center_basis;
  std::vector<NCPoly> idempotents;  // orthogonal central, summing to 1
  std::vector<std::size_t> ideal_dims;
  bool split = true;  // false if a minimal polynomial had an irrational root
};

WedderburnReport wedderburn(const AlgebraPresentation& pres);

// A product from a reference table: left * right = printed.
struct TableEntry {
  std::string label;  // e.g. "b*d" or "a^m*a^l (m=2,l=1,n=0)"
  NCPoly left, right, printed;
};

struct TableCheck {
  std::string label;
  NCPoly computed;  // normal form of left * right
  NCPoly printed;   // normal form of the printed value
  bool match = false;
};

struct DiscrepancyReport {
  std::vector<TableCheck> checks;
  std::vector<std::string> flagged;  // distinct entry names with a mismatch
  std::vector<std::string> missing;  // nonzero products absent from a finite table
};

DiscrepancyReport check_table(const std::vector<TableEntry>& table, const std::vector<NCPoly>& gb);
// The nonzero structure constants of U(A^C) as tabulated in the literature.
std::vector<TableEntry> reference_table_c();
// Closed-form families and sporadic products for U(A^T), families expanded
// for exponents up to max_m.
std::vector<TableEntry> reference_table_t(std::size_t max_m);
DiscrepancyReport verify_AT_formulas(std::size_t max_m);
// Both tables checked against their Groebner bases; for U(A^C) the nonzero
// products absent from the table are listed too.
DiscrepancyReport structure_discrepancies(std::size_t max_m = 12);

// Text format: one polynomial per line, '#' starts a comment.
std::vector<NCPoly> load_presentation(std::string_view text);
std::string save_presentation(const std::vector<NCPoly>& gb);

}  // namespace comtrans
