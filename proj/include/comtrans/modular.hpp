#pragma once

// Linear algebra over prime fields Z/p with p < 2^31.

#include <cstdint>
#include <span>
#include <vector>

#include "comtrans/exact_linalg.hpp"

namespace comtrans {

// The two primes used for dual-prime rank agreement.
inline constexpr std::uint64_t kPrimeA = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kPrimeB = 2147483629;

bool is_prime(std::uint64_t n);

// Reduction of exact values. Throws PrimeUnusable when p divides a denominator.
std::uint32_t reduce_mod(const Integer& x, std::uint64_t p);
std::uint32_t reduce_mod(const Rational& x, std::uint64_t p);
std::uint32_t inverse_mod(std::uint32_t a, std::uint64_t p);

// Incremental reduced row echelon form mod p. Every stored row is monic at its
// pivot and zero in every other pivot column, so reducing a new row only
// touches the free columns.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t cols, std::uint64_t p);

  // Reduces `row` in place against the basis; returns true and keeps it iff
  // it was independent.
  bool add_row(std::vector<std::uint32_t> row);
  // Convenience: reduce exact rows first.
  bool add_row(std::span<const Rational> row);
  bool add_row(std::span<const Integer> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }

  // Rows sorted by pivot column: the RREF of everything added so far.
  std::vector<std::vector<std::uint32_t>> canonical_rows() const;

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_;     // pivot column of rows_[i]
  std::vector<std::size_t> free_;      // ascending non-pivot columns
};

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p);
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

// RREF mod p, nonzero rows only.
std::vector<std::vector<std::uint32_t>> rcf_mod_p(const ExactMatrix& m, std::uint64_t p);

}  // namespace comtrans
