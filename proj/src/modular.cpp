#include "comtrans/modular.hpp"

#include <algorithm>

namespace comtrans {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const Integer& x, std::uint64_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint64_t p) {
  if (a == 0) throw PrimeUnusable("inverse of zero mod p");
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mod(const Rational& x, std::uint64_t p) {
  const std::uint32_t den = reduce_mod(x.get_den(), p);
  if (den == 0) throw PrimeUnusable("prime " + std::to_string(p) + " divides a denominator");
  return static_cast<std::uint32_t>(std::uint64_t(reduce_mod(x.get_num(), p)) * inverse_mod(den, p) % p);
}

namespace {

// The modulus as a compile-time constant lets the compiler replace the
// division in `%` by multiplications; the runtime fallback covers other primes.
template <std::uint64_t P>
struct FixedMod {
  static constexpr std::uint64_t p = P;
  std::uint64_t operator()(std::uint64_t x) const { return x % P; }
};

struct DynMod {
  std::uint64_t p;
  std::uint64_t operator()(std::uint64_t x) const { return x % p; }
};

// v[c] -= a * row[c] over the listed columns.
template <class Mod>
void eliminate(std::vector<std::uint32_t>& v, std::uint32_t a, const std::vector<std::uint32_t>& row,
               const std::vector<std::size_t>& cols, Mod mod) {
  const std::uint64_t na = mod.p - a;
  std::uint32_t* vp = v.data();
  const std::uint32_t* rp = row.data();
  for (std::size_t c : cols) {
    const std::uint32_t r = rp[c];
    if (r) vp[c] = static_cast<std::uint32_t>(mod(vp[c] + na * r));
  }
}

template <class F>
decltype(auto) with_mod(std::uint64_t p, F&& f) {
  if (p == kPrimeA) return f(FixedMod<kPrimeA>{});
  if (p == kPrimeB) return f(FixedMod<kPrimeB>{});
  return f(DynMod{p});
}

}  // namespace

ModularEchelon::ModularEchelon(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {
  if (p < 2 || p >= (1ULL << 31)) throw UsageError("modulus must be a prime below 2^31");
  free_.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) free_[c] = c;
}

bool ModularEchelon::add_row(std::vector<std::uint32_t> v) {
  if (v.size() != cols_) throw UsageError("ModularEchelon: row width mismatch");
  return with_mod(p_, [&](auto mod) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint32_t a = v[pivot_[i]];
      if (a == 0) continue;
      eliminate(v, a, rows_[i], free_, mod);
      v[pivot_[i]] = 0;
    }
    auto it = std::find_if(free_.begin(), free_.end(), [&](std::size_t c) { return v[c] != 0; });
    if (it == free_.end()) return false;
    const std::size_t pc = *it;
    const std::uint64_t inv = inverse_mod(v[pc], p_);
    for (std::size_t c : free_)
      if (v[c]) v[c] = static_cast<std::uint32_t>(mod(v[c] * inv));
    for (auto& row : rows_) {
      const std::uint32_t a = row[pc];
      if (a == 0) continue;
      eliminate(row, a, v, free_, mod);
    }
    free_.erase(it);
    rows_.push_back(std::move(v));
    pivot_.push_back(pc);
    return true;
  });
}

bool ModularEchelon::add_row(std::span<const Rational> row) {
  std::vector<std::uint32_t> v(row.size());
  for (std::size_t c = 0; c < row.size(); ++c)
    if (sgn(row[c]) != 0) v[c] = reduce_mod(row[c], p_);
  return add_row(std::move(v));
}

bool ModularEchelon::add_row(std::span<const Integer> row) {
  std::vector<std::uint32_t> v(row.size());
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) v[c] = reduce_mod(row[c], p_);
  return add_row(std::move(v));
}

std::vector<std::vector<std::uint32_t>> ModularEchelon::canonical_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i : order) out.push_back(rows_[i]);
  return out;
}

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i))
      if (mpz_divisible_ui_p(x.get_den_mpz_t(), p))
        throw PrimeUnusable("prime " + std::to_string(p) + " divides a denominator");
  ModularEchelon e(m.cols(), p);
  for (std::size_t i = 0; i < m.rows() && e.rank() < m.cols(); ++i) e.add_row(m.row(i));
  return e.rank();
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  ModularEchelon e(m.cols(), p);
  for (std::size_t i = 0; i < m.rows() && e.rank() < m.cols(); ++i) e.add_row(m.row(i));
  return e.rank();
}

std::vector<std::vector<std::uint32_t>> rcf_mod_p(const ExactMatrix& m, std::uint64_t p) {
  ModularEchelon e(m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e.canonical_rows();
}

}  // namespace comtrans
