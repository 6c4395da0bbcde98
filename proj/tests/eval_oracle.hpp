#pragma once

// Evaluates tree polynomials on concrete integer matrices, with each ternary
// operation written out by hand. Independent of the library's expansion code.

#include <random>
#include <vector>

#include "comtrans/ternary_terms.hpp"

namespace oracle {

using comtrans::Integer;
using Mat = std::vector<Integer>;  // k x k, row-major
inline constexpr std::size_t K = 4;

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c(K * K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t l = 0; l < K; ++l)
      for (std::size_t j = 0; j < K; ++j) c[i * K + j] += a[i * K + l] * b[l * K + j];
  return c;
}

inline Mat lin(const std::vector<std::pair<int, Mat>>& terms) {
  Mat c(K * K);
  for (const auto& [s, m] : terms)
    for (std::size_t i = 0; i < K * K; ++i) c[i] += s * m[i];
  return c;
}

inline Mat apply_op(comtrans::OpId op, const Mat& x, const Mat& y, const Mat& z) {
  using comtrans::OpId;
  auto w = [](const Mat& a, const Mat& b, const Mat& c) { return mul(mul(a, b), c); };
  switch (op) {
    case OpId::Commutator: return lin({{1, w(x, y, z)}, {-1, w(y, x, z)}});
    case OpId::Translator: return lin({{1, w(x, y, z)}, {-1, w(y, z, x)}});
    case OpId::Wac: return lin({{1, w(x, y, z)}, {1, w(x, z, y)}, {-2, w(z, y, x)}});
    case OpId::Qdef2:
      return lin({{1, w(x, y, z)}, {1, w(x, z, y)}, {-1, w(y, x, z)}, {1, w(y, z, x)}, {-1, w(z, x, y)},
                  {-1, w(z, y, x)}});
    case OpId::Associative: return w(x, y, z);
  }
  return {};
}

inline Mat eval_tree(const comtrans::TreeMonomial& m, const std::vector<Mat>& vars, std::size_t& pos,
                     std::size_t& leaf) {
  const int code = m.type[pos++];
  if (code < 0) return vars[m.leaves[leaf++]];
  const Mat a = eval_tree(m, vars, pos, leaf);
  const Mat b = eval_tree(m, vars, pos, leaf);
  const Mat c = eval_tree(m, vars, pos, leaf);
  return apply_op(static_cast<comtrans::OpId>(code), a, b, c);
}

// Evaluates with rational coefficients scaled by the common denominator.
inline Mat eval(const comtrans::MultilinearPoly& f, const std::vector<Mat>& vars) {
  Integer den = 1;
  for (const auto& [m, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
  Mat out(K * K);
  for (const auto& [m, c] : f.terms()) {
    std::size_t pos = 0, leaf = 0;
    const Mat v = eval_tree(m, vars, pos, leaf);
    const Integer s = Integer(c * den);
    for (std::size_t i = 0; i < K * K; ++i) out[i] += s * v[i];
  }
  return out;
}

inline Mat eval_words(const comtrans::AssocPoly& f, const std::vector<Mat>& vars) {
  Integer den = 1;
  for (const auto& [p, c] : f.terms()) den = lcm(den, Integer(c.get_den()));
  Mat out(K * K);
  for (const auto& [p, c] : f.terms()) {
    Mat v = vars[p(0)];
    for (std::size_t i = 1; i < p.size(); ++i) v = mul(v, vars[p(i)]);
    const Integer s = Integer(c * den);
    for (std::size_t i = 0; i < K * K; ++i) out[i] += s * v[i];
  }
  return out;
}

inline std::vector<Mat> random_vars(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Mat> v(n, Mat(K * K));
  for (auto& m : v)
    for (auto& x : m) x = d(rng);
  return v;
}

inline bool is_zero(const Mat& m) {
  for (const auto& x : m)
    if (x != 0) return false;
  return true;
}

}  // namespace oracle
