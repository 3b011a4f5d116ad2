#pragma once

#include <utility>
#include <vector>

namespace zc {

/// Fraction-free determinant over an integral domain. Ops provides zero(),
/// one(), mul, sub, neg, is_zero and exact_div (division known to be exact).
template <class T, class Ops>
T bareiss_det(std::vector<std::vector<T>> m, const Ops& ops) {
  const std::size_t n = m.size();
  if (n == 0) return ops.one();
  bool negate = false;
  T prev = ops.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && ops.is_zero(m[p][k])) ++p;
    if (p == n) return ops.zero();
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
        m[i][j] = ops.exact_div(v, prev);
      }
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? ops.neg(d) : d;
}

/// Sylvester matrix of a (formal degree n) and b (formal degree e), given as
/// coefficient lists lowest degree first; its determinant is Res(a, b).
template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  const std::size_t n = a.size() - 1, e = b.size() - 1, size = n + e;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, zero));
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j <= n; ++j) s[i][i + j] = a[n - j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= e; ++j) s[e + i][i + j] = b[e - j];
  }
  return s;
}

}  // namespace zc
