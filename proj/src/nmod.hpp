#pragma once

// Word-sized arithmetic for polynomials over F_p (p < 2^32). Used by the
// finite-field factorization kernels and by Zassenhaus over Q.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "zc/field.hpp"

namespace zc::detail {

using u64 = std::uint64_t;
using NPoly = std::vector<u64>;  // lowest degree first, trimmed

class Nmod {
 public:
  explicit Nmod(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { u64 r = a + b; return r >= p_ ? r - p_ : r; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 inv(u64 a) const;
  u64 reduce(const Integer& v) const;

 private:
  u64 p_;
};

void trim(NPoly& a);
int degree(const NPoly& a);
NPoly mul(const Nmod& m, const NPoly& a, const NPoly& b);
NPoly add(const Nmod& m, const NPoly& a, const NPoly& b);
NPoly sub(const Nmod& m, const NPoly& a, const NPoly& b);
NPoly scale(const Nmod& m, const NPoly& a, u64 s);
std::pair<NPoly, NPoly> divrem(const Nmod& m, const NPoly& a, const NPoly& b);
NPoly rem(const Nmod& m, const NPoly& a, const NPoly& b);
NPoly monic(const Nmod& m, const NPoly& a);
NPoly gcd(const Nmod& m, NPoly a, NPoly b);
/// Returns (g, s, t) with s*a + t*b = g monic.
void xgcd(const Nmod& m, const NPoly& a, const NPoly& b, NPoly& g, NPoly& s, NPoly& t);
NPoly derivative(const Nmod& m, const NPoly& a);
NPoly powmod(const Nmod& m, const NPoly& base, const Integer& e, const NPoly& mod);

struct NFactor {
  NPoly poly;
  int multiplicity;
};

/// Full factorization of a nonzero polynomial into monic irreducibles.
std::vector<NFactor> factor(const Nmod& m, const NPoly& f, std::mt19937_64& rng);
/// Number of irreducible factors of a squarefree monic polynomial (distinct-degree counts).
int count_factors_squarefree(const Nmod& m, const NPoly& f);
bool is_squarefree(const Nmod& m, const NPoly& f);

}  // namespace zc::detail
