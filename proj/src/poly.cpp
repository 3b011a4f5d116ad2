#include "zc/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nmod.hpp"
#include "zassenhaus.hpp"
#include "zc/error.hpp"

namespace zc {

Poly poly_from_ints(const Field& k, std::initializer_list<long> coeffs) {
  return poly_from_ints(k, std::vector<long>(coeffs));
}

Poly poly_from_ints(const Field& k, const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(k.from_int(v));
  return Poly(k, std::move(c));
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    auto c = compare(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  const Field& k = p.field();
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (k.is_zero(c)) continue;
    bool negative = k.is_rationals() && sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string cs = c.get_den() == 1 ? c.get_num().get_str() : format_rational(c);
    if (i == 0) {
      out += cs;
    } else {
      if (c != 1) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly pow(const Poly& p, int e) {
  Poly r = Poly::constant(p.field(), p.field().one());
  Poly b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly expand(const Field& k, const Field::Elem& lc, const std::vector<Factor>& factors) {
  Poly r = Poly::constant(k, lc);
  for (const auto& f : factors) r *= pow(f.poly, f.multiplicity);
  return r;
}

namespace {

// Yun's algorithm (characteristic zero, monic input).
std::vector<Factor> yun(const Poly& f) {
  std::vector<Factor> out;
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = f / a;
  Poly c = d / a;
  Poly e = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly ai = gcd(b, e);
    b = b / ai;
    c = e / ai;
    e = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai, i});
  }
  return out;
}

// Integer primitive representative of a rational polynomial.
detail::ZPoly to_primitive_integer(const Poly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  detail::ZPoly z;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (sgn(z.back()) < 0) g = -g;
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return z;
}

std::vector<Factor> factor_q(const Poly& monic_p) {
  std::vector<Factor> out;
  for (const auto& part : yun(monic_p)) {
    for (const auto& z : detail::zassenhaus(to_primitive_integer(part.poly))) {
      std::vector<Rational> c(z.begin(), z.end());
      out.push_back({Poly(monic_p.field(), std::move(c)).monic(), part.multiplicity});
    }
  }
  return out;
}

std::vector<Factor> factor_fp(const Poly& p, std::uint64_t seed) {
  const Field& k = p.field();
  detail::Nmod nm(k.characteristic());
  detail::NPoly np;
  for (const auto& c : p.coeffs()) np.push_back(nm.reduce(c.get_num()));
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& f : detail::factor(nm, np, rng)) {
    std::vector<Rational> c;
    for (auto v : f.poly) c.emplace_back(static_cast<unsigned long>(v));
    out.push_back({Poly(k, std::move(c)), f.multiplicity});
  }
  return out;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  const Field& k = a.field();
  if (!k.is_rationals() || a.is_zero() || b.is_zero()) return gcd<Field>(a, b);
  detail::ZPoly x = to_primitive_integer(a), y = to_primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    // x <- prem(x, y), then its primitive part
    while (x.size() >= y.size()) {
      const std::size_t shift = x.size() - y.size();
      const Integer lx = x.back(), ly = y.back();
      for (auto& v : x) v *= ly;
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= lx * y[i];
      while (!x.empty() && sgn(x.back()) == 0) x.pop_back();
    }
    if (x.empty()) break;
    Integer g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    std::swap(x, y);
  }
  if (!x.empty() && y.size() == 1) return Poly::constant(k, k.one());
  std::vector<Rational> c(y.begin(), y.end());
  return Poly(k, std::move(c)).monic();
}

std::vector<Factor> factor(const Poly& p, const FactorOptions& opts) {
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
  if (p.degree() == 0) return {};
  std::vector<Factor> out;
  if (p.field().is_rationals()) {
    if (p.degree() > opts.degree_cap) {
      fail(ErrorCode::DegreeCap, "degree " + std::to_string(p.degree()) + " exceeds the factorization cap " +
                                     std::to_string(opts.degree_cap));
    }
    out = factor_q(p.monic());
  } else {
    out = factor_fp(p, opts.seed);
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    auto c = canonical_compare(a.poly, b.poly);
    return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const Poly& p, const FactorOptions& opts) {
  if (p.degree() < 1) return false;
  auto f = factor(p, opts);
  return f.size() == 1 && f[0].multiplicity == 1;
}

std::vector<Factor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  if (p.field().is_rationals()) return yun(p.monic());
  std::map<int, Poly> by_mult;
  for (const auto& f : factor_fp(p, 0)) {
    auto [it, inserted] = by_mult.try_emplace(f.multiplicity, f.poly);
    if (!inserted) it->second *= f.poly;
  }
  std::vector<Factor> out;
  for (auto& [m, poly] : by_mult) out.push_back({poly, m});
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly r = Poly::constant(p.field(), p.field().one());
  for (const auto& f : squarefree_decomposition(p)) r *= f.poly;
  return r;
}

}  // namespace zc
