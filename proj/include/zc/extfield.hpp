#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zc/poly.hpp"

namespace zc {

/// Simple extension K = k[t]/(m) with m monic irreducible. Elements are
/// polynomials in t of degree < deg m.
class ExtField {
 public:
  using Elem = Poly;

  ExtField() = default;
  /// Throws ReducibleModulus unless m is irreducible (skip the check only for
  /// moduli already known to be irreducible).
  static ExtField create(const Poly& modulus, bool check = true);

  const Field& base() const { return d_->base; }
  const Poly& modulus() const { return d_->modulus; }
  int degree() const { return d_->modulus.degree(); }

  Elem zero() const { return Poly(base()); }
  Elem one() const { return Poly::constant(base(), base().one()); }
  Elem from_int(long v) const { return Poly::constant(base(), base().from_int(v)); }
  Elem embed(const Rational& v) const { return Poly::constant(base(), base().normalize(v)); }
  Elem gen() const { return normalize(Poly::x(base())); }
  Elem normalize(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % d_->modulus; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Integer cardinality() const;  // 0 over Q

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.d_ == b.d_ || (a.d_ && b.d_ && a.d_->modulus == b.d_->modulus);
  }

 private:
  struct Data {
    Field base;
    Poly modulus;
  };
  std::shared_ptr<const Data> d_;
};

using ExtPoly = UPoly<ExtField>;

struct ExtFactor {
  ExtPoly poly;
  int multiplicity = 1;
};

/// Lifts a polynomial over k to K[x].
ExtPoly embed(const ExtField& K, const Poly& p);
std::string to_string(const ExtPoly& p, const std::string& var = "x", const std::string& gen = "t");

/// Minimal polynomial over k of an element of K (Krylov dependence of powers).
Poly min_poly(const ExtField& K, const Poly& e);
/// Norm N_{K/k}(p) = Res_t(m(t), p(x, t)) in k[x].
Poly norm(const ExtPoly& p);

/// Complete factorization of p in K[x], monic factors, canonical order.
/// Over Q uses the shifted-norm reduction; over F_p splits each k-irreducible
/// factor with equal-degree splitting in K[x].
std::vector<ExtFactor> factor_over_extension(const Poly& p, const ExtField& K,
                                             const FactorOptions& opts = {});
std::vector<ExtFactor> factor_over_extension(const Poly& p, const Poly& modulus,
                                             const FactorOptions& opts = {});

}  // namespace zc
