#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zc/cycles.hpp"

namespace zc {

/// num/den in lowest terms with den monic and num nonzero.
class RationalFunction {
 public:
  RationalFunction() = default;
  /// Reduces to lowest terms; throws ZeroInput for a zero numerator or denominator.
  RationalFunction(const Poly& num, const Poly& den);
  static RationalFunction constant(const Field& k, const Rational& c);

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Poly num_, den_;
};

std::string to_string(const RationalFunction& r);

/// outer o inner as maps of P^1.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner);

/// Zeros minus poles on P^1, with the term at infinity of multiplicity
/// deg(den) - deg(num).
ZeroCycle principal_divisor(const RationalFunction& r);

struct WitnessTerm {
  Rational coeff;
  RationalFunction function;
};

/// Sum coeff_i div(r_i) = c; a single term on P^1. Throws NonzeroDegree.
std::vector<WitnessTerm> rational_witness_p1(const ZeroCycle& c);
ZeroCycle expand_witness(const Field& k, const std::vector<WitnessTerm>& w);
/// On P^1 rational triviality is the degree-0 test.
bool is_rationally_trivial_p1(const ZeroCycle& c);

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
class WeierstrassCurve {
 public:
  WeierstrassCurve() = default;
  /// Throws SingularCurve when the discriminant vanishes.
  static WeierstrassCurve create(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  Rational discriminant() const;
  bool contains(const Rational& x, const Rational& y) const;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  Rational a_[5];
};

class ECPoint {
 public:
  ECPoint() = default;  // the origin
  static ECPoint origin() { return ECPoint(); }
  /// Throws PointNotOnCurve.
  static ECPoint affine(const WeierstrassCurve& e, const Rational& x, const Rational& y);

  bool is_origin() const { return origin_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const ECPoint&, const ECPoint&) = default;
  /// Origin first, then by (x, y).
  friend std::strong_ordering operator<=>(const ECPoint& a, const ECPoint& b);

 private:
  bool origin_ = true;
  Rational x_, y_;
};

std::string to_string(const ECPoint& p);

ECPoint ec_neg(const WeierstrassCurve& e, const ECPoint& p);
ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const WeierstrassCurve& e, const Integer& n, const ECPoint& p);
/// Minimal n in 1..12 with nP = O, if any. Over Q this decides torsion by the
/// uniform bound on torsion orders.
std::optional<int> ec_is_torsion(const WeierstrassCurve& e, const ECPoint& p);

/// Q-linear combination of rational points of E.
class ECCycle {
 public:
  using Terms = std::map<ECPoint, Rational>;
  ECCycle() = default;
  explicit ECCycle(const WeierstrassCurve& e) : e_(e) {}
  const WeierstrassCurve& curve() const { return e_; }
  const Terms& terms() const { return terms_; }
  /// Validates that p lies on the curve.
  void add(const ECPoint& p, const Rational& c);
  friend bool operator==(const ECCycle&, const ECCycle&) = default;

 private:
  WeierstrassCurve e_;
  Terms terms_;
};

Rational degree(const ECCycle& c);
std::string to_string(const ECCycle& c);

struct AJSum {
  ECPoint point;
  Integer denominator;
};

/// Clears coefficient denominators by N and sums N m_i P_i. Throws NonzeroDegree.
AJSum aj_sum(const ECCycle& c);

enum class Layer { Unit, Middle, Socle };
std::string_view layer_name(Layer l);
Layer classify_layer(const ECCycle& c);

}  // namespace zc
