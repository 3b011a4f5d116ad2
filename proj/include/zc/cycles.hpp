#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zc/forms.hpp"
#include "zc/poly.hpp"

namespace zc {

/// Closed point of P^1 over k: a monic irreducible polynomial in the affine
/// coordinate t = X1/X0, or the point at infinity X0 = 0.
class ClosedPoint {
 public:
  ClosedPoint() = default;
  static ClosedPoint infinity(const Field& k);
  /// Validates and normalizes q; throws ReduciblePolynomial (message names a
  /// factor) or ConstantPolynomial.
  static ClosedPoint finite(const Poly& q, const FactorOptions& opts = {});
  /// The rational point t = a.
  static ClosedPoint rational(const Field& k, const Rational& a);

  const Field& field() const { return k_; }
  bool is_infinity() const { return inf_; }
  /// Monic irreducible polynomial; requires a finite point.
  const Poly& poly() const;
  /// Residue degree [kappa(P) : k].
  int degree() const { return inf_ ? 1 : q_.degree(); }
  /// The defining binary form: X0 for infinity, the homogenized poly otherwise.
  BinaryForm form() const;

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return (a <=> b) == 0; }
  /// Finite points in canonical polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b);

 private:
  Field k_;
  bool inf_ = false;
  Poly q_;
};

std::string to_string(const ClosedPoint& p);

/// Irreducible factors of a binary form as closed points with multiplicities.
std::vector<std::pair<ClosedPoint, int>> zeros(const BinaryForm& f, const FactorOptions& opts = {});

/// Finite Q-linear combination of closed points.
class ZeroCycle {
 public:
  using Terms = std::map<ClosedPoint, Rational>;

  ZeroCycle() = default;
  explicit ZeroCycle(Field k) : k_(k) {}
  static ZeroCycle point(const ClosedPoint& p, const Rational& coeff = Rational(1));

  const Field& field() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const ClosedPoint& p) const;

  /// Adds c*[p]; zero coefficients are purged.
  void add(const ClosedPoint& p, const Rational& c);
  ZeroCycle scaled(const Rational& s) const;

  friend ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b);
  friend ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b);
  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b) { return a.k_ == b.k_ && a.terms_ == b.terms_; }

 private:
  Field k_;
  Terms terms_;
};

Rational degree(const ZeroCycle& c);
ZeroCycle combine(const ZeroCycle& a, const ZeroCycle& b, const Rational& s, const Rational& t);
bool is_degree_trivial(const ZeroCycle& c);
std::string to_string(const ZeroCycle& c);

/// Automorphism t -> (a t + b) / (c t + d) of P^1.
class MoebiusMap {
 public:
  MoebiusMap() = default;
  /// Throws SingularMatrix when ad - bc = 0.
  static MoebiusMap create(const Field& k, Rational a, Rational b, Rational c, Rational d);
  static MoebiusMap identity(const Field& k);

  const Field& field() const { return k_; }
  const Rational& a() const { return m_[0]; }
  const Rational& b() const { return m_[1]; }
  const Rational& c() const { return m_[2]; }
  const Rational& d() const { return m_[3]; }

  MoebiusMap inverse() const;
  /// (this o inner)(t) = this(inner(t)).
  MoebiusMap after(const MoebiusMap& inner) const;

  ClosedPoint apply(const ClosedPoint& p) const;
  /// Binary form whose zeros are the images of the zeros of f.
  BinaryForm push(const BinaryForm& f) const;
  /// The rational function t -> (a t + b)/(c t + d) as (numerator, denominator).
  std::pair<Poly, Poly> as_fraction() const;

  friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

 private:
  Field k_;
  Rational m_[4];
};

ZeroCycle transport(const MoebiusMap& m, const ZeroCycle& c);

}  // namespace zc
