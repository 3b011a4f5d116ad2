#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zc/poly.hpp"

namespace zc {

/// Polynomial in two variables over a base field, stored as a polynomial in
/// y whose coefficients are polynomials in x.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field k) : k_(k) {}
  BiPoly(Field k, std::vector<Poly> y_coeffs);

  static BiPoly from_x(const Poly& p);
  static BiPoly from_y(const Poly& p);
  /// c * x^i * y^j
  static BiPoly monomial(const Field& k, const Rational& c, int i, int j);

  const Field& field() const { return k_; }
  bool is_zero() const { return c_.empty(); }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const;
  /// Coefficient of y^j as a polynomial in x.
  Poly coeff_y(int j) const;
  Rational coeff(int i, int j) const { return coeff_y(j).coeff(i); }
  const std::vector<Poly>& y_coeffs() const { return c_; }
  Poly lead_y() const { return c_.back(); }

  Poly eval_x(const Rational& a) const;  // polynomial in y
  Poly eval_y(const Rational& b) const;  // polynomial in x
  BiPoly swap() const;                   // f(y, x)
  BiPoly shift_x(const Rational& a) const;  // f(x + a, y)
  BiPoly derivative_y() const;
  BiPoly scaled(const Rational& s) const;
  /// Monic gcd of the y-coefficients.
  Poly content_x() const;
  /// Divides every y-coefficient by a polynomial in x (exactly).
  BiPoly div_x(const Poly& p) const;
  /// Scales so that the leading coefficient (highest y power, then highest x power) is 1.
  BiPoly normalized() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

 private:
  void trim();
  Field k_;
  std::vector<Poly> c_;
};

/// Quotient a / b if b divides a exactly in k[x, y].
std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);
/// Normalized gcd in k[x, y].
BiPoly gcd(const BiPoly& a, const BiPoly& b);
std::string to_string(const BiPoly& p, const std::string& x = "x", const std::string& y = "y");

struct BiFactor {
  BiPoly poly;  // normalized
  int multiplicity = 1;
};

/// Irreducible factors over k with multiplicities (constant factor dropped),
/// sorted by (deg_y, deg_x, coefficients).
std::vector<BiFactor> factor(const BiPoly& f);

}  // namespace zc
