#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zc/bipoly.hpp"
#include "zc/poly.hpp"

namespace zc {

/// Binary form of formal degree d in (X0, X1); coeffs[i] multiplies X0^(d-i) X1^i.
/// The affine coordinate is t = X1/X0, and the point at infinity is X0 = 0.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(Field k, int degree, std::vector<Rational> coeffs);
  /// Homogenizes p to formal degree d >= deg p.
  static BinaryForm from_poly(const Poly& p, int degree);

  const Field& field() const { return k_; }
  int degree() const { return d_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  Poly dehomogenize() const;
  /// Order of vanishing at infinity: d minus the affine degree.
  int multiplicity_at_infinity() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  Field k_;
  int d_ = 0;
  std::vector<Rational> c_;
};

/// Bihomogeneous form F(X0, X1; Y0, Y1) of bidegree (d, e). Entry (i, j)
/// multiplies X0^(d-i) X1^i Y0^(e-j) Y1^j; the affine chart is
/// f(x, y) = sum entry(i, j) x^i y^j.
class BiForm {
 public:
  BiForm() = default;
  BiForm(Field k, int d, int e, std::vector<Rational> entries);
  static BiForm from_bipoly(const BiPoly& f, int d, int e);

  const Field& field() const { return k_; }
  int dx() const { return d_; }
  int dy() const { return e_; }
  const Rational& entry(int i, int j) const { return m_[static_cast<std::size_t>(i * (e_ + 1) + j)]; }
  const std::vector<Rational>& entries() const { return m_; }
  bool is_zero() const;

  BiPoly dehomogenize() const;
  BiForm transpose() const;
  /// Scaled so that the first nonzero entry in row-major order is 1.
  BiForm normalized() const;
  /// Binary form in Y obtained by fixing X = (x0 : x1).
  BinaryForm fiber_at(const Rational& x0, const Rational& x1) const;

  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend bool operator==(const BiForm&, const BiForm&) = default;
  friend std::strong_ordering operator<=>(const BiForm& a, const BiForm& b);

 private:
  Field k_;
  int d_ = 0, e_ = 0;
  std::vector<Rational> m_;
};

std::string to_string(const BiForm& f);

struct FormFactor {
  BiForm form;  // normalized, irreducible
  int multiplicity = 1;
};

/// Irreducible bihomogeneous factors with multiplicities (scalar dropped);
/// X0 and Y0 appear as the forms of bidegree (1,0) and (0,1).
std::vector<FormFactor> factor(const BiForm& f);

/// Resultant eliminating the X pair: both arguments are read as binary forms
/// in X of formal degree dx with coefficients binary forms in Y. The result
/// has formal degree dx(F)*dy(G) + dx(G)*dy(F).
BinaryForm resultant_binary(const BiForm& F, const BiForm& G);

}  // namespace zc
