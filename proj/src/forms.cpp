#include "zc/forms.hpp"

#include <algorithm>

#include "zc/bareiss.hpp"
#include "zc/error.hpp"

namespace zc {

BinaryForm::BinaryForm(Field k, int degree, std::vector<Rational> coeffs)
    : k_(k), d_(degree), c_(std::move(coeffs)) {
  ensure(static_cast<int>(c_.size()) == d_ + 1, "binary form coefficient count mismatch");
  for (auto& c : c_) c = k_.normalize(c);
}

BinaryForm BinaryForm::from_poly(const Poly& p, int degree) {
  ensure(degree >= p.degree(), "homogenization degree below polynomial degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return BinaryForm(p.field(), degree, std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Poly BinaryForm::dehomogenize() const { return Poly(k_, c_); }

int BinaryForm::multiplicity_at_infinity() const {
  ensure(!is_zero(), "multiplicity at infinity of the zero form");
  return d_ - dehomogenize().degree();
}

BiForm::BiForm(Field k, int d, int e, std::vector<Rational> entries)
    : k_(k), d_(d), e_(e), m_(std::move(entries)) {
  ensure(d >= 0 && e >= 0, "negative bidegree");
  ensure(static_cast<int>(m_.size()) == (d + 1) * (e + 1), "bihomogeneous form entry count mismatch");
  for (auto& c : m_) c = k_.normalize(c);
}

BiForm BiForm::from_bipoly(const BiPoly& f, int d, int e) {
  ensure(f.is_zero() || (f.deg_x() <= d && f.deg_y() <= e), "bidegree below polynomial degrees");
  std::vector<Rational> m(static_cast<std::size_t>((d + 1) * (e + 1)), Rational(0));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= e; ++j) m[static_cast<std::size_t>(i * (e + 1) + j)] = f.coeff(i, j);
  }
  return BiForm(f.field(), d, e, std::move(m));
}

bool BiForm::is_zero() const {
  for (const auto& c : m_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

BiPoly BiForm::dehomogenize() const {
  std::vector<Poly> ycoeffs;
  for (int j = 0; j <= e_; ++j) {
    std::vector<Rational> c;
    for (int i = 0; i <= d_; ++i) c.push_back(entry(i, j));
    ycoeffs.emplace_back(k_, std::move(c));
  }
  return BiPoly(k_, std::move(ycoeffs));
}

BiForm BiForm::transpose() const {
  std::vector<Rational> m;
  for (int j = 0; j <= e_; ++j) {
    for (int i = 0; i <= d_; ++i) m.push_back(entry(i, j));
  }
  return BiForm(k_, e_, d_, std::move(m));
}

BiForm BiForm::normalized() const {
  for (const auto& c : m_) {
    if (sgn(c) != 0) {
      Rational inv = k_.inv(c);
      std::vector<Rational> m;
      for (const auto& v : m_) m.push_back(k_.mul(v, inv));
      return BiForm(k_, d_, e_, std::move(m));
    }
  }
  fail(ErrorCode::ZeroForm, "cannot normalize the zero form");
}

BinaryForm BiForm::fiber_at(const Rational& x0, const Rational& x1) const {
  std::vector<Rational> c(static_cast<std::size_t>(e_) + 1, Rational(0));
  for (int i = 0; i <= d_; ++i) {
    Rational mono = k_.one();
    for (int a = 0; a < d_ - i; ++a) mono = k_.mul(mono, x0);
    for (int a = 0; a < i; ++a) mono = k_.mul(mono, x1);
    if (k_.is_zero(mono)) continue;
    for (int j = 0; j <= e_; ++j) {
      c[static_cast<std::size_t>(j)] = k_.add(c[static_cast<std::size_t>(j)], k_.mul(mono, entry(i, j)));
    }
  }
  return BinaryForm(k_, e_, std::move(c));
}

BiForm operator*(const BiForm& a, const BiForm& b) {
  return BiForm::from_bipoly(a.dehomogenize() * b.dehomogenize(), a.d_ + b.d_, a.e_ + b.e_);
}

std::strong_ordering operator<=>(const BiForm& a, const BiForm& b) {
  if (a.d_ != b.d_) return a.d_ <=> b.d_;
  if (a.e_ != b.e_) return a.e_ <=> b.e_;
  for (std::size_t i = 0; i < a.m_.size(); ++i) {
    auto c = compare(a.m_[i], b.m_[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const BiForm& f) {
  std::string out;
  const Field& k = f.field();
  auto mono = [](const char* v0, const char* v1, int deg, int i) {
    std::string s;
    auto power = [](const char* v, int p) {
      if (p == 0) return std::string();
      return std::string(v) + (p > 1 ? "^" + std::to_string(p) : "");
    };
    std::string a = power(v0, deg - i), b = power(v1, i);
    if (!a.empty()) s += a;
    if (!b.empty()) s += (s.empty() ? "" : "*") + b;
    return s;
  };
  for (int i = 0; i <= f.dx(); ++i) {
    for (int j = 0; j <= f.dy(); ++j) {
      Rational c = f.entry(i, j);
      if (k.is_zero(c)) continue;
      bool negative = k.is_rationals() && sgn(c) < 0;
      if (negative) c = -c;
      out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
      std::string m = mono("X0", "X1", f.dx(), i);
      std::string n = mono("Y0", "Y1", f.dy(), j);
      std::string body = m.empty() ? n : (n.empty() ? m : m + "*" + n);
      std::string cs = c.get_den() == 1 ? c.get_num().get_str() : format_rational(c);
      if (body.empty()) out += cs;
      else if (c == 1) out += body;
      else out += cs + "*" + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<FormFactor> factor(const BiForm& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "cannot factor the zero form");
  const Field& k = f.field();
  BiPoly g = f.dehomogenize();
  std::vector<FormFactor> out;
  const int x0_mult = f.dx() - g.deg_x();
  const int y0_mult = f.dy() - g.deg_y();
  for (const auto& h : factor(g)) {
    out.push_back({BiForm::from_bipoly(h.poly, h.poly.deg_x(), h.poly.deg_y()).normalized(), h.multiplicity});
  }
  if (x0_mult > 0) out.push_back({BiForm(k, 1, 0, {Rational(1), Rational(0)}), x0_mult});
  if (y0_mult > 0) out.push_back({BiForm(k, 0, 1, {Rational(1), Rational(0)}), y0_mult});
  std::sort(out.begin(), out.end(), [](const FormFactor& a, const FormFactor& b) { return a.form < b.form; });
  return out;
}

namespace {

struct PolyOps {
  Field k;
  Poly zero() const { return Poly(k); }
  Poly one() const { return Poly::constant(k, k.one()); }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  Poly exact_div(const Poly& a, const Poly& b) const {
    auto [q, r] = divrem(a, b);
    ensure(r.is_zero(), "inexact division in fraction-free elimination");
    return q;
  }
};

}  // namespace

BinaryForm resultant_binary(const BiForm& F, const BiForm& G) {
  require_same_field(F.field(), G.field(), "resultant_binary");
  if (F.is_zero() || G.is_zero()) fail(ErrorCode::ZeroForm, "resultant of the zero form");
  const Field& k = F.field();
  const int D = F.dx() * G.dy() + G.dx() * F.dy();
  auto x_coeffs = [&](const BiForm& H) {
    std::vector<Poly> c;
    for (int i = 0; i <= H.dx(); ++i) {
      std::vector<Rational> yc;
      for (int j = 0; j <= H.dy(); ++j) yc.push_back(H.entry(i, j));
      c.emplace_back(k, std::move(yc));
    }
    return c;
  };
  Poly r;
  if (F.dx() == 0 && G.dx() == 0) {
    r = Poly::constant(k, k.one());
  } else {
    // Sylvester convention with X0 leading: differs from the X1-leading
    // determinant by (-1)^(dx(F) dx(G)).
    r = bareiss_det(sylvester(x_coeffs(F), x_coeffs(G), Poly(k)), PolyOps{k});
    if ((F.dx() * G.dx()) % 2 == 1) r = -r;
  }
  if (r.is_zero()) return BinaryForm(k, D, std::vector<Rational>(static_cast<std::size_t>(D) + 1, Rational(0)));
  return BinaryForm::from_poly(r, D);
}

}  // namespace zc
