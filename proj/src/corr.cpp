#include "zc/corr.hpp"

#include "zc/bareiss.hpp"
#include "zc/error.hpp"
#include "zc/extfield.hpp"

namespace zc {

namespace {

bool has_x_only_factor(const BiForm& f) {
  if (f.dy() == 0) return true;
  BiPoly g = f.dehomogenize();
  if (g.deg_x() < f.dx()) return true;  // X0 divides F
  return g.content_x().degree() > 0;
}

struct BiPolyOps {
  Field k;
  BiPoly zero() const { return BiPoly(k); }
  BiPoly one() const { return BiPoly::from_x(Poly::constant(k, k.one())); }
  BiPoly mul(const BiPoly& a, const BiPoly& b) const { return a * b; }
  BiPoly sub(const BiPoly& a, const BiPoly& b) const { return a - b; }
  BiPoly neg(const BiPoly& a) const { return -a; }
  bool is_zero(const BiPoly& a) const { return a.is_zero(); }
  BiPoly exact_div(const BiPoly& a, const BiPoly& b) const {
    auto q = zc::exact_div(a, b);
    ensure(q.has_value(), "inexact division in fraction-free elimination");
    return *q;
  }
};

// Res over the shared Y pair of F(X; Y) and G(Y; Z), as a form in (X; Z) of
// bidegree (dx(F) dx(G), dy(F) dy(G)).
BiForm resultant_middle(const BiForm& F, const BiForm& G) {
  const Field& k = F.field();
  std::vector<BiPoly> a, b;
  for (int j = 0; j <= F.dy(); ++j) {
    std::vector<Rational> c;
    for (int i = 0; i <= F.dx(); ++i) c.push_back(F.entry(i, j));
    a.push_back(BiPoly::from_x(Poly(k, std::move(c))));
  }
  for (int i = 0; i <= G.dx(); ++i) {
    std::vector<Rational> c;
    for (int j = 0; j <= G.dy(); ++j) c.push_back(G.entry(i, j));
    b.push_back(BiPoly::from_y(Poly(k, std::move(c))));
  }
  BiPoly r = bareiss_det(sylvester(a, b, BiPoly(k)), BiPolyOps{k});
  ensure(!r.is_zero(), "vanishing resultant for finite correspondences");
  return BiForm::from_bipoly(r, F.dx() * G.dx(), F.dy() * G.dy());
}

}  // namespace

PrimeCorrespondence validate_prime(const BiForm& f, const FactorOptions&) {
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "correspondence form is zero");
  if (has_x_only_factor(f)) fail(ErrorCode::XOnlyFactor, "form has a factor in X alone: " + to_string(f));
  auto fs = factor(f);
  if (fs.size() != 1 || fs[0].multiplicity != 1) {
    fail(ErrorCode::Reducible, "form is reducible, factor " + to_string(fs[0].form));
  }
  return PrimeCorrespondence(f.normalized());
}

PrimeCorrespondence graph(const Poly& num, const Poly& den) {
  require_same_field(num.field(), den.field(), "graph");
  const Field& k = num.field();
  if (den.is_zero()) fail(ErrorCode::CommonFactor, "zero denominator");
  if (num.is_constant() && den.is_constant()) fail(ErrorCode::BothConstant, "constant map has no finite graph");
  if (gcd(num, den).degree() > 0) fail(ErrorCode::CommonFactor, "numerator and denominator share a factor");
  const int d = std::max(num.degree(), den.degree());
  std::vector<Rational> m(static_cast<std::size_t>(2 * (d + 1)), Rational(0));
  for (int i = 0; i <= d; ++i) {
    m[static_cast<std::size_t>(2 * i)] = k.neg(num.coeff(i));
    m[static_cast<std::size_t>(2 * i + 1)] = den.coeff(i);
  }
  return PrimeCorrespondence(BiForm(k, d, 1, std::move(m)).normalized());
}

PrimeCorrespondence constant_correspondence(const ClosedPoint& q) {
  BinaryForm b = q.form();
  return validate_prime(BiForm(q.field(), 0, b.degree(), b.coeffs()));
}

Correspondence::Correspondence(const PrimeCorrespondence& p, const Rational& c) : k_(p.field()) { add(p, c); }

void Correspondence::add(const PrimeCorrespondence& p, const Rational& c) {
  require_same_field(k_, p.field(), "correspondence");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Correspondence Correspondence::scaled(const Rational& s) const {
  Correspondence out(k_);
  for (const auto& [p, c] : terms_) out.add(p, c * s);
  return out;
}

Correspondence operator+(const Correspondence& a, const Correspondence& b) {
  require_same_field(a.k_, b.k_, "correspondence sum");
  Correspondence out = a;
  for (const auto& [p, c] : b.terms_) out.add(p, c);
  return out;
}

Correspondence operator-(const Correspondence& a, const Correspondence& b) { return a + b.scaled(Rational(-1)); }

std::string to_string(const Correspondence& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [p, m] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += format_rational(m) + "*";
    out += "[" + to_string(p.form()) + "]";
  }
  return out;
}

Correspondence transpose(const Correspondence& c) {
  Correspondence out(c.field());
  for (const auto& [p, m] : c.terms()) {
    BiForm t = p.form().transpose();
    // An irreducible form with both degrees positive has no one-sided factor.
    if (t.dy() == 0) fail(ErrorCode::XOnlyFactor, "transpose of a constant correspondence is not finite");
    out.add(PrimeCorrespondence(t.normalized()), m);
  }
  return out;
}

ZeroCycle act(const PrimeCorrespondence& f, const ClosedPoint& p, const FactorOptions& opts) {
  require_same_field(f.field(), p.field(), "act");
  const Field& k = p.field();
  const BiForm& F = f.form();
  ZeroCycle out(k);
  if (p.is_infinity() || p.degree() == 1) {
    BinaryForm fiber = p.is_infinity() ? F.fiber_at(k.zero(), k.one()) : F.fiber_at(k.one(), k.neg(p.poly().coeff(0)));
    ensure(!fiber.is_zero(), "fiber of a finite correspondence vanishes identically");
    for (const auto& [pt, m] : zeros(fiber, opts)) out.add(pt, Rational(m));
    return out;
  }
  // The fiber over p is F(alpha; Y) over kappa(p) = k(alpha); its pushforward
  // is the zero divisor of the norm, with the degree drop at infinity.
  const int n = p.degree();
  ExtField K = ExtField::create(p.poly(), false);
  std::vector<Poly> ycoeffs;
  for (int j = 0; j <= F.dy(); ++j) {
    std::vector<Rational> c;
    for (int i = 0; i <= F.dx(); ++i) c.push_back(F.entry(i, j));
    ycoeffs.push_back(K.normalize(Poly(k, std::move(c))));
  }
  ExtPoly fiber(K, std::move(ycoeffs));
  ensure(!fiber.is_zero(), "fiber of a finite correspondence vanishes identically");
  Poly nrm = norm(fiber);
  if (nrm.degree() > 0) {
    for (const auto& x : factor(nrm, {1 << 20, opts.seed})) {
      out.add(ClosedPoint::finite(x.poly, {1 << 20, opts.seed}), x.multiplicity);
    }
  }
  if (int drop = n * (F.dy() - fiber.degree()); drop > 0) out.add(ClosedPoint::infinity(k), drop);
  return out;
}

ZeroCycle act(const Correspondence& c, const ZeroCycle& z, const FactorOptions& opts) {
  require_same_field(c.field(), z.field(), "act");
  ZeroCycle out(z.field());
  for (const auto& [f, a] : c.terms()) {
    for (const auto& [p, b] : z.terms()) out = combine(out, act(f, p, opts), Rational(1), a * b);
  }
  return out;
}

ComposeReport compose_report(const Correspondence& b, const Correspondence& a, const FactorOptions&) {
  require_same_field(a.field(), b.field(), "compose");
  ComposeReport rep{Correspondence(a.field()), {}};
  for (const auto& [g, cb] : b.terms()) {
    for (const auto& [f, ca] : a.terms()) {
      BiForm r = resultant_middle(f.form(), g.form());
      for (const auto& x : factor(r)) {
        if (x.form.dy() == 0) {
          rep.stripped.push_back(x.form);
          continue;
        }
        rep.value.add(PrimeCorrespondence(x.form), ca * cb * x.multiplicity);
      }
    }
  }
  return rep;
}

Correspondence compose(const Correspondence& b, const Correspondence& a, const FactorOptions& opts) {
  auto rep = compose_report(b, a, opts);
  if (!rep.stripped.empty()) {
    fail(ErrorCode::DegenerateFactor, "composition produced a factor in X alone: " + to_string(rep.stripped[0]));
  }
  return rep.value;
}

BiForm push(const MoebiusMap& mx, const MoebiusMap& my, const BiForm& f) {
  const Field& k = f.field();
  require_same_field(k, mx.field(), "push");
  require_same_field(k, my.field(), "push");
  // Inverse substitution as in MoebiusMap::push, in both factors.
  auto lin_x = [&](const MoebiusMap& m) {
    return std::pair{BiPoly::from_x(Poly(k, {m.a(), k.neg(m.c())})), BiPoly::from_x(Poly(k, {k.neg(m.b()), m.d()}))};
  };
  auto lin_y = [&](const MoebiusMap& m) {
    return std::pair{BiPoly::from_y(Poly(k, {m.a(), k.neg(m.c())})), BiPoly::from_y(Poly(k, {k.neg(m.b()), m.d()}))};
  };
  auto [x0, x1] = lin_x(mx);
  auto [y0, y1] = lin_y(my);
  auto power = [&](const BiPoly& v, int e) {
    BiPoly r = BiPoly::from_x(Poly::constant(k, k.one()));
    for (int i = 0; i < e; ++i) r *= v;
    return r;
  };
  BiPoly acc(k);
  for (int i = 0; i <= f.dx(); ++i) {
    BiPoly xi = power(x0, f.dx() - i) * power(x1, i);
    for (int j = 0; j <= f.dy(); ++j) {
      if (k.is_zero(f.entry(i, j))) continue;
      acc += (xi * power(y0, f.dy() - j) * power(y1, j)).scaled(f.entry(i, j));
    }
  }
  return BiForm::from_bipoly(acc, f.dx(), f.dy());
}

Correspondence conjugate(const MoebiusMap& mx, const MoebiusMap& my, const Correspondence& c) {
  Correspondence out(c.field());
  for (const auto& [p, m] : c.terms()) out.add(PrimeCorrespondence(push(mx, my, p.form()).normalized()), m);
  return out;
}

}  // namespace zc
