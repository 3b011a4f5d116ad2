#include "zc/ratequiv.hpp"

#include <algorithm>

#include "zc/error.hpp"

namespace zc {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) {
  require_same_field(num.field(), den.field(), "rational function");
  if (num.is_zero() || den.is_zero()) fail(ErrorCode::ZeroInput, "rational function needs nonzero numerator and denominator");
  Poly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  const Field& k = num.field();
  Rational inv = k.inv(den_.lead());
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

RationalFunction RationalFunction::constant(const Field& k, const Rational& c) {
  return RationalFunction(Poly::constant(k, k.normalize(c)), Poly::constant(k, k.one()));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
  require_same_field(outer.field(), inner.field(), "compose");
  const Field& k = outer.field();
  const int d = std::max(outer.num().degree(), outer.den().degree());
  Poly n(k), m(k);
  for (int i = 0; i <= d; ++i) {
    Poly mono = pow(inner.num(), i) * pow(inner.den(), d - i);
    n += mono.scaled(outer.num().coeff(i));
    m += mono.scaled(outer.den().coeff(i));
  }
  return RationalFunction(n, m);
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(den_, num_); }

std::string to_string(const RationalFunction& r) {
  if (r.den().degree() == 0) return to_string(r.num(), "t");
  return "(" + to_string(r.num(), "t") + ")/(" + to_string(r.den(), "t") + ")";
}

ZeroCycle principal_divisor(const RationalFunction& r) {
  const Field& k = r.field();
  ZeroCycle out(k);
  if (r.num().degree() > 0) {
    for (const auto& f : factor(r.num(), {1 << 20, 0})) out.add(ClosedPoint::finite(f.poly, {1 << 20, 0}), f.multiplicity);
  }
  if (r.den().degree() > 0) {
    for (const auto& f : factor(r.den(), {1 << 20, 0})) out.add(ClosedPoint::finite(f.poly, {1 << 20, 0}), -f.multiplicity);
  }
  out.add(ClosedPoint::infinity(k), r.den().degree() - r.num().degree());
  return out;
}

std::vector<WitnessTerm> rational_witness_p1(const ZeroCycle& c) {
  if (!is_degree_trivial(c)) fail(ErrorCode::NonzeroDegree, "cycle has nonzero degree " + format_rational(degree(c)));
  const Field& k = c.field();
  if (c.is_zero()) return {};
  Integer n = 1;
  for (const auto& [p, m] : c.terms()) n = lcm(n, Integer(m.get_den()));
  Poly num = Poly::constant(k, k.one()), den = num;
  for (const auto& [p, m] : c.terms()) {
    if (p.is_infinity()) continue;
    Integer e = Integer(m * n);
    if (sgn(e) > 0) num *= pow(p.poly(), static_cast<int>(e.get_si()));
    else den *= pow(p.poly(), static_cast<int>(-e.get_si()));
  }
  Rational coeff(1);
  coeff /= n;
  return {{coeff, RationalFunction(num, den)}};
}

ZeroCycle expand_witness(const Field& k, const std::vector<WitnessTerm>& w) {
  ZeroCycle out(k);
  for (const auto& t : w) out = combine(out, principal_divisor(t.function), Rational(1), t.coeff);
  return out;
}

bool is_rationally_trivial_p1(const ZeroCycle& c) { return is_degree_trivial(c); }

WeierstrassCurve WeierstrassCurve::create(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6) {
  WeierstrassCurve e;
  e.a_[0] = a1;
  e.a_[1] = a2;
  e.a_[2] = a3;
  e.a_[3] = a4;
  e.a_[4] = a6;
  if (sgn(e.discriminant()) == 0) fail(ErrorCode::SingularCurve, "Weierstrass discriminant vanishes");
  return e;
}

Rational WeierstrassCurve::discriminant() const {
  const Rational &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
  Rational b2 = a1 * a1 + 4 * a2;
  Rational b4 = 2 * a4 + a1 * a3;
  Rational b6 = a3 * a3 + 4 * a6;
  Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool WeierstrassCurve::contains(const Rational& x, const Rational& y) const {
  Rational lhs = y * y + a1() * x * y + a3() * y;
  Rational rhs = x * x * x + a2() * x * x + a4() * x + a6();
  return lhs == rhs;
}

ECPoint ECPoint::affine(const WeierstrassCurve& e, const Rational& x, const Rational& y) {
  if (!e.contains(x, y)) fail(ErrorCode::PointNotOnCurve, "(" + format_rational(x) + ", " + format_rational(y) + ") is not on the curve");
  ECPoint p;
  p.origin_ = false;
  p.x_ = x;
  p.y_ = y;
  return p;
}

std::strong_ordering operator<=>(const ECPoint& a, const ECPoint& b) {
  if (a.origin_ != b.origin_) return a.origin_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.origin_) return std::strong_ordering::equal;
  if (auto c = compare(a.x_, b.x_); c != 0) return c;
  return compare(a.y_, b.y_);
}

std::string to_string(const ECPoint& p) {
  if (p.is_origin()) return "O";
  return "(" + format_rational(p.x()) + ", " + format_rational(p.y()) + ")";
}

namespace {

void require_on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  if (!p.is_origin() && !e.contains(p.x(), p.y())) fail(ErrorCode::PointNotOnCurve, to_string(p) + " is not on the curve");
}

}  // namespace

ECPoint ec_neg(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  if (p.is_origin()) return p;
  return ECPoint::affine(e, p.x(), -p.y() - e.a1() * p.x() - e.a3());
}

ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  if (p.is_origin()) return q;
  if (q.is_origin()) return p;
  const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  Rational lambda, nu;
  if (x1 == x2) {
    if (sgn(Rational(y1 + y2 + e.a1() * x2 + e.a3())) == 0) return ECPoint::origin();
    Rational den = 2 * y1 + e.a1() * x1 + e.a3();
    lambda = (3 * x1 * x1 + 2 * e.a2() * x1 + e.a4() - e.a1() * y1) / den;
    nu = (-x1 * x1 * x1 + e.a4() * x1 + 2 * e.a6() - e.a3() * y1) / den;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  }
  Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - x1 - x2;
  Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return ECPoint::affine(e, x3, y3);
}

ECPoint ec_mul(const WeierstrassCurve& e, const Integer& n, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint base = sgn(n) < 0 ? ec_neg(e, p) : p;
  Integer m = abs(n);
  ECPoint acc;
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  if (sgn(m) == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = ec_add(e, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), i)) acc = ec_add(e, acc, base);
  }
  return acc;
}

std::optional<int> ec_is_torsion(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint acc = p;
  for (int n = 1; n <= 12; ++n) {
    if (acc.is_origin()) return n;
    acc = ec_add(e, acc, p);
  }
  return std::nullopt;
}

void ECCycle::add(const ECPoint& p, const Rational& c) {
  require_on_curve(e_, p);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational degree(const ECCycle& c) {
  Rational d(0);
  for (const auto& [p, m] : c.terms()) d += m;
  return d;
}

std::string to_string(const ECCycle& c) {
  if (c.terms().empty()) return "0";
  std::string out;
  for (const auto& [p, m] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += format_rational(m);
    out += "[" + to_string(p) + "]";
  }
  return out;
}

AJSum aj_sum(const ECCycle& c) {
  if (sgn(degree(c)) != 0) fail(ErrorCode::NonzeroDegree, "Abel-Jacobi sum needs a degree-0 cycle");
  Integer n = 1;
  for (const auto& [p, m] : c.terms()) n = lcm(n, Integer(m.get_den()));
  ECPoint acc;
  for (const auto& [p, m] : c.terms()) acc = ec_add(c.curve(), acc, ec_mul(c.curve(), Integer(m * n), p));
  return {acc, n};
}

std::string_view layer_name(Layer l) {
  switch (l) {
    case Layer::Unit: return "UNIT";
    case Layer::Middle: return "MIDDLE";
    case Layer::Socle: return "SOCLE";
  }
  return "?";
}

Layer classify_layer(const ECCycle& c) {
  if (sgn(degree(c)) != 0) return Layer::Unit;
  return ec_is_torsion(c.curve(), aj_sum(c).point) ? Layer::Socle : Layer::Middle;
}

}  // namespace zc
