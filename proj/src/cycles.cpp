#include "zc/cycles.hpp"

#include "zc/error.hpp"

namespace zc {

ClosedPoint ClosedPoint::infinity(const Field& k) {
  ClosedPoint p;
  p.k_ = k;
  p.inf_ = true;
  p.q_ = Poly(k);
  return p;
}

ClosedPoint ClosedPoint::finite(const Poly& q, const FactorOptions& opts) {
  if (q.is_zero() || q.degree() < 1) fail(ErrorCode::ConstantPolynomial, "a closed point needs a nonconstant polynomial");
  if (q.degree() > 1) {
    auto fs = factor(q, opts);
    if (fs.size() > 1 || fs[0].multiplicity > 1) {
      fail(ErrorCode::ReduciblePolynomial, "reducible polynomial " + to_string(q) + ", factor " + to_string(fs[0].poly));
    }
  }
  ClosedPoint p;
  p.k_ = q.field();
  p.q_ = q.monic();
  return p;
}

ClosedPoint ClosedPoint::rational(const Field& k, const Rational& a) {
  return finite(Poly(k, {k.neg(k.normalize(a)), k.one()}));
}

const Poly& ClosedPoint::poly() const {
  if (inf_) fail(ErrorCode::Precondition, "the point at infinity has no affine polynomial");
  return q_;
}

BinaryForm ClosedPoint::form() const {
  if (inf_) return BinaryForm(k_, 1, {k_.one(), k_.zero()});
  return BinaryForm::from_poly(q_, q_.degree());
}

std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b) {
  if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.inf_) return std::strong_ordering::equal;
  return canonical_compare(a.q_, b.q_);
}

std::string to_string(const ClosedPoint& p) {
  return p.is_infinity() ? "[inf]" : "[" + to_string(p.poly(), "t") + "]";
}

std::vector<std::pair<ClosedPoint, int>> zeros(const BinaryForm& f, const FactorOptions& opts) {
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "zero binary form has no zero divisor");
  std::vector<std::pair<ClosedPoint, int>> out;
  Poly p = f.dehomogenize();
  if (p.degree() > 0) {
    for (const auto& x : factor(p, opts)) out.emplace_back(ClosedPoint::finite(x.poly, {1 << 20, opts.seed}), x.multiplicity);
  }
  if (int m = f.multiplicity_at_infinity(); m > 0) out.emplace_back(ClosedPoint::infinity(f.field()), m);
  return out;
}

ZeroCycle ZeroCycle::point(const ClosedPoint& p, const Rational& coeff) {
  ZeroCycle z(p.field());
  z.add(p, coeff);
  return z;
}

Rational ZeroCycle::coeff(const ClosedPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZeroCycle::add(const ClosedPoint& p, const Rational& c) {
  require_same_field(k_, p.field(), "zero cycle");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

ZeroCycle ZeroCycle::scaled(const Rational& s) const {
  ZeroCycle out(k_);
  if (sgn(s) == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * s);
  return out;
}

ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b) { return combine(a, b, Rational(1), Rational(1)); }
ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b) { return combine(a, b, Rational(1), Rational(-1)); }

Rational degree(const ZeroCycle& c) {
  Rational d(0);
  for (const auto& [p, m] : c.terms()) d += m * p.degree();
  return d;
}

ZeroCycle combine(const ZeroCycle& a, const ZeroCycle& b, const Rational& s, const Rational& t) {
  require_same_field(a.field(), b.field(), "combine");
  ZeroCycle out(a.field());
  for (const auto& [p, c] : a.terms()) out.add(p, s * c);
  for (const auto& [p, c] : b.terms()) out.add(p, t * c);
  return out;
}

bool is_degree_trivial(const ZeroCycle& c) { return sgn(degree(c)) == 0; }

std::string to_string(const ZeroCycle& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [p, m] : c.terms()) {
    Rational v = m;
    if (out.empty()) {
      if (sgn(v) < 0) out += "-";
    } else {
      out += sgn(v) < 0 ? " - " : " + ";
    }
    if (sgn(v) < 0) v = -v;
    if (v != 1) out += format_rational(v);
    out += to_string(p);
  }
  return out;
}

MoebiusMap MoebiusMap::create(const Field& k, Rational a, Rational b, Rational c, Rational d) {
  MoebiusMap m;
  m.k_ = k;
  m.m_[0] = k.normalize(a);
  m.m_[1] = k.normalize(b);
  m.m_[2] = k.normalize(c);
  m.m_[3] = k.normalize(d);
  if (k.is_zero(k.sub(k.mul(m.m_[0], m.m_[3]), k.mul(m.m_[1], m.m_[2])))) {
    fail(ErrorCode::SingularMatrix, "Moebius matrix has zero determinant");
  }
  // Projective normalization: first nonzero entry is 1.
  for (const auto& e : m.m_) {
    if (!k.is_zero(e)) {
      Rational inv = k.inv(e);
      for (auto& x : m.m_) x = k.mul(x, inv);
      break;
    }
  }
  return m;
}

MoebiusMap MoebiusMap::identity(const Field& k) { return create(k, 1, 0, 0, 1); }

MoebiusMap MoebiusMap::inverse() const { return create(k_, m_[3], k_.neg(m_[1]), k_.neg(m_[2]), m_[0]); }

MoebiusMap MoebiusMap::after(const MoebiusMap& inner) const {
  require_same_field(k_, inner.k_, "Moebius composition");
  const Field& k = k_;
  const auto& x = m_;
  const auto& y = inner.m_;
  return create(k, k.add(k.mul(x[0], y[0]), k.mul(x[1], y[2])), k.add(k.mul(x[0], y[1]), k.mul(x[1], y[3])),
                k.add(k.mul(x[2], y[0]), k.mul(x[3], y[2])), k.add(k.mul(x[2], y[1]), k.mul(x[3], y[3])));
}

BinaryForm MoebiusMap::push(const BinaryForm& f) const {
  require_same_field(k_, f.field(), "Moebius transport");
  const Field& k = k_;
  // A zero (X0 : X1) maps to (c X1 + d X0 : a X1 + b X0); the image form is
  // f composed with the inverse: X0 = a Y0 - c Y1, X1 = d Y1 - b Y0 in the
  // affine chart Y0 = 1, Y1 = s.
  Poly x0(k, {m_[0], k.neg(m_[2])});
  Poly x1(k, {k.neg(m_[1]), m_[3]});
  const int n = f.degree();
  Poly acc(k);
  for (int i = 0; i <= n; ++i) {
    const Rational& ci = f.coeffs()[static_cast<std::size_t>(i)];
    if (k.is_zero(ci)) continue;
    acc += (pow(x0, n - i) * pow(x1, i)).scaled(ci);
  }
  return BinaryForm::from_poly(acc, n);
}

ClosedPoint MoebiusMap::apply(const ClosedPoint& p) const {
  auto z = zeros(push(p.form()), {1 << 20, 0});
  ensure(z.size() == 1 && z[0].second == 1, "Moebius image of a closed point is not a closed point");
  return z[0].first;
}

std::pair<Poly, Poly> MoebiusMap::as_fraction() const {
  return {Poly(k_, {m_[1], m_[0]}), Poly(k_, {m_[3], m_[2]})};
}

ZeroCycle transport(const MoebiusMap& m, const ZeroCycle& c) {
  require_same_field(m.field(), c.field(), "transport");
  ZeroCycle out(c.field());
  for (const auto& [p, coeff] : c.terms()) out.add(m.apply(p), coeff);
  return out;
}

}  // namespace zc
