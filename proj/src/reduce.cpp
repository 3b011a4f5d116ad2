#include "zc/reduce.hpp"

#include <random>
#include <tuple>

#include "zc/error.hpp"

namespace zc {

HomForm HomForm::variable_power(const Field& k, int nvars, int var, int exponent) {
  HomForm f(k, nvars);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(var)] = exponent;
  f.add(m, k.one());
  return f;
}

int HomForm::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;
  return d;
}

Rational HomForm::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomForm::add(const Monomial& m, const Rational& c) {
  ensure(static_cast<int>(m.size()) == nvars_, "monomial arity mismatch");
  if (!terms_.empty()) {
    int d = 0;
    for (int e : m) d += e;
    if (d != degree()) fail(ErrorCode::Precondition, "inhomogeneous term added to a form");
  }
  Rational v = k_.normalize(c);
  if (k_.is_zero(v)) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (inserted) return;
  it->second = k_.add(it->second, v);
  if (k_.is_zero(it->second)) terms_.erase(it);
}

HomForm HomForm::restrict_zero(const std::vector<int>& vars) const {
  HomForm out(k_, nvars_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    for (int v : vars) vanishes = vanishes || m[static_cast<std::size_t>(v)] > 0;
    if (!vanishes) out.terms_.emplace(m, c);
  }
  return out;
}

ExtField::Elem HomForm::eval(const ExtField& K, const std::vector<ExtField::Elem>& point) const {
  ensure(static_cast<int>(point.size()) == nvars_, "evaluation point arity mismatch");
  ExtField::Elem acc = K.zero();
  for (const auto& [m, c] : terms_) {
    ExtField::Elem term = K.embed(c);
    for (std::size_t v = 0; v < m.size(); ++v) {
      for (int e = 0; e < m[v]; ++e) term = K.mul(term, point[v]);
    }
    acc = K.add(acc, term);
  }
  return acc;
}

std::string to_string(const HomForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const Field& k = f.field();
  // highest monomials first reads more naturally
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Rational c = it->second;
    bool negative = k.is_rationals() && sgn(c) < 0;
    if (negative) c = -c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t v = 0; v < it->first.size(); ++v) {
      int e = it->first[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "W" + std::to_string(v) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (mono.empty()) out += format_rational(c);
    else if (c == 1) out += mono;
    else out += format_rational(c) + "*" + mono;
  }
  return out;
}

PointPn PointPn::create(const ExtField& K, std::vector<ExtField::Elem> coords) {
  PointPn p;
  p.K_ = K;
  for (auto& c : coords) c = K.normalize(c);
  std::size_t i = 0;
  while (i < coords.size() && coords[i].is_zero()) ++i;
  if (i == coords.size()) fail(ErrorCode::ZeroInput, "projective point with all coordinates zero");
  ExtField::Elem inv = K.inv(coords[i]);
  for (auto& c : coords) c = K.mul(c, inv);
  p.c_ = std::move(coords);
  return p;
}

PointPn PointPn::rational(const Field& k, const std::vector<Rational>& coords) {
  ExtField K = ExtField::create(Poly::x(k), false);
  std::vector<ExtField::Elem> c;
  for (const auto& v : coords) c.push_back(K.embed(v));
  return create(K, std::move(c));
}

bool PointPn::is_rational() const {
  for (const auto& c : c_) {
    if (c.degree() > 0) return false;
  }
  return true;
}

std::string to_string(const PointPn& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += " : ";
    out += to_string(p.coords()[i], "t");
  }
  return out + ")";
}

HomogeneousMap HomogeneousMap::create(std::vector<HomForm> forms) {
  if (forms.size() < 2) fail(ErrorCode::Precondition, "a map of P^n needs at least two forms");
  const int nvars = static_cast<int>(forms.size());
  const int d = forms[0].degree();
  for (const auto& f : forms) {
    if (f.is_zero() || f.nvars() != nvars || f.degree() != d) {
      fail(ErrorCode::Precondition, "forms must be nonzero, in n+1 variables and of one degree");
    }
  }
  HomogeneousMap g;
  // Triangular certificate: F_i restricted to W_0 = ... = W_{i-1} = 0 is a
  // nonzero multiple of W_i^d, so a common zero has every coordinate zero.
  bool triangular = true;
  std::vector<int> zeroed;
  for (int i = 0; i < nvars && triangular; ++i) {
    HomForm r = forms[static_cast<std::size_t>(i)].restrict_zero(zeroed);
    HomForm::Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = d;
    triangular = r.terms().size() == 1 && r.terms().begin()->first == m;
    zeroed.push_back(i);
  }
  if (triangular) {
    g.cert_ = "triangular: F_i(0,...,0,W_i,...,W_n) = c_i W_i^" + std::to_string(d) + " with c_i != 0";
  } else if (nvars == 2) {
    const Field& k = forms[0].field();
    auto binary = [&](const HomForm& f) {
      std::vector<Rational> c;
      for (int i = 0; i <= d; ++i) c.push_back(f.coeff({d - i, i}));
      return Poly(k, std::move(c));
    };
    Poly a = binary(forms[0]), b = binary(forms[1]);
    // Common zero at infinity (W0 = 0) or a common finite root.
    bool common = (a.degree() < d && b.degree() < d) || gcd(a, b).degree() > 0;
    if (common) fail(ErrorCode::Precondition, "forms have a common zero");
    g.cert_ = "binary: the two forms have no common root";
  } else {
    fail(ErrorCode::Precondition, "cannot certify that the forms have no common zero");
  }
  g.f_ = std::move(forms);
  return g;
}

PointPn HomogeneousMap::apply(const PointPn& p) const {
  if (p.dim() != dim()) fail(ErrorCode::Precondition, "point dimension does not match the map");
  std::vector<ExtField::Elem> v;
  for (const auto& f : f_) v.push_back(f.eval(p.field(), p.coords()));
  return PointPn::create(p.field(), std::move(v));
}

HomogeneousMap merge_endomorphism(const PointPn& p2, const PointPn& p3) {
  const int n = p2.dim();
  if (n != p3.dim() || n < 2) fail(ErrorCode::Precondition, "merge needs two points of one P^n with n >= 2");
  for (const PointPn* p : {&p2, &p3}) {
    if (!p->coords()[0].is_zero()) fail(ErrorCode::Precondition, "point is off the hyperplane W0 = 0");
    if (p->coords()[1].is_zero()) fail(ErrorCode::Precondition, "point lies on the hyperplane W1 = 0");
  }
  const Field k = p2.field().base();
  require_same_field(k, p3.field().base(), "merge_endomorphism");
  // R_i(w) = P_i2(w) P_i3(w), padded by a power of w to the common degree d.
  std::vector<Poly> r;
  int d = 0;
  for (int i = 2; i <= n; ++i) {
    Poly prod = Poly::constant(k, k.one());
    for (const PointPn* p : {&p2, &p3}) {
      const ExtField& K = p->field();
      auto w = K.mul(p->coords()[static_cast<std::size_t>(i)], K.inv(p->coords()[1]));
      prod *= min_poly(K, w);
    }
    d = std::max(d, prod.degree());
    r.push_back(prod);
  }
  std::vector<HomForm> forms;
  forms.push_back(HomForm::variable_power(k, n + 1, 0, d));
  forms.push_back(HomForm::variable_power(k, n + 1, 1, d));
  for (int i = 2; i <= n; ++i) {
    Poly ri = r[static_cast<std::size_t>(i - 2)].shifted(d - r[static_cast<std::size_t>(i - 2)].degree());
    HomForm f(k, n + 1);
    for (int e = 0; e <= d; ++e) {
      HomForm::Monomial m(static_cast<std::size_t>(n + 1), 0);
      m[1] = d - e;
      m[static_cast<std::size_t>(i)] = e;
      f.add(m, ri.coeff(e));
    }
    forms.push_back(std::move(f));
  }
  return HomogeneousMap::create(std::move(forms));
}

ZeroCycle standard_cycle(const Field& k) {
  return ZeroCycle::point(ClosedPoint::rational(k, k.zero())) - ZeroCycle::point(ClosedPoint::infinity(k));
}

namespace {

// (num/den) o m, as a reduced pair.
std::pair<Poly, Poly> precompose(const Poly& num, const Poly& den, const MoebiusMap& m) {
  const Field& k = num.field();
  auto [mn, md] = m.as_fraction();
  const int d = std::max(num.degree(), den.degree());
  Poly n(k), e(k);
  for (int i = 0; i <= d; ++i) {
    Poly mono = pow(mn, i) * pow(md, d - i);
    n += mono.scaled(num.coeff(i));
    e += mono.scaled(den.coeff(i));
  }
  Poly g = gcd(n, e);
  return {n / g, e / g};
}

std::optional<Rational> free_rational_point(const ZeroCycle& z) {
  const Field& k = z.field();
  const long limit = k.is_finite() ? static_cast<long>(k.characteristic()) : static_cast<long>(z.terms().size()) + 2;
  for (long i = 0; i < limit; ++i) {
    // 0, 1, -1, 2, -2, ... over Q; 0, 1, ..., p-1 over F_p
    long v = k.is_finite() ? i : ((i % 2) ? (i + 1) / 2 : -(i / 2));
    Rational a = k.from_int(v);
    if (sgn(z.coeff(ClosedPoint::rational(k, a))) == 0) return a;
  }
  return std::nullopt;
}

}  // namespace

ReductionCertificate reduce_p1(const ZeroCycle& xi, const ReduceOptions& opts) {
  if (xi.is_zero()) fail(ErrorCode::ZeroCycleInput, "cannot reduce the zero cycle");
  if (!is_degree_trivial(xi)) fail(ErrorCode::NonzeroDegree, "reduction needs a degree-0 cycle, got degree " + format_rational(degree(xi)));
  const Field& k = xi.field();
  ReductionCertificate cert;
  cert.input = xi;
  ZeroCycle z = xi;
  const ClosedPoint inf = ClosedPoint::infinity(k);
  const Poly t = Poly::x(k), one = Poly::constant(k, k.one());

  Poly num, den;
  if (sgn(xi.coeff(inf)) != 0) {
    if (auto r = free_rational_point(xi)) {
      // t -> 1/(t - r) moves the free point r to infinity.
      cert.transport = MoebiusMap::create(k, 0, 1, 1, k.neg(*r));
      z = transport(*cert.transport, xi);
      cert.chain.push_back({"transport", one, Poly(k, {k.neg(*r), k.one()})});
    } else {
      // Every rational point is in the support: anchor at infinity and use
      // t -> 1/Q(t) with Q the product of the finite support points.
      cert.anchor = inf;
      cert.anchor_coeff = xi.coeff(inf);
      cert.anchor_at_infinity = true;
      Poly q = one;
      for (const auto& [p, m] : xi.terms()) {
        if (!p.is_infinity()) q *= p.poly();
      }
      cert.chain.push_back({"merge", one, q});
      num = one;
      den = q;
    }
  }

  if (!cert.anchor_at_infinity) {
    std::vector<ClosedPoint> support;
    for (const auto& [p, m] : z.terms()) support.push_back(p);
    std::size_t idx = 0;
    if (opts.anchor_seed) {
      std::mt19937_64 rng(*opts.anchor_seed);
      idx = static_cast<std::size_t>(rng() % support.size());
    } else {
      while (sgn(z.coeff(support[idx])) <= 0) ++idx;
    }
    cert.anchor = support[idx];
    cert.anchor_coeff = z.coeff(cert.anchor);
    Poly q = one;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (i != idx) q *= support[i].poly();
    }
    ExtField K = ExtField::create(cert.anchor.poly(), false);
    ExtField::Elem beta = K.normalize(q);
    ensure(!beta.is_zero(), "product of the other points vanishes at the anchor");
    Poly mb = min_poly(K, beta);
    Rational c = mb.coeff(0);
    ensure(!k.is_zero(c), "minimal polynomial of a nonzero element has zero constant term");
    Poly u = mb.compose(q);
    cert.chain.push_back({"merge", u, one});
    cert.chain.push_back({"moebius", t, t - Poly::constant(k, c)});
    num = u;
    den = u - Poly::constant(k, c);
    if (cert.transport) std::tie(num, den) = precompose(num, den, *cert.transport);
  }

  cert.composite_num = num;
  cert.composite_den = den;
  cert.scaling = cert.anchor_coeff * cert.anchor.degree();
  ensure(sgn(cert.scaling) != 0, "zero scaling constant");
  cert.theta = Correspondence(graph(num, den), 1 / cert.scaling);
  cert.replay = replay(cert);
  ensure(cert.replay, "reduction certificate does not replay");
  return cert;
}

bool replay(const ReductionCertificate& cert) {
  return act(cert.theta, cert.input) == standard_cycle(cert.input.field());
}

namespace {

Correspondence witness_from_theta(const Correspondence& theta, const RationalFunction& r, const FactorOptions& opts) {
  if (r.num().is_constant() && r.den().is_constant()) fail(ErrorCode::ConstantFunction, "witness function is constant");
  return compose(transpose(Correspondence(graph(r.num(), r.den()))), theta, opts);
}

}  // namespace

Correspondence rational_witness_correspondence(const ZeroCycle& xi, const RationalFunction& r,
                                               const ReduceOptions& opts) {
  if (r.num().is_constant() && r.den().is_constant()) fail(ErrorCode::ConstantFunction, "witness function is constant");
  return witness_from_theta(reduce_p1(xi, opts).theta, r, opts.factor);
}

bool GenerationReport::all_ok() const {
  for (const auto& e : entries) {
    if (!e.ok) return false;
  }
  return true;
}

GenerationReport verify_socle_generation(const ZeroCycle& xi, const std::vector<ZeroCycle>& targets,
                                         const ReduceOptions& opts) {
  if (xi.is_zero()) fail(ErrorCode::ZeroCycleInput, "generation needs a nonzero cycle");
  const Field& k = xi.field();
  GenerationReport rep;
  rep.xi_degree = degree(xi);
  rep.degree_branch = sgn(rep.xi_degree) != 0;
  std::optional<Correspondence> theta;
  for (const auto& eta : targets) {
    require_same_field(k, eta.field(), "verify_socle_generation");
    GenerationEntry e{eta, Correspondence(k), ZeroCycle(k), false};
    if (rep.degree_branch) {
      // Constant correspondences: act(P^1 x [y], xi) = deg(xi) [y].
      for (const auto& [y, m] : eta.terms()) e.correspondence.add(constant_correspondence(y), m / rep.xi_degree);
    } else {
      if (!is_degree_trivial(eta)) fail(ErrorCode::NonzeroDegree, "target " + to_string(eta) + " is not rationally trivial");
      if (!theta) theta = reduce_p1(xi, opts).theta;
      for (const auto& w : rational_witness_p1(eta)) {
        e.correspondence = e.correspondence + witness_from_theta(*theta, w.function, opts.factor).scaled(w.coeff);
      }
    }
    e.produced = act(e.correspondence, xi, opts.factor);
    e.ok = e.produced == eta;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace zc
