#include "zc/cosheaf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zc/error.hpp"

namespace zc {

namespace {

Rational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 4), den(1, 4);
  int n = num(rng);
  if (n >= 0) ++n;
  Rational c(n, den(rng));
  c.canonicalize();
  return c;
}

// Components of f^*[x], restricted to rational points when asked.
std::vector<ClosedPoint> fiber(const RationalFunction& f, const ClosedPoint& x, const CosheafOptions& opts) {
  std::vector<ClosedPoint> out;
  ZeroCycle pb = pullback(f, x, opts.factor);
  for (const auto& [q, c] : pb.terms()) {
    if (!opts.rational_only || q.degree() == 1) out.push_back(q);
  }
  return out;
}

std::vector<ClosedPoint> test_points(const Field& k, int d, const CosheafOptions& opts) {
  std::vector<ClosedPoint> pts;
  if (k.is_rationals() && !opts.test_points.empty()) {
    for (const auto& p : opts.test_points) {
      if (p.degree() <= d) pts.push_back(p);
    }
  } else {
    pts = base_points(k, d);
  }
  if (opts.rational_only) std::erase_if(pts, [](const ClosedPoint& p) { return p.degree() != 1; });
  return pts;
}

}  // namespace

int map_degree(const RationalFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

void require_nonconstant(const RationalFunction& f) {
  if (map_degree(f) < 1) fail(ErrorCode::ConstantFunction, "cover map " + to_string(f) + " is constant");
}

ImagePoint image(const RationalFunction& f, const ClosedPoint& q) {
  require_nonconstant(f);
  require_same_field(f.field(), q.field(), "image");
  const Field& k = f.field();
  if (q.is_infinity()) {
    int d = map_degree(f);
    if (f.num().degree() > f.den().degree()) return {ClosedPoint::infinity(k), 1};
    return {ClosedPoint::rational(k, k.div(f.num().coeff(d), f.den().coeff(d))), 1};
  }
  ExtField K = ExtField::create(q.poly(), false);
  auto theta = K.gen();
  auto n = embed(K, f.num()).eval(theta);
  auto dn = embed(K, f.den()).eval(theta);
  if (K.is_zero(dn)) return {ClosedPoint::infinity(k), q.degree()};
  Poly m = min_poly(K, K.div(n, dn));
  ClosedPoint x = ClosedPoint::finite(m);
  ensure(q.degree() % x.degree() == 0, "image degree divides source degree");
  return {x, q.degree() / x.degree()};
}

ZeroCycle pushforward(const RationalFunction& f, const ZeroCycle& z) {
  require_same_field(f.field(), z.field(), "pushforward");
  ZeroCycle out(z.field());
  for (const auto& [q, c] : z.terms()) {
    ImagePoint im = image(f, q);
    out.add(im.point, c * im.index);
  }
  return out;
}

ZeroCycle pullback(const RationalFunction& f, const ClosedPoint& p, const FactorOptions& opts) {
  require_nonconstant(f);
  require_same_field(f.field(), p.field(), "pullback");
  const Field& k = f.field();
  int d = map_degree(f);
  BinaryForm form;
  if (p.is_infinity()) {
    form = BinaryForm::from_poly(f.den(), d);
  } else {
    // P(Y0, Y1) at (den, num), homogenized to degree d * deg P.
    const Poly& P = p.poly();
    int e = P.degree();
    Poly acc(k);
    for (int i = 0; i <= e; ++i) {
      acc += (pow(f.den(), e - i) * pow(f.num(), i)).scaled(P.coeff(i));
    }
    form = BinaryForm::from_poly(acc, d * e);
  }
  ZeroCycle out(k);
  for (const auto& [q, m] : zeros(form, opts)) out.add(q, Rational(m));
  return out;
}

ZeroCycle pullback(const RationalFunction& f, const ZeroCycle& z, const FactorOptions& opts) {
  ZeroCycle out(z.field());
  for (const auto& [p, c] : z.terms()) out = out + pullback(f, p, opts).scaled(c);
  return out;
}

std::vector<ClosedPoint> closed_points_up_to(const Field& k, int d) {
  if (!k.is_finite()) fail(ErrorCode::Precondition, "closed points can only be enumerated over a finite field");
  if (d < 1) fail(ErrorCode::Precondition, "degree bound must be at least 1");
  const long p = k.characteristic();
  long total = 1;
  for (int e = 0; e < d; ++e) {
    total *= p;
    if (total > 2'000'000) fail(ErrorCode::Precondition, "too many closed points to enumerate");
  }
  std::vector<ClosedPoint> out;
  for (int e = 1; e <= d; ++e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    std::vector<Rational> c(static_cast<std::size_t>(e + 1), Rational(0));
    c.back() = 1;
    for (long n = 0; n < count; ++n) {
      long v = n;
      for (int i = 0; i < e; ++i, v /= p) c[static_cast<std::size_t>(i)] = Rational(v % p);
      Poly q(k, c);
      if (e == 1 || is_irreducible(q)) out.push_back(ClosedPoint::finite(q));
    }
  }
  out.push_back(ClosedPoint::infinity(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClosedPoint> rational_test_points() {
  const Field Q = Field::rationals();
  std::vector<ClosedPoint> out;
  for (auto [n, d] : {std::pair{0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {4, 1}, {8, 1}, {-8, 1},
                      {9, 1}, {1, 4}, {5, 2}, {-5, 2}, {10, 3}}) {
    Rational a(n, d);
    a.canonicalize();
    out.push_back(ClosedPoint::rational(Q, a));
  }
  for (auto c : std::vector<std::vector<long>>{{1, 0, 1}, {-2, 0, 1}, {1, 1, 1}, {3, 0, 1}, {-2, 0, 0, 1},
                                               {-1, -1, 0, 1}}) {
    out.push_back(ClosedPoint::finite(poly_from_ints(Q, c)));
  }
  out.push_back(ClosedPoint::infinity(Q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClosedPoint> base_points(const Field& k, int d) {
  if (k.is_finite()) return closed_points_up_to(k, d);
  auto pts = rational_test_points();
  std::erase_if(pts, [d](const ClosedPoint& p) { return p.degree() > d; });
  return pts;
}

CoverSpec CoverSpec::create(std::vector<CoverPiece> pieces) {
  if (pieces.empty()) fail(ErrorCode::EmptyCover, "cover has no pieces");
  const Field k = pieces.front().map.field();
  for (const auto& piece : pieces) {
    require_same_field(k, piece.map.field(), "cover");
    require_nonconstant(piece.map);
    for (const auto& p : piece.excluded) require_same_field(k, p.field(), "cover exclusion");
  }
  CoverSpec c;
  c.pieces_ = std::move(pieces);
  return c;
}

std::vector<ClosedPoint> SurjectivityReport::gaps() const {
  std::vector<ClosedPoint> out;
  for (const auto& e : entries) {
    if (e.piece < 0) out.push_back(e.base);
  }
  return out;
}

SurjectivityReport surjectivity_check(const CoverSpec& cover, int d, const CosheafOptions& opts) {
  if (d < 1) fail(ErrorCode::Precondition, "degree bound must be at least 1");
  if (cover.pieces().empty()) fail(ErrorCode::EmptyCover, "cover has no pieces");
  SurjectivityReport rep;
  for (const auto& x : test_points(cover.field(), d, opts)) {
    SurjectivityEntry entry{x, -1, std::nullopt};
    for (std::size_t i = 0; i < cover.pieces().size() && entry.piece < 0; ++i) {
      const auto& piece = cover.pieces()[i];
      for (const auto& q : fiber(piece.map, x, opts)) {
        if (std::find(piece.excluded.begin(), piece.excluded.end(), q) != piece.excluded.end()) continue;
        entry.piece = static_cast<int>(i);
        entry.source = q;
        break;
      }
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

ZeroCycle FiberPoint::difference() const {
  ZeroCycle z(base.field());
  z.add(first, Rational(first_index));
  z.add(second, Rational(-second_index));
  return z;
}

std::string to_string(const FiberPoint& z) {
  std::string s = "(" + to_string(z.first) + ", " + to_string(z.second) + ") over " + to_string(z.base);
  if (z.component) s += " via " + to_string(*z.component, "u", "t");
  return s + ", degree " + std::to_string(z.degree);
}

std::vector<FiberPoint> fiber_points(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& q,
                                     const ClosedPoint& q2, const FactorOptions& opts) {
  require_same_field(f.field(), g.field(), "fiber product");
  ImagePoint a = image(f, q), b = image(g, q2);
  if (a.point != b.point) {
    fail(ErrorCode::NotInImage, to_string(q) + " and " + to_string(q2) + " lie over different points " +
                                    to_string(a.point) + " and " + to_string(b.point));
  }
  const ClosedPoint& x = a.point;
  if (q.is_infinity() || q2.is_infinity()) {
    // kappa(x) = k, so the fiber is Spec of the other residue field.
    FiberPoint z{x, q, q2, std::nullopt, std::max(q.degree(), q2.degree()), q2.degree(), q.degree()};
    return {z};
  }
  ExtField K = ExtField::create(q.poly(), false);
  auto theta = K.gen();
  auto nf = embed(K, f.num()).eval(theta);
  auto df = embed(K, f.den()).eval(theta);
  // g(u) = f(theta), cross-multiplied so that f(theta) = infinity is covered.
  ExtPoly h = embed(K, g.num()).scaled(df) - embed(K, g.den()).scaled(nf);
  ensure(!h.is_zero(), "fiber equation is nonzero");
  std::vector<FiberPoint> out;
  int total = 0;
  for (const auto& r : factor_over_extension(q2.poly(), K, opts)) {
    if (!(h % r.poly).is_zero()) continue;
    int e1 = r.poly.degree();
    int deg = e1 * q.degree();
    ensure(deg % q2.degree() == 0, "fiber point degree is a multiple of both legs");
    out.push_back({x, q, q2, r.poly, deg, e1, deg / q2.degree()});
    total += e1;
  }
  ensure(total == b.index, "fiber components account for [kappa(q') : kappa(x)]");
  return out;
}

std::vector<FiberPoint> fiber_product_points(const RationalFunction& f, const RationalFunction& g,
                                             const ClosedPoint& x, const FactorOptions& opts) {
  ZeroCycle pf = pullback(f, x, opts), pg = pullback(g, x, opts);
  if (pf.is_zero() || pg.is_zero()) fail(ErrorCode::NotInImage, to_string(x) + " is not in the image");
  std::vector<FiberPoint> out;
  for (const auto& [q, c] : pf.terms()) {
    for (const auto& [q2, c2] : pg.terms()) {
      auto pts = fiber_points(f, g, q, q2, opts);
      out.insert(out.end(), pts.begin(), pts.end());
    }
  }
  return out;
}

ZeroCycle replay(const Field& k, const std::vector<LiftTerm>& terms) {
  ZeroCycle out(k);
  for (const auto& t : terms) out = out + t.point.difference().scaled(t.coeff);
  return out;
}

LiftCertificate kernel_certificate(const RationalFunction& f, const ZeroCycle& alpha, const CosheafOptions& opts) {
  require_same_field(f.field(), alpha.field(), "kernel certificate");
  if (opts.rational_only) {
    for (const auto& [q, c] : alpha.terms()) {
      if (q.degree() != 1) fail(ErrorCode::Precondition, "rational-points mode got " + to_string(q));
    }
  }
  ZeroCycle img = pushforward(f, alpha);
  if (!img.is_zero()) fail(ErrorCode::NotInKernel, "f_* alpha = " + to_string(img));

  std::map<ClosedPoint, std::vector<std::pair<ClosedPoint, Rational>>> by_base;
  for (const auto& [q, c] : alpha.terms()) by_base[image(f, q).point].emplace_back(q, c);

  LiftCertificate cert{alpha, {}, false};
  for (const auto& [x, pts] : by_base) {
    const ClosedPoint& anchor = pts.back().first;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto zs = fiber_points(f, f, pts[i].first, anchor, opts.factor);
      ensure(!zs.empty(), "two points over one base have a common fiber point");
      auto best = std::min_element(zs.begin(), zs.end(),
                                   [](const FiberPoint& a, const FiberPoint& b) { return a.degree < b.degree; });
      Rational coeff = pts[i].second / best->first_index;
      coeff.canonicalize();
      cert.terms.push_back({coeff, *best});
    }
  }
  cert.replay_ok = replay(alpha.field(), cert.terms) == alpha;
  return cert;
}

bool ExactnessReport::surjective() const {
  return std::all_of(surjectivity.begin(), surjectivity.end(), [](const PreimageEntry& e) { return e.preimage.has_value(); });
}

bool ExactnessReport::kernel_ok() const {
  return std::all_of(samples.begin(), samples.end(), [](const SampleResult& s) {
    return !s.in_kernel || (s.error.empty() && s.certificate && s.certificate->replay_ok);
  });
}

ExactnessReport verify_exactness(const RationalFunction& f, const std::vector<ZeroCycle>& samples, int d,
                                 const CosheafOptions& opts) {
  require_nonconstant(f);
  const Field& k = f.field();
  ExactnessReport rep;
  for (const auto& x : test_points(k, d, opts)) {
    PreimageEntry entry{x, std::nullopt};
    auto pts = fiber(f, x, opts);
    if (!pts.empty()) {
      const ClosedPoint& q = pts.front();
      ZeroCycle pre = ZeroCycle::point(q, Rational(1, image(f, q).index));
      if (pushforward(f, pre) == ZeroCycle::point(x)) entry.preimage = pre;
    }
    rep.surjectivity.push_back(std::move(entry));
  }

  std::set<ClosedPoint> bases;
  auto check = [&](const FiberPoint& z) {
    ++rep.fiber_points_checked;
    if (!pushforward(f, z.difference()).is_zero()) rep.complex_failures.push_back(z);
  };
  for (const auto& s : samples) {
    SampleResult res;
    res.sample = s;
    ZeroCycle img = pushforward(f, s);
    res.in_kernel = img.is_zero();
    if (!res.in_kernel) {
      res.image = img;
    } else {
      try {
        res.certificate = kernel_certificate(f, s, opts);
        for (const auto& t : res.certificate->terms) check(t.point);
      } catch (const Error& e) {
        res.error = std::string(e.code_name()) + ": " + e.what();
      }
      for (const auto& [q, c] : s.terms()) bases.insert(image(f, q).point);
    }
    rep.samples.push_back(std::move(res));
  }
  for (const auto& x : bases) {
    for (const auto& z : fiber_product_points(f, f, x, opts.factor)) {
      if (!opts.rational_only || z.degree == 1) check(z);
    }
  }
  return rep;
}

ZeroCycle random_kernel_element(const RationalFunction& f, std::mt19937_64& rng, int d, const CosheafOptions& opts) {
  require_nonconstant(f);
  auto bases = test_points(f.field(), d, opts);
  std::shuffle(bases.begin(), bases.end(), rng);
  std::uniform_int_distribution<int> nbases(1, 3);
  int want = nbases(rng);
  ZeroCycle out(f.field());
  for (const auto& x : bases) {
    if (want == 0) break;
    auto pts = fiber(f, x, opts);
    if (pts.size() < 2) continue;
    std::shuffle(pts.begin(), pts.end(), rng);
    std::uniform_int_distribution<std::size_t> npts(2, std::min<std::size_t>(4, pts.size()));
    pts.resize(npts(rng));
    Rational weight(0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Rational c = random_coeff(rng);
      out.add(pts[i], c);
      weight += c * pts[i].degree();
    }
    Rational last = -weight / pts.back().degree();
    last.canonicalize();
    out.add(pts.back(), last);
    --want;
  }
  return out;
}

}  // namespace zc
