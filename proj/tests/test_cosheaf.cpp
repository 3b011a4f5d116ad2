#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zc/cosheaf.hpp"

using namespace zc;
using zc::test::P;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F101 = Field::prime(101);

ClosedPoint pt(const Field& k, std::initializer_list<long> c) { return ClosedPoint::finite(P(k, c)); }
ZeroCycle Z(const ClosedPoint& p, const Rational& c = Rational(1)) { return ZeroCycle::point(p, c); }

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

RationalFunction square(const Field& k) { return RationalFunction(P(k, {0, 0, 1}), P(k, {1})); }
RationalFunction cube(const Field& k) { return RationalFunction(P(k, {0, 0, 0, 1}), P(k, {1})); }
RationalFunction joukowski(const Field& k) { return RationalFunction(P(k, {1, 0, 1}), P(k, {0, 1})); }
RationalFunction identity(const Field& k) { return RationalFunction(P(k, {0, 1}), P(k, {1})); }

// Value of f at a point of P^1(F_p), with p standing for infinity.
long eval_fp(const RationalFunction& f, long a, long p) {
  const Field& k = f.field();
  Rational n, d;
  if (a == p) {
    int deg = map_degree(f);
    n = f.num().coeff(deg);
    d = f.den().coeff(deg);
  } else {
    n = f.num().eval(Rational(a));
    d = f.den().eval(Rational(a));
  }
  if (k.is_zero(d)) return p;
  return k.div(n, d).get_num().get_si();
}

}  // namespace

TEST(Cosheaf, ImageAndPushforwardExamples) {
  auto f = square(Q);
  EXPECT_EQ(image(f, pt(Q, {1, 1})).point, pt(Q, {-1, 1}));
  ImagePoint im = image(f, pt(Q, {1, 0, 1}));
  EXPECT_EQ(im.point, pt(Q, {1, 1}));
  EXPECT_EQ(im.index, 2);
  EXPECT_EQ(image(f, ClosedPoint::infinity(Q)).point, ClosedPoint::infinity(Q));
  EXPECT_EQ(image(joukowski(Q), pt(Q, {0, 1})).point, ClosedPoint::infinity(Q));
  EXPECT_EQ(image(joukowski(Q), ClosedPoint::infinity(Q)).point, ClosedPoint::infinity(Q));
  // x^2 + x + 1 under t^3 lands on 1 with index 2.
  ImagePoint c = image(cube(Q), pt(Q, {1, 1, 1}));
  EXPECT_EQ(c.point, pt(Q, {-1, 1}));
  EXPECT_EQ(c.index, 2);

  ZeroCycle pb = pullback(f, pt(Q, {-4, 1}));
  EXPECT_EQ(pb, Z(pt(Q, {-2, 1})) + Z(pt(Q, {2, 1})));
  EXPECT_EQ(pullback(f, ClosedPoint::infinity(Q)), Z(ClosedPoint::infinity(Q), R(2)));
  EXPECT_EQ(pullback(f, pt(Q, {0, 1})), Z(pt(Q, {0, 1}), R(2)));
  EXPECT_EQ(pullback(joukowski(Q), ClosedPoint::infinity(Q)),
            Z(pt(Q, {0, 1})) + Z(ClosedPoint::infinity(Q)));

  EXPECT_THROW(require_nonconstant(RationalFunction::constant(Q, R(3))), Error);
}

TEST(Cosheaf, PushforwardAndPullbackMatchCorrespondences) {
  std::mt19937_64 rng(17);
  for (const Field& k : {Q, F5, F101}) {
    for (int it = 0; it < 40; ++it) {
      RationalFunction f = random_function(k, rng, 3);
      PrimeCorrespondence g = graph(f.num(), f.den());
      ZeroCycle z = zc::test::random_cycle(k, rng, 3, 2);
      EXPECT_EQ(pushforward(f, z), act(Correspondence(g), z));
      ClosedPoint p = zc::test::random_point(k, rng, 2);
      ZeroCycle up = pullback(f, p);
      EXPECT_EQ(up, act(transpose(Correspondence(g)), Z(p)));
      EXPECT_EQ(pushforward(f, up), Z(p, R(map_degree(f))));
    }
  }
}

TEST(Cosheaf, ClosedPointEnumeration) {
  auto pts = closed_points_up_to(F5, 3);
  // 5 + 10 + 40 monic irreducibles, plus infinity.
  EXPECT_EQ(pts.size(), 56u);
  EXPECT_EQ(closed_points_up_to(Field::prime(2), 4).size(), 2u + 1u + 2u + 3u + 1u);
  EXPECT_THROW(closed_points_up_to(Q, 2), Error);
  for (const auto& p : rational_test_points()) EXPECT_TRUE(p.field() == Q);
}

TEST(Surjectivity, Examples) {
  CoverSpec sq = CoverSpec::create({{square(F5), {}}});
  auto rep = surjectivity_check(sq, 3);
  EXPECT_TRUE(rep.gap_free());
  EXPECT_EQ(rep.entries.size(), 56u);

  CoverSpec punctured = CoverSpec::create({{identity(Q), {pt(Q, {0, 1})}}});
  auto gaps = surjectivity_check(punctured, 3).gaps();
  ASSERT_EQ(gaps.size(), 1u);
  EXPECT_EQ(gaps[0], pt(Q, {0, 1}));

  CoverSpec joint = CoverSpec::create({{identity(Q), {pt(Q, {0, 1})}}, {identity(Q), {pt(Q, {-1, 1})}}});
  auto jrep = surjectivity_check(joint, 3);
  EXPECT_TRUE(jrep.gap_free());
  for (const auto& e : jrep.entries) {
    if (e.base == pt(Q, {0, 1})) EXPECT_EQ(e.piece, 1);
  }

  // Every point of a degree-2 cover is hit; rational points need not be.
  CosheafOptions rat;
  rat.rational_only = true;
  auto rgaps = surjectivity_check(CoverSpec::create({{square(Q), {}}}), 3, rat).gaps();
  EXPECT_FALSE(rgaps.empty());
  EXPECT_NE(std::find(rgaps.begin(), rgaps.end(), pt(Q, {-2, 1})), rgaps.end());

  EXPECT_THROW(CoverSpec::create({}), Error);
  try {
    CoverSpec::create({});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCover);
  }
  EXPECT_THROW(surjectivity_check(sq, 0), Error);
}

TEST(Surjectivity, SingleMapsNeverHaveGaps) {
  std::mt19937_64 rng(3);
  for (const Field& k : {Q, F5, Field::prime(7)}) {
    for (int it = 0; it < 10; ++it) {
      CoverSpec c = CoverSpec::create({{random_function(k, rng, 3), {}}});
      EXPECT_TRUE(surjectivity_check(c, 2).gap_free());
    }
  }
}

TEST(FiberProduct, Examples) {
  auto f = square(Q);
  auto pts = fiber_points(f, f, pt(Q, {-1, 1}), pt(Q, {1, 1}));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].degree, 1);
  EXPECT_EQ(pts[0].difference(), Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1})));
  // Over [x - 1]: the pairs (1,1), (1,-1), (-1,1), (-1,-1).
  EXPECT_EQ(fiber_product_points(f, f, pt(Q, {-1, 1})).size(), 4u);

  auto id = identity(Q);
  auto diag = fiber_product_points(id, id, pt(Q, {1, 0, 1}));
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag[0].first, pt(Q, {1, 0, 1}));
  EXPECT_EQ(diag[0].second, pt(Q, {1, 0, 1}));
  EXPECT_EQ(diag[0].degree, 2);

  // x^2 + 1 splits over Q(i): two components, each of degree 2.
  auto two = fiber_points(f, f, pt(Q, {1, 0, 1}), pt(Q, {1, 0, 1}));
  ASSERT_EQ(two.size(), 2u);
  for (const auto& z : two) {
    EXPECT_EQ(z.degree, 2);
    EXPECT_EQ(z.first_index, 1);
    EXPECT_EQ(z.second_index, 1);
  }

  // Legs at infinity.
  auto j = joukowski(Q);
  auto inf = fiber_product_points(j, j, ClosedPoint::infinity(Q));
  EXPECT_EQ(inf.size(), 4u);

  try {
    fiber_points(f, f, pt(Q, {-1, 1}), pt(Q, {-2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInImage);
  }
  // -1 has no rational square root, but [x^2 + 1] lies over it.
  EXPECT_EQ(fiber_product_points(f, f, pt(Q, {1, 1})).size(), 2u);
}

TEST(FiberProduct, DegreeIdentityBothWays) {
  std::mt19937_64 rng(8);
  for (const Field& k : {Q, F5, F101}) {
    for (int it = 0; it < 15; ++it) {
      RationalFunction f = random_function(k, rng, 3), g = random_function(k, rng, 2);
      ClosedPoint x = zc::test::random_point(k, rng, 2);
      ZeroCycle pf = pullback(f, x), pg = pullback(g, x);
      for (const auto& [q, c] : pf.terms()) {
        for (const auto& [q2, c2] : pg.terms()) {
          auto zs = fiber_points(f, g, q, q2);
          int s1 = 0, s2 = 0;
          for (const auto& z : zs) {
            EXPECT_EQ(z.degree, z.first_index * q.degree());
            EXPECT_EQ(z.degree, z.second_index * q2.degree());
            EXPECT_TRUE(pushforward(f, Z(z.first, R(z.first_index))) ==
                        pushforward(g, Z(z.second, R(z.second_index))));
            s1 += z.first_index;
            s2 += z.second_index;
          }
          // sum [kappa(z):kappa(q)] = [kappa(q'):kappa(x)] and symmetrically.
          EXPECT_EQ(s1, q2.degree() / x.degree());
          EXPECT_EQ(s2, q.degree() / x.degree());
        }
      }
    }
  }
}

TEST(FiberProduct, RationalPointsMatchBruteForceCount) {
  for (long p : {5L, 7L, 11L}) {
    const Field k = Field::prime(static_cast<std::uint64_t>(p));
    std::mt19937_64 rng(static_cast<std::uint64_t>(p));
    for (int it = 0; it < 5; ++it) {
      RationalFunction f = random_function(k, rng, 3), g = random_function(k, rng, 3);
      long brute = 0;
      for (long a = 0; a <= p; ++a) {
        for (long b = 0; b <= p; ++b) brute += eval_fp(f, a, p) == eval_fp(g, b, p);
      }
      long counted = 0;
      for (long x = 0; x <= p; ++x) {
        ClosedPoint base = x == p ? ClosedPoint::infinity(k) : ClosedPoint::rational(k, Rational(x));
        for (const auto& z : fiber_product_points(f, g, base)) counted += z.degree == 1;
      }
      EXPECT_EQ(counted, brute);
    }
  }
}

TEST(KernelCertificate, Examples) {
  auto f = square(Q);
  ZeroCycle alpha = Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1}));
  auto cert = kernel_certificate(f, alpha);
  ASSERT_EQ(cert.terms.size(), 1u);
  EXPECT_EQ(cert.terms[0].coeff, R(1));
  EXPECT_EQ(cert.terms[0].point.first, pt(Q, {-1, 1}));
  EXPECT_EQ(cert.terms[0].point.second, pt(Q, {1, 1}));
  EXPECT_TRUE(cert.replay_ok);

  auto empty = kernel_certificate(f, ZeroCycle(Q));
  EXPECT_TRUE(empty.terms.empty());
  EXPECT_TRUE(empty.replay_ok);

  // Fractional coefficients: (1/3)[x - 2] - (1/3)[x + 2] over 4.
  auto third = kernel_certificate(f, Z(pt(Q, {-2, 1}), R(1, 3)) - Z(pt(Q, {2, 1}), R(1, 3)));
  ASSERT_EQ(third.terms.size(), 1u);
  EXPECT_EQ(third.terms[0].coeff, R(1, 3));
  EXPECT_TRUE(third.replay_ok);

  // Over 1 under t^3 the fiber is [x - 1] + [x^2 + x + 1].
  ZeroCycle mu3 = Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1, 1}), R(1, 2));
  auto c3 = kernel_certificate(cube(Q), mu3);
  ASSERT_EQ(c3.terms.size(), 1u);
  EXPECT_EQ(c3.terms[0].coeff, R(1, 2));
  EXPECT_EQ(c3.terms[0].point.first_index, 2);
  EXPECT_TRUE(c3.replay_ok);

  try {
    kernel_certificate(cube(Q), Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1, 1})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInKernel);
  }

  CosheafOptions rat;
  rat.rational_only = true;
  EXPECT_THROW(kernel_certificate(cube(Q), mu3, rat), Error);
}

TEST(KernelCertificate, RandomKernelElementsReplay) {
  std::mt19937_64 rng(21);
  for (const Field& k : {Q, F5, F101}) {
    std::vector<RationalFunction> maps{square(k), cube(k), joukowski(k)};
    for (int i = 0; i < 3; ++i) maps.push_back(random_function(k, rng, 3));
    for (const auto& f : maps) {
      for (int it = 0; it < 8; ++it) {
        ZeroCycle alpha = random_kernel_element(f, rng, 2);
        EXPECT_TRUE(pushforward(f, alpha).is_zero());
        auto cert = kernel_certificate(f, alpha);
        EXPECT_TRUE(cert.replay_ok) << to_string(alpha);
        EXPECT_EQ(replay(k, cert.terms), alpha);
        for (const auto& t : cert.terms) EXPECT_TRUE(pushforward(f, t.point.difference()).is_zero());
      }
    }
  }
}

TEST(Exactness, Examples) {
  std::mt19937_64 rng(0);
  auto f = square(F5);
  std::vector<ZeroCycle> samples;
  for (int i = 0; i < 50; ++i) samples.push_back(random_kernel_element(f, rng, 2));
  auto rep = verify_exactness(f, samples, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.surjectivity.size(), 16u);
  for (const auto& s : rep.samples) {
    EXPECT_TRUE(s.in_kernel);
    ASSERT_TRUE(s.certificate.has_value());
    EXPECT_TRUE(s.certificate->replay_ok);
  }
  EXPECT_GT(rep.fiber_points_checked, 0);

  auto id = verify_exactness(identity(Q), {ZeroCycle(Q)}, 3);
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(random_kernel_element(identity(Q), rng, 3), ZeroCycle(Q));

  // The plain difference over 1 is not in the kernel; its normalized form is.
  ZeroCycle plain = Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1, 1}));
  ZeroCycle normalized = Z(pt(Q, {-1, 1})) - Z(pt(Q, {1, 1, 1}), R(1, 2));
  auto c = verify_exactness(cube(Q), {plain, normalized}, 3);
  EXPECT_TRUE(c.ok());
  EXPECT_FALSE(c.samples[0].in_kernel);
  EXPECT_EQ(*c.samples[0].image, Z(pt(Q, {-1, 1}), R(-1)));
  EXPECT_TRUE(c.samples[1].certificate->replay_ok);
}

TEST(Exactness, RationalPointSubcosheaf) {
  std::mt19937_64 rng(4);
  CosheafOptions rat;
  rat.rational_only = true;
  auto f = joukowski(Q);
  std::vector<ZeroCycle> samples;
  for (int i = 0; i < 10; ++i) {
    ZeroCycle s = random_kernel_element(f, rng, 1, rat);
    for (const auto& [q, c] : s.terms()) EXPECT_EQ(q.degree(), 1);
    samples.push_back(s);
  }
  auto rep = verify_exactness(f, samples, 1, rat);
  EXPECT_TRUE(rep.kernel_ok());
  EXPECT_TRUE(rep.complex_ok());
  // 0 has no rational preimage under (t^2 + 1)/t.
  EXPECT_FALSE(rep.surjective());
}
