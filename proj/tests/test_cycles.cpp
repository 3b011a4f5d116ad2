#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zc/extfield.hpp"

using namespace zc;
using zc::test::P;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

std::vector<Poly> all_monics(const Field& k, int d) {
  std::vector<Poly> out;
  const long p = k.characteristic();
  long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> c;
    long v = idx;
    for (int i = 0; i < d; ++i) {
      c.push_back(v % p);
      v /= p;
    }
    c.push_back(1);
    out.push_back(poly_from_ints(k, c));
  }
  return out;
}

ClosedPoint pt(const Field& k, std::initializer_list<long> c) { return ClosedPoint::finite(P(k, c)); }

}  // namespace

TEST(ClosedPoint, Construction) {
  ClosedPoint a = pt(Q, {1, 0, 1});
  EXPECT_FALSE(a.is_infinity());
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(a.poly(), P(Q, {1, 0, 1}));
  try {
    pt(Q, {-1, 0, 1});
    FAIL() << "x^2 - 1 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReduciblePolynomial);
    EXPECT_NE(std::string(e.what()).find("x - 1"), std::string::npos);
  }
  EXPECT_EQ(ClosedPoint::infinity(F5).degree(), 1);
  EXPECT_THROW(pt(Q, {3}), Error);
  // non-monic input is normalized
  EXPECT_EQ(ClosedPoint::finite(P(Q, {2, 4})).poly(), Poly(Q, {Rational(1, 2), Rational(1)}));
}

TEST(ClosedPoint, CanonicalOrderPutsInfinityLast) {
  ClosedPoint inf = ClosedPoint::infinity(Q);
  ClosedPoint a = pt(Q, {-1, 1}), b = pt(Q, {1, 0, 1});
  EXPECT_LT(a, b);
  EXPECT_LT(b, inf);
  EXPECT_LT(a, inf);
}

TEST(ZeroCycle, Degree) {
  ZeroCycle z(Q);
  z.add(pt(Q, {-1, 1}), 3);
  z.add(pt(Q, {2, 0, 1}), 1);
  EXPECT_EQ(degree(z), 5);
  ZeroCycle w = ZeroCycle::point(pt(Q, {0, 1})) - ZeroCycle::point(ClosedPoint::infinity(Q));
  EXPECT_EQ(degree(w), 0);
  EXPECT_EQ(degree(ZeroCycle(Q)), 0);
}

TEST(ZeroCycle, Combine) {
  ZeroCycle a = ZeroCycle::point(pt(Q, {-1, 1}));
  EXPECT_TRUE(combine(a, a, 1, -1).is_zero());
  ZeroCycle zero = ZeroCycle::point(pt(Q, {0, 1})), inf = ZeroCycle::point(ClosedPoint::infinity(Q));
  ZeroCycle w = combine(zero, inf, 1, -1);
  EXPECT_EQ(w.terms().size(), 2u);
  EXPECT_EQ(w.coeff(ClosedPoint::infinity(Q)), -1);
  ZeroCycle b = ZeroCycle::point(pt(Q, {1, 0, 1}), 2);
  EXPECT_TRUE(combine(b, ZeroCycle::point(pt(Q, {1, 0, 1})), Rational(1, 2), -1).is_zero());
  EXPECT_THROW(combine(a, ZeroCycle(F5), 1, 1), Error);
}

TEST(ZeroCycle, DegreeTriviality) {
  ZeroCycle w = ZeroCycle::point(pt(Q, {0, 1})) - ZeroCycle::point(ClosedPoint::infinity(Q));
  EXPECT_TRUE(is_degree_trivial(w));
  EXPECT_FALSE(is_degree_trivial(ZeroCycle::point(pt(Q, {1, 0, 1})) - ZeroCycle::point(pt(Q, {-1, 1}))));
  EXPECT_TRUE(is_degree_trivial(ZeroCycle(Q)));
}

TEST(Moebius, TransportExamples) {
  auto shift = MoebiusMap::create(Q, 1, 1, 0, 1);
  EXPECT_EQ(transport(shift, ZeroCycle::point(pt(Q, {-1, 1}))), ZeroCycle::point(pt(Q, {-2, 1})));
  ZeroCycle z = ZeroCycle::point(pt(Q, {1, 0, 1}), 3) - ZeroCycle::point(ClosedPoint::infinity(Q));
  EXPECT_EQ(transport(MoebiusMap::identity(Q), z), z);
  auto inv = MoebiusMap::create(Q, 0, 1, 1, 0);
  ZeroCycle w = ZeroCycle::point(pt(Q, {0, 1})) - ZeroCycle::point(ClosedPoint::infinity(Q));
  EXPECT_EQ(transport(inv, w), w.scaled(-1));
  EXPECT_THROW(MoebiusMap::create(Q, 1, 2, 2, 4), Error);
}

TEST(Moebius, RationalPointOracle) {
  std::mt19937_64 rng(21);
  for (const Field& k : {Q, F5}) {
    for (int it = 0; it < 300; ++it) {
      MoebiusMap m = test::random_moebius(k, rng);
      Rational a = test::random_rational(k, rng);
      Rational den = k.add(k.mul(m.c(), a), m.d());
      ClosedPoint img = m.apply(ClosedPoint::rational(k, a));
      if (k.is_zero(den)) {
        EXPECT_TRUE(img.is_infinity());
      } else {
        Rational v = k.div(k.add(k.mul(m.a(), a), m.b()), den);
        EXPECT_EQ(img, ClosedPoint::rational(k, v));
      }
      ClosedPoint at_inf = m.apply(ClosedPoint::infinity(k));
      if (k.is_zero(m.c())) EXPECT_TRUE(at_inf.is_infinity());
      else EXPECT_EQ(at_inf, ClosedPoint::rational(k, k.div(m.a(), m.c())));
    }
  }
}

TEST(Moebius, HigherDegreePointsMapToConjugateImages) {
  // The image polynomial vanishes at m(alpha) computed in k(alpha).
  std::mt19937_64 rng(22);
  for (const Field& k : {Q, F5}) {
    for (int it = 0; it < 200; ++it) {
      ClosedPoint p = test::random_point(k, rng, 3);
      if (p.is_infinity() || p.degree() < 2) continue;
      MoebiusMap m = test::random_moebius(k, rng);
      auto K = ExtField::create(p.poly());
      auto alpha = K.gen();
      auto num = K.add(K.mul(K.embed(m.a()), alpha), K.embed(m.b()));
      auto den = K.add(K.mul(K.embed(m.c()), alpha), K.embed(m.d()));
      auto beta = K.mul(num, K.inv(den));
      ClosedPoint img = m.apply(p);
      ASSERT_FALSE(img.is_infinity());
      EXPECT_EQ(img.degree(), p.degree());
      EXPECT_EQ(embed(K, img.poly()).eval(beta), K.zero());
    }
  }
}

TEST(Moebius, DegreeInvariantAndInverse) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 1000; ++it) {
    const Field& k = it % 2 ? Q : F5;
    ZeroCycle z = test::random_cycle(k, rng);
    MoebiusMap m = test::random_moebius(k, rng);
    ZeroCycle w = transport(m, z);
    EXPECT_EQ(degree(w), degree(z));
    EXPECT_EQ(transport(m.inverse(), w), z);
    MoebiusMap n = test::random_moebius(k, rng);
    EXPECT_EQ(transport(n, w), transport(n.after(m), z));
  }
}

TEST(ZeroCycle, BilinearCombine) {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 200; ++it) {
    const Field& k = it % 2 ? Q : F5;
    ZeroCycle a = test::random_cycle(k, rng), b = test::random_cycle(k, rng), c = test::random_cycle(k, rng);
    Rational s = test::random_rational(Q, rng), t = test::random_rational(Q, rng);
    EXPECT_EQ(combine(a, b, s, t), combine(b, a, t, s));
    EXPECT_EQ(combine(combine(a, b, s, t), c, 1, 1), combine(a, combine(b, c, t, 1), s, 1));
    EXPECT_EQ(degree(combine(a, b, s, t)), s * degree(a) + t * degree(b));
  }
}

TEST(ClosedPoint, RejectsExactlyReducibleInputs) {
  // Brute-force oracle over F_2 and F_3: a polynomial of degree <= 4 is
  // irreducible iff it has no monic divisor of degree 1..deg/2.
  for (std::uint32_t p : {2u, 3u}) {
    Field k = Field::prime(p);
    for (int d = 1; d <= 4; ++d) {
      for (const auto& q : all_monics(k, d)) {
        bool reducible = false;
        for (int e = 1; e <= d / 2 && !reducible; ++e) {
          for (const auto& g : all_monics(k, e)) reducible = reducible || (q % g).is_zero();
        }
        bool rejected = false;
        try {
          ClosedPoint::finite(q);
        } catch (const Error& e) {
          rejected = e.code() == ErrorCode::ReduciblePolynomial;
        }
        EXPECT_EQ(rejected, reducible) << to_string(q);
      }
    }
  }
  // Over Q, cross-check against factorization on random inputs.
  std::mt19937_64 rng(25);
  for (int it = 0; it < 500; ++it) {
    Poly q = test::random_poly(Q, 2 + static_cast<int>(rng() % 4), rng);
    bool rejected = false;
    try {
      ClosedPoint::finite(q);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::ReduciblePolynomial;
    }
    auto fs = factor(q);
    EXPECT_EQ(rejected, fs.size() > 1 || fs[0].multiplicity > 1);
  }
}
