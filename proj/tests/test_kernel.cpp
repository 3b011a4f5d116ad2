#include <gtest/gtest.h>

#include <random>

#include "zc/error.hpp"
#include "zc/extfield.hpp"
#include "zc/linalg.hpp"
#include "zc/poly.hpp"

using namespace zc;

namespace {

const Field Q = Field::rationals();

Poly P(const Field& k, std::initializer_list<long> c) { return poly_from_ints(k, c); }

Poly random_poly(const Field& k, int deg, std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<long> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = dist(rng);
  if (k.is_zero(k.from_int(c.back()))) c.back() = 1;
  return poly_from_ints(k, c);
}

// Brute force: does f have a monic factor of degree dd over the small field F_p?
bool has_factor_of_degree(const Poly& f, int dd) {
  const Field& k = f.field();
  const long p = k.characteristic();
  long count = 1;
  for (int i = 0; i < dd; ++i) count *= p;
  for (long code = 0; code < count; ++code) {
    std::vector<long> c;
    long v = code;
    for (int i = 0; i < dd; ++i) {
      c.push_back(v % p);
      v /= p;
    }
    c.push_back(1);
    if ((f % poly_from_ints(k, c)).is_zero()) return true;
  }
  return false;
}

}  // namespace

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(P(Q, {-1, 0, 1}), P(Q, {1, -2, 1})), P(Q, {-1, 1}));
  Poly p = P(Q, {3, 0, 2});
  EXPECT_EQ(gcd(p, Poly(Q)), p.monic());
  Field F5 = Field::prime(5);
  EXPECT_EQ(gcd(P(F5, {1, 0, 1}), P(F5, {3, 1})), P(F5, {3, 1}));
}

TEST(Gcd, IntegerRemainderSequenceMatchesEuclid) {
  std::mt19937_64 rng(8);
  const Field Q = Field::rationals();
  for (int it = 0; it < 300; ++it) {
    Poly c = random_poly(Q, static_cast<int>(rng() % 4), rng);
    Poly a = random_poly(Q, static_cast<int>(rng() % 6), rng) * c;
    Poly b = random_poly(Q, static_cast<int>(rng() % 6), rng) * c;
    a = a.scaled(Rational(1, 1 + static_cast<long>(rng() % 7)));
    EXPECT_EQ(gcd(a, b), gcd<Field>(a, b));
    if (!c.is_zero()) EXPECT_TRUE((gcd(a, b) % c.monic()).is_zero());
  }
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field::prime(6), Error);
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_NO_THROW(Field::prime(101));
}

TEST(Field, RationalFormat) {
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(format_rational(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Factor, Examples) {
  auto f = factor(P(Q, {-1, 0, 0, 0, 1}));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].poly, P(Q, {-1, 1}));
  EXPECT_EQ(f[1].poly, P(Q, {1, 1}));
  EXPECT_EQ(f[2].poly, P(Q, {1, 0, 1}));
  for (const auto& x : f) EXPECT_EQ(x.multiplicity, 1);

  Field F5 = Field::prime(5);
  auto g = factor(P(F5, {1, 0, 1}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].poly, P(F5, {2, 1}));
  EXPECT_EQ(g[1].poly, P(F5, {3, 1}));

  auto h = factor(P(Q, {-7, 1}));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].poly, P(Q, {-7, 1}));
}

TEST(Factor, ErrorsAndCap) {
  EXPECT_THROW(factor(Poly(Q)), Error);
  Poly big = Poly::monomial(Q, 1, 40) + P(Q, {1});
  try {
    factor(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCap);
  }
  EXPECT_NO_THROW(factor(big, FactorOptions{64, 0}));
}

TEST(Factor, Multiplicities) {
  // (x-1)^3 (x^2+1)^2 (x+2)
  Poly f = pow(P(Q, {-1, 1}), 3) * pow(P(Q, {1, 0, 1}), 2) * P(Q, {2, 1});
  auto r = factor(f.scaled(Rational(3, 2)));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].poly, P(Q, {-1, 1}));
  EXPECT_EQ(r[0].multiplicity, 3);
  EXPECT_EQ(r[1].poly, P(Q, {2, 1}));
  EXPECT_EQ(r[2].multiplicity, 2);

  // Over F_3: x^3 - x^... with p-th power structure: (x+1)^3 (x^2+1)^4 (x+1)^1
  Field F3 = Field::prime(3);
  Poly g = pow(P(F3, {1, 1}), 4) * pow(P(F3, {1, 0, 1}), 3);
  auto s = factor(g);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].poly, P(F3, {1, 1}));
  EXPECT_EQ(s[0].multiplicity, 4);
  EXPECT_EQ(s[1].poly, P(F3, {1, 0, 1}));
  EXPECT_EQ(s[1].multiplicity, 3);
}

TEST(Factor, SwinnertonDyerStyleIrreducible) {
  // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
  EXPECT_TRUE(is_irreducible(P(Q, {1, 0, -10, 0, 1})));
  // (x^4 - 10x^2 + 1)(x^2 - 2)
  auto f = factor(P(Q, {1, 0, -10, 0, 1}) * P(Q, {-2, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
}

TEST(FactorProperty, ReproducesInputOverQ) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 1000; ++it) {
    int deg = 1 + static_cast<int>(rng() % 12);
    Poly f = random_poly(Q, deg, rng);
    if (it % 3 == 0) f = random_poly(Q, deg / 2 + 1, rng) * random_poly(Q, deg / 2, rng);
    auto fs = factor(f);
    EXPECT_EQ(expand(Q, f.lead(), fs), f);
    for (const auto& x : fs) EXPECT_TRUE(x.poly.is_monic());
  }
}

TEST(FactorProperty, ReproducesInputOverFp) {
  std::mt19937_64 rng(2);
  for (long p : {2L, 3L, 5L, 101L}) {
    Field k = Field::prime(static_cast<std::uint64_t>(p));
    for (int it = 0; it < 250; ++it) {
      int deg = 1 + static_cast<int>(rng() % 12);
      Poly f = random_poly(k, deg, rng, 50);
      if (it % 4 == 0) f = f * f;
      auto fs = factor(f);
      EXPECT_EQ(expand(k, f.lead(), fs), f);
      for (const auto& x : fs) {
        if (x.poly.degree() > 1) {
          for (long a = 0; a < p; ++a) EXPECT_FALSE(k.is_zero(x.poly.eval(k.from_int(a))));
        }
      }
    }
  }
}

TEST(FactorProperty, IrreducibleByBruteForceOverSmallFields) {
  std::mt19937_64 rng(3);
  for (long p : {2L, 3L}) {
    Field k = Field::prime(static_cast<std::uint64_t>(p));
    for (int it = 0; it < 100; ++it) {
      Poly f = random_poly(k, 2 + static_cast<int>(rng() % 7), rng, 3);
      for (const auto& x : factor(f)) {
        for (int d = 1; 2 * d <= x.poly.degree(); ++d) EXPECT_FALSE(has_factor_of_degree(x.poly, d));
      }
    }
  }
}

TEST(FactorProperty, RationalFactorsReduceToModularFactors) {
  // Independent check over Q: every factor of degree >= 2 has no rational root
  // (rational root theorem enumeration).
  std::mt19937_64 rng(4);
  for (int it = 0; it < 200; ++it) {
    Poly f = random_poly(Q, 2 + static_cast<int>(rng() % 6), rng, 4);
    for (const auto& x : factor(f)) {
      if (x.poly.degree() < 2) continue;
      Integer den = 1;
      for (const auto& c : x.poly.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      Rational scaled0 = x.poly.coeff(0) * den;
      Integer a0 = scaled0.get_num(), an = den;
      for (long num = -64; num <= 64; ++num) {
        for (long d = 1; d <= 8; ++d) {
          if (num != 0 && (a0 % num != 0 || an % d != 0)) continue;
          EXPECT_NE(x.poly.eval(Rational(num, d)), 0);
        }
      }
    }
  }
}

TEST(Resultant, Univariate) {
  // Res(x - a, x - b) = b - a
  EXPECT_EQ(resultant(P(Q, {-2, 1}), P(Q, {-7, 1})), Rational(-5));
  // Res(x^2+1, x^2-2) = prod over roots of (a^2 - 2) = (-3)^2 = 9
  EXPECT_EQ(resultant(P(Q, {1, 0, 1}), P(Q, {-2, 0, 1})), Rational(9));
}

TEST(MinPoly, Examples) {
  ExtField K = ExtField::create(P(Q, {-2, 0, 1}));
  EXPECT_EQ(min_poly(K, K.gen()), P(Q, {-2, 0, 1}));
  ExtField L = ExtField::create(P(Q, {-2, 0, 0, 1}));
  EXPECT_EQ(min_poly(L, P(Q, {0, 0, 1})), P(Q, {-4, 0, 0, 1}));
  EXPECT_EQ(min_poly(L, P(Q, {3})), P(Q, {-3, 1}));
}

TEST(MinPoly, Properties) {
  std::mt19937_64 rng(5);
  for (const Field& k : {Q, Field::prime(5)}) {
    for (int it = 0; it < 50; ++it) {
      Poly m;
      do {
        m = random_poly(k, 2 + static_cast<int>(rng() % 3), rng).monic();
      } while (!is_irreducible(m));
      ExtField K = ExtField::create(m);
      Poly e = random_poly(k, K.degree() - 1, rng);
      Poly mp = min_poly(K, e);
      EXPECT_TRUE(is_irreducible(mp));
      EXPECT_EQ(K.degree() % mp.degree(), 0);
      EXPECT_TRUE(embed(K, mp).eval(K.normalize(e)).is_zero());
    }
  }
}

TEST(ExtField, RejectsReducibleModulus) {
  try {
    ExtField::create(P(Q, {-1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
}

TEST(FactorOverExtension, Examples) {
  ExtField K = ExtField::create(P(Q, {1, 0, 1}));
  auto f = factor_over_extension(P(Q, {1, 0, 1}), K);
  ASSERT_EQ(f.size(), 2u);
  // x + t and x - t
  ExtPoly x = ExtPoly::x(K);
  ExtPoly t = ExtPoly::constant(K, K.gen());
  EXPECT_TRUE((f[0].poly == x - t && f[1].poly == x + t) || (f[0].poly == x + t && f[1].poly == x - t));

  auto g = factor_over_extension(P(Q, {-2, 0, 1}), P(Q, {-3, 0, 1}));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].poly, embed(g[0].poly.field(), P(Q, {-2, 0, 1})));

  auto h = factor_over_extension(P(Q, {5, 1}), K);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].poly.degree(), 1);
}

TEST(FactorOverExtension, ProductCheck) {
  std::mt19937_64 rng(6);
  for (const Field& k : {Q, Field::prime(5), Field::prime(2)}) {
    for (int it = 0; it < 20; ++it) {
      Poly m;
      do {
        m = random_poly(k, 2 + static_cast<int>(rng() % 2), rng).monic();
      } while (!is_irreducible(m));
      ExtField K = ExtField::create(m);
      Poly f = random_poly(k, 1 + static_cast<int>(rng() % 4), rng);
      auto fs = factor_over_extension(f, K);
      ExtPoly prod = ExtPoly::constant(K, K.embed(f.lead()));
      for (const auto& x : fs) {
        for (int i = 0; i < x.multiplicity; ++i) prod *= x.poly;
        EXPECT_TRUE(x.poly.is_monic());
      }
      EXPECT_EQ(prod, embed(K, f));
    }
  }
  // x^3 - 2 over Q(cbrt 2): (x - t)(x^2 + t x + t^2)
  ExtField L = ExtField::create(P(Q, {-2, 0, 0, 1}));
  auto r = factor_over_extension(P(Q, {-2, 0, 0, 1}), L);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].poly.degree(), 1);
  EXPECT_EQ(r[1].poly.degree(), 2);
  // x^2 + 1 over F_{3^2} = F_3[t]/(t^2+1) splits.
  Field F3 = Field::prime(3);
  auto s = factor_over_extension(P(F3, {1, 0, 1}), P(F3, {1, 0, 1}));
  EXPECT_EQ(s.size(), 2u);
}

TEST(Linalg, NullspaceAndSolve) {
  Matrix m(Q, 2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  auto ns = nullspace(m);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(vec_is_zero(m.apply(v)));
  EXPECT_EQ(rank(m), 1);
  EXPECT_FALSE(solve(m, Vec{Rational(1), Rational(1)}).has_value());
  auto x = solve(m, Vec{Rational(1), Rational(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (Vec{Rational(1), Rational(2)}));
  Matrix s(Q, 2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(1, 0) = 3; s.at(1, 1) = 4;
  EXPECT_EQ(det(s), Rational(-2));
}
