#include <gtest/gtest.h>

#include <random>

#include "zc/bipoly.hpp"
#include "zc/error.hpp"
#include "zc/forms.hpp"

using namespace zc;

namespace {

const Field Q = Field::rationals();

Poly P(const Field& k, std::initializer_list<long> c) { return poly_from_ints(k, c); }

// sum c[j] * y^j with c[j] polynomials in x
BiPoly B(const Field& k, std::vector<std::vector<long>> rows) {
  std::vector<Poly> c;
  for (const auto& r : rows) c.push_back(poly_from_ints(k, r));
  return BiPoly(k, std::move(c));
}

Poly random_poly(const Field& k, int deg, std::mt19937_64& rng, long range = 4) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<long> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = dist(rng);
  if (k.is_zero(k.from_int(c.back()))) c.back() = 1;
  return poly_from_ints(k, c);
}

// a(x) y - b(x) with gcd(a, b) = 1: irreducible in k[x, y] by construction.
BiPoly random_linear_in_y(const Field& k, std::mt19937_64& rng) {
  while (true) {
    Poly a = random_poly(k, static_cast<int>(rng() % 3), rng);
    Poly b = random_poly(k, 1 + static_cast<int>(rng() % 3), rng);
    if (a.is_zero() || gcd(a, b).degree() > 0) continue;
    return BiPoly(k, {-b, a});
  }
}

}  // namespace

TEST(BinaryResultant, Examples) {
  // Res_x(x^2 + 1, x^2 - y) = (y + 1)^2
  BiForm F(Q, 2, 0, {Rational(1), Rational(0), Rational(1)});
  BiForm G = BiForm::from_bipoly(B(Q, {{0, 0, 1}, {-1}}), 2, 1);
  BinaryForm r = resultant_binary(F, G);
  EXPECT_EQ(r.degree(), 2);
  EXPECT_EQ(r.dehomogenize(), P(Q, {1, 2, 1}));

  // Res_x(x - a, x - b) = b - a
  BiForm La = BiForm::from_bipoly(B(Q, {{-2, 1}}), 1, 0);
  BiForm Lb = BiForm::from_bipoly(B(Q, {{-7, 1}}), 1, 0);
  EXPECT_EQ(resultant_binary(La, Lb).dehomogenize(), P(Q, {5}));

  // Res_x(X1^2 - X0^2, X1^2 Y0^2 - X0^2 Y1^2) = (Y1^2 - Y0^2)^2
  BiForm U = BiForm::from_bipoly(B(Q, {{-1, 0, 1}}), 2, 0);
  BiForm V = BiForm::from_bipoly(B(Q, {{0, 0, 1}, {}, {-1}}), 2, 2);
  BinaryForm w = resultant_binary(U, V);
  EXPECT_EQ(w.degree(), 4);
  EXPECT_EQ(w.dehomogenize(), P(Q, {1, 0, -2, 0, 1}));
  EXPECT_THROW(resultant_binary(BiForm(Q, 1, 0, {Rational(0), Rational(0)}), U), Error);
}

TEST(BinaryResultant, SymmetryAndMultiplicativity) {
  std::mt19937_64 rng(11);
  for (const Field& k : {Q, Field::prime(5)}) {
    for (int it = 0; it < 40; ++it) {
      auto rnd_form = [&](int d, int e) {
        std::uniform_int_distribution<long> dist(-3, 3);
        std::vector<Rational> m;
        for (int i = 0; i < (d + 1) * (e + 1); ++i) m.push_back(dist(rng));
        m[0] = 1;
        return BiForm(k, d, e, m);
      };
      BiForm F = rnd_form(1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
      BiForm G = rnd_form(1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
      BiForm H = rnd_form(1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
      Poly fg = resultant_binary(F, G).dehomogenize();
      Poly gf = resultant_binary(G, F).dehomogenize();
      if ((F.dx() * G.dx()) % 2 == 1) EXPECT_EQ(fg, -gf);
      else EXPECT_EQ(fg, gf);
      Poly fgh = resultant_binary(F, G * H).dehomogenize();
      EXPECT_EQ(fgh, fg * resultant_binary(F, H).dehomogenize());
    }
  }
}

TEST(BiPoly, ExactDivisionAndGcd) {
  BiPoly a = B(Q, {{0, 0, -1}, {1}});  // y - x^2
  BiPoly b = B(Q, {{1, 1}, {0, 1}});   // x y + x + 1
  BiPoly p = a * b;
  auto q = exact_div(p, a);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, b);
  EXPECT_FALSE(exact_div(p, B(Q, {{1}, {1}})).has_value());
  EXPECT_EQ(gcd(p, a * a), a.normalized());
  EXPECT_EQ(gcd(a, b), BiPoly::from_x(P(Q, {1})));
}

TEST(BiFactor, KnownProductsOverQ) {
  BiPoly a = B(Q, {{0, 0, -1}, {1}});       // y - x^2
  BiPoly b = B(Q, {{1, 0, 1}, {}, {-1}});   // x^2 + 1 - y^2
  BiPoly c = B(Q, {{-2, 0, 1}});            // x^2 - 2
  BiPoly d = B(Q, {{3}, {}, {1}});          // y^2 + 3
  BiPoly f = a * a * b * c * d;
  auto fs = factor(f.scaled(Rational(7, 3)));
  ASSERT_EQ(fs.size(), 4u);
  BiPoly prod = BiPoly::from_x(P(Q, {1}));
  for (const auto& x : fs) {
    for (int i = 0; i < x.multiplicity; ++i) prod *= x.poly;
  }
  EXPECT_EQ(prod.normalized(), f.normalized());
  int total = 0;
  for (const auto& x : fs) total += x.multiplicity;
  EXPECT_EQ(total, 5);
}

TEST(BiFactor, IrreducibleExamples) {
  // y^2 - x^3 - x (elliptic) is irreducible; y^2 - x^2 = (y - x)(y + x).
  EXPECT_EQ(factor(B(Q, {{0, -1, 0, -1}, {}, {1}})).size(), 1u);
  EXPECT_EQ(factor(B(Q, {{0, 0, -1}, {}, {1}})).size(), 2u);
  // x^2 y^2 - 2 is irreducible over Q, y^4 - 4x^2 = (y^2 - 2x)(y^2 + 2x)
  EXPECT_EQ(factor(B(Q, {{-2}, {}, {0, 0, 1}})).size(), 1u);
  EXPECT_EQ(factor(B(Q, {{0, 0, -4}, {}, {}, {}, {1}})).size(), 2u);
  Field F5 = Field::prime(5);
  // y^2 - x^2 - 1 over F_5 is irreducible (smooth conic)
  EXPECT_EQ(factor(B(F5, {{-1, 0, -1}, {}, {1}})).size(), 1u);
  // y^2 + 1 = (y - 2)(y - 3) over F_5
  EXPECT_EQ(factor(B(F5, {{1}, {}, {1}})).size(), 2u);
}

TEST(BiFactor, RandomProductsOfIrreducibles) {
  std::mt19937_64 rng(12);
  for (const Field& k : {Q, Field::prime(5), Field::prime(101)}) {
    for (int it = 0; it < 60; ++it) {
      int n = 1 + static_cast<int>(rng() % 3);
      BiPoly f = BiPoly::from_x(P(k, {1}));
      std::vector<BiPoly> parts;
      for (int i = 0; i < n; ++i) {
        BiPoly g = random_linear_in_y(k, rng);
        if (rng() % 2) g = g.swap();
        parts.push_back(g.normalized());
        f *= g;
      }
      auto fs = factor(f);
      int total = 0;
      BiPoly prod = BiPoly::from_x(P(k, {1}));
      for (const auto& x : fs) {
        total += x.multiplicity;
        for (int i = 0; i < x.multiplicity; ++i) prod *= x.poly;
      }
      EXPECT_EQ(prod.normalized(), f.normalized());
      // Factors linear in x or y with coprime coefficients may still split off
      // univariate content; count only bivariate parts exactly.
      int expected = 0;
      for (const auto& g : parts) {
        for (const auto& x : factor(g)) expected += x.multiplicity;
      }
      EXPECT_EQ(total, expected);
    }
  }
}

TEST(BiFactor, ProductReproducedOnRandomInputs) {
  std::mt19937_64 rng(13);
  for (const Field& k : {Q, Field::prime(5)}) {
    for (int it = 0; it < 60; ++it) {
      std::uniform_int_distribution<long> dist(-3, 3);
      std::vector<std::vector<long>> rows(1 + rng() % 3);
      for (auto& r : rows) {
        r.resize(1 + rng() % 3);
        for (auto& v : r) v = dist(rng);
      }
      BiPoly f = B(k, rows);
      if (f.is_zero()) continue;
      f = f * B(k, {{static_cast<long>(rng() % 3), 1}, {1}});
      auto fs = factor(f);
      BiPoly prod = BiPoly::from_x(P(k, {1}));
      for (const auto& x : fs) {
        for (int i = 0; i < x.multiplicity; ++i) prod *= x.poly;
      }
      EXPECT_EQ(prod.normalized(), f.normalized());
    }
  }
}

TEST(BiFormFactor, InfinityFactors) {
  // X0 * Y0 * (X1 Y1 - X0 Y0) as a (2,2) form: x*y - 1 with degree deficits.
  BiForm f = BiForm::from_bipoly(B(Q, {{-1}, {0, 1}}), 2, 2);
  auto fs = factor(f);
  ASSERT_EQ(fs.size(), 3u);
  int x0 = 0, y0 = 0;
  for (const auto& x : fs) {
    if (x.form.dx() == 1 && x.form.dy() == 0) x0 = x.multiplicity;
    if (x.form.dx() == 0 && x.form.dy() == 1) y0 = x.multiplicity;
  }
  EXPECT_EQ(x0, 1);
  EXPECT_EQ(y0, 1);
}
