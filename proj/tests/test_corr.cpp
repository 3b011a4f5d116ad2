#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zc/extfield.hpp"

using namespace zc;
using zc::test::P;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

ClosedPoint pt(const Field& k, std::initializer_list<long> c) { return ClosedPoint::finite(P(k, c)); }

BiForm form(const Field& k, int d, int e, std::initializer_list<long> entries) {
  std::vector<Rational> m;
  for (long v : entries) m.push_back(k.from_int(v));
  return BiForm(k, d, e, m);
}

// g o f for rational maps given as (num, den).
std::pair<Poly, Poly> compose_maps(const std::pair<Poly, Poly>& g, const std::pair<Poly, Poly>& f) {
  const Field& k = f.first.field();
  const int dg = std::max(g.first.degree(), g.second.degree());
  Poly n(k), d(k);
  for (int i = 0; i <= dg; ++i) {
    Poly mono = pow(f.first, i) * pow(f.second, dg - i);
    n += mono.scaled(g.first.coeff(i));
    d += mono.scaled(g.second.coeff(i));
  }
  Poly h = gcd(n, d);
  return {n / h, d / h};
}

// Pushforward of [p] along t -> num/den computed pointwise in k(alpha).
ZeroCycle pushforward_oracle(const std::pair<Poly, Poly>& f, const ClosedPoint& p) {
  const Field& k = p.field();
  const auto& [num, den] = f;
  ZeroCycle out(k);
  if (p.is_infinity()) {
    if (num.degree() > den.degree()) out.add(ClosedPoint::infinity(k), 1);
    else if (num.degree() < den.degree()) out.add(ClosedPoint::rational(k, 0), 1);
    else out.add(ClosedPoint::rational(k, k.div(num.lead(), den.lead())), 1);
    return out;
  }
  if ((den % p.poly()).is_zero()) {
    out.add(ClosedPoint::infinity(k), p.degree());
    return out;
  }
  auto K = ExtField::create(p.poly());
  auto a = K.gen();
  auto beta = K.mul(embed(K, num).eval(a), K.inv(embed(K, den).eval(a)));
  Poly mu = min_poly(K, beta);
  Rational mult(p.degree(), mu.degree());
  mult.canonicalize();
  out.add(ClosedPoint::finite(mu), mult);
  return out;
}

Correspondence C(const PrimeCorrespondence& p) { return Correspondence(p); }

}  // namespace

TEST(ValidatePrime, Examples) {
  // Y1 X0 - Y0 X1
  auto diag = validate_prime(form(Q, 1, 1, {0, 1, -1, 0}));
  EXPECT_EQ(diag.dx(), 1);
  EXPECT_EQ(diag.dy(), 1);
  try {
    validate_prime(form(Q, 1, 0, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::XOnlyFactor);
  }
  auto cst = validate_prime(form(Q, 0, 2, {1, 0, 1}));
  EXPECT_EQ(cst.dx(), 0);
  EXPECT_EQ(cst.dy(), 2);
  try {
    validate_prime(form(Q, 0, 2, {-1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Reducible);
  }
  try {
    validate_prime(form(Q, 1, 1, {0, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroForm);
  }
  // X0 * (Y1 - Y0) has the X-only factor X0
  EXPECT_THROW(validate_prime(form(Q, 1, 1, {-1, 1, 0, 0})), Error);
  // scaling does not change the prime
  EXPECT_EQ(validate_prime(form(Q, 1, 1, {0, 3, -3, 0})), diag);
}

TEST(Graph, Examples) {
  // t^2 -> Y1 X0^2 - Y0 X1^2
  EXPECT_EQ(graph(P(Q, {0, 0, 1}), P(Q, {1})).form(), form(Q, 2, 1, {0, 1, 0, 0, -1, 0}));
  EXPECT_EQ(graph(P(Q, {0, 1}), P(Q, {1})).form(), form(Q, 1, 1, {0, 1, -1, 0}));
  // (t - 1)/(t - 3) -> Y1 (X1 - 3 X0) - Y0 (X1 - X0)
  EXPECT_EQ(graph(P(Q, {-1, 1}), P(Q, {-3, 1})).form(), form(Q, 1, 1, {1, -3, -1, 1}));
  EXPECT_THROW(graph(P(Q, {-1, 0, 1}), P(Q, {-1, 1})), Error);
  EXPECT_THROW(graph(P(Q, {2}), P(Q, {3})), Error);
}

TEST(Transpose, Examples) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 50; ++it) {
    Correspondence c = test::random_correspondence(F5, rng);
    bool has_constant = false;
    for (const auto& [p, m] : c.terms()) has_constant = has_constant || p.dx() == 0;
    if (has_constant) {
      EXPECT_THROW(transpose(c), Error);
    } else {
      EXPECT_EQ(transpose(transpose(c)), c);
    }
  }
  EXPECT_THROW(transpose(C(validate_prime(form(Q, 0, 2, {1, 0, 1})))), Error);
  Correspondence id = C(graph(P(Q, {0, 1}), P(Q, {1})));
  EXPECT_EQ(transpose(id), id);
}

TEST(Act, Examples) {
  Correspondence sq = C(graph(P(Q, {0, 0, 1}), P(Q, {1})));
  EXPECT_EQ(act(sq, ZeroCycle::point(pt(Q, {1, 0, 1}))), ZeroCycle::point(pt(Q, {1, 1}), 2));

  Correspondence cst = C(constant_correspondence(pt(Q, {2, 0, 1})));
  ZeroCycle z = ZeroCycle::point(pt(Q, {-1, 1}), 3) + ZeroCycle::point(pt(Q, {2, 0, 1}));
  EXPECT_EQ(act(cst, z), ZeroCycle::point(pt(Q, {2, 0, 1}), 5));

  ZeroCycle pull = act(transpose(sq), ZeroCycle::point(pt(Q, {-1, 1})));
  EXPECT_EQ(pull, ZeroCycle::point(pt(Q, {-1, 1})) + ZeroCycle::point(pt(Q, {1, 1})));

  // infinity is a fixed point of t^2 and 1/t swaps 0 and infinity
  EXPECT_EQ(act(sq, ZeroCycle::point(ClosedPoint::infinity(Q))), ZeroCycle::point(ClosedPoint::infinity(Q)));
  Correspondence inv = C(graph(P(Q, {1}), P(Q, {0, 1})));
  EXPECT_EQ(act(inv, ZeroCycle::point(ClosedPoint::rational(Q, 0))), ZeroCycle::point(ClosedPoint::infinity(Q)));
  EXPECT_EQ(act(transpose(sq), ZeroCycle::point(ClosedPoint::infinity(Q))),
            ZeroCycle::point(ClosedPoint::infinity(Q), 2));
}

TEST(Act, GraphMatchesPointwiseOracle) {
  std::mt19937_64 rng(32);
  for (const Field& k : {Q, F5}) {
    for (int it = 0; it < 300; ++it) {
      auto f = test::random_map(k, rng);
      ClosedPoint p = test::random_point(k, rng, 3);
      EXPECT_EQ(act(C(graph(f.first, f.second)), ZeroCycle::point(p)), pushforward_oracle(f, p));
    }
  }
}

TEST(Act, PullbackMatchesFiberFactorization) {
  std::mt19937_64 rng(33);
  for (const Field& k : {Q, F5}) {
    for (int it = 0; it < 300; ++it) {
      auto [n, d] = test::random_map(k, rng);
      Rational a = test::random_rational(k, rng);
      const int deg = std::max(n.degree(), d.degree());
      Poly fiber = n - d.scaled(a);
      ZeroCycle expected(k);
      for (const auto& x : factor(fiber)) expected.add(ClosedPoint::finite(x.poly), x.multiplicity);
      if (deg > fiber.degree()) expected.add(ClosedPoint::infinity(k), deg - fiber.degree());
      EXPECT_EQ(act(transpose(C(graph(n, d))), ZeroCycle::point(ClosedPoint::rational(k, a))), expected);
    }
  }
}

TEST(Compose, Examples) {
  Correspondence sq = C(graph(P(Q, {0, 0, 1}), P(Q, {1})));
  Correspondence shift = C(graph(P(Q, {1, 1}), P(Q, {1})));
  EXPECT_EQ(compose(shift, sq), C(graph(P(Q, {1, 0, 1}), P(Q, {1}))));
  Correspondence id = C(graph(P(Q, {0, 1}), P(Q, {1})));
  std::mt19937_64 rng(34);
  for (int it = 0; it < 40; ++it) {
    Correspondence a = test::random_correspondence(Q, rng);
    EXPECT_EQ(compose(id, a), a);
  }
  // a constant correspondence after a finite one of relative degree e
  Correspondence cst = C(constant_correspondence(pt(Q, {-2, 0, 1})));
  Correspondence cube = C(graph(P(Q, {0, 0, 0, 1}), P(Q, {1, 1})));
  EXPECT_EQ(compose(cst, cube), cst.scaled(1));
  Correspondence pull = transpose(cube);
  EXPECT_EQ(compose(cst, pull), cst.scaled(3));
}

TEST(Compose, ActionCompatibility) {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 1000; ++it) {
    const Field& k = it % 2 ? Q : F5;
    Correspondence a = test::random_correspondence(k, rng, 1 + static_cast<int>(rng() % 2));
    Correspondence b = test::random_correspondence(k, rng, 1);
    ZeroCycle z = test::random_cycle(k, rng, 2);
    EXPECT_EQ(act(compose(b, a), z), act(b, act(a, z))) << to_string(a) << " ; " << to_string(b);
  }
}

TEST(Compose, Associativity) {
  std::mt19937_64 rng(36);
  for (int it = 0; it < 300; ++it) {
    const Field& k = it % 2 ? Q : F5;
    Correspondence a = C(test::random_prime(k, rng)), b = C(test::random_prime(k, rng)),
                   c = C(test::random_prime(k, rng));
    EXPECT_EQ(compose(compose(c, b), a), compose(c, compose(b, a)));
  }
}

TEST(Compose, GraphFunctoriality) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 200; ++it) {
    const Field& k = it % 2 ? Q : F5;
    auto f = test::random_map(k, rng), g = test::random_map(k, rng);
    auto h = compose_maps(g, f);
    if (h.first.is_constant() && h.second.is_constant()) continue;
    EXPECT_EQ(compose(C(graph(g.first, g.second)), C(graph(f.first, f.second))), C(graph(h.first, h.second)));
  }
}

TEST(Act, ProjectionFormulaAndDegree) {
  std::mt19937_64 rng(38);
  for (int it = 0; it < 300; ++it) {
    const Field& k = it % 2 ? Q : F5;
    auto [n, d] = test::random_map(k, rng);
    Correspondence g = C(graph(n, d));
    ZeroCycle z = test::random_cycle(k, rng);
    const int deg = std::max(n.degree(), d.degree());
    EXPECT_EQ(act(g, act(transpose(g), z)), z.scaled(deg));
    PrimeCorrespondence f = test::random_prime(k, rng);
    EXPECT_EQ(degree(act(C(f), z)), f.dy() * degree(z));
  }
}

TEST(Act, ChartConsistency) {
  std::mt19937_64 rng(39);
  for (int it = 0; it < 300; ++it) {
    const Field& k = it % 2 ? Q : F5;
    Correspondence c = test::random_correspondence(k, rng);
    MoebiusMap m = test::random_moebius(k, rng), n = test::random_moebius(k, rng);
    ZeroCycle z = test::random_cycle(k, rng);
    EXPECT_EQ(act(conjugate(m, n, c), transport(m, z)), transport(n, act(c, z)));
  }
}

TEST(Act, MatchesBinaryResultantOracle) {
  // Pushforward via the resultant eliminating X against the point's form.
  std::mt19937_64 rng(40);
  for (int it = 0; it < 300; ++it) {
    const Field& k = it % 2 ? Q : F5;
    PrimeCorrespondence f = test::random_prime(k, rng, 3);
    ClosedPoint p = test::random_point(k, rng, 4);
    BinaryForm q = p.form();
    BinaryForm r = resultant_binary(BiForm(k, q.degree(), 0, q.coeffs()), f.form());
    ZeroCycle expected(k);
    for (const auto& [x, m] : zeros(r)) expected.add(x, m);
    EXPECT_EQ(act(C(f), ZeroCycle::point(p)), expected);
  }
}
