#include "zc/random.hpp"

#include <algorithm>

#include "zc/error.hpp"

namespace zc {

Poly random_poly(const Field& k, int deg, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<long> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = dist(rng);
  if (k.is_zero(k.from_int(c.back()))) c.back() = 1;
  return poly_from_ints(k, c);
}

Rational random_rational(const Field& k, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  if (k.is_finite()) return k.from_int(num(rng));
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ClosedPoint random_point(const Field& k, std::mt19937_64& rng, int max_deg) {
  if (rng() % 8 == 0) return ClosedPoint::infinity(k);
  while (true) {
    Poly q = random_poly(k, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg)), rng);
    if (is_irreducible(q)) return ClosedPoint::finite(q);
  }
}

ZeroCycle random_cycle(const Field& k, std::mt19937_64& rng, int terms, int max_deg) {
  ZeroCycle z(k);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int i = 0; i < terms; ++i) z.add(random_point(k, rng, max_deg), Rational(c(rng)));
  return z;
}

ZeroCycle random_degree0(const Field& k, std::mt19937_64& rng, int max_support, int max_deg) {
  if (max_support < 2) fail(ErrorCode::Precondition, "a nonzero degree-0 cycle needs two points");
  while (true) {
    int s = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_support - 1));
    std::vector<ClosedPoint> pts;
    for (int tries = 0; static_cast<int>(pts.size()) < s && tries < 50; ++tries) {
      ClosedPoint p = random_point(k, rng, max_deg);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.size() < 2) continue;
    ZeroCycle z(k);
    std::uniform_int_distribution<long> c(1, 9);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) z.add(pts[i], Rational(rng() % 2 ? c(rng) : -c(rng)));
    Rational last = -degree(z) / pts.back().degree();
    if (sgn(last) == 0) continue;
    z.add(pts.back(), last);
    if (!z.is_zero()) return z;
  }
}

MoebiusMap random_moebius(const Field& k, std::mt19937_64& rng) {
  while (true) {
    try {
      return MoebiusMap::create(k, random_rational(k, rng), random_rational(k, rng), random_rational(k, rng),
                                random_rational(k, rng));
    } catch (const Error&) {
    }
  }
}

std::pair<Poly, Poly> random_map(const Field& k, std::mt19937_64& rng, int max_deg) {
  while (true) {
    Poly n = random_poly(k, static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1)), rng);
    Poly d = random_poly(k, static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1)), rng);
    if (n.is_zero() || d.is_zero() || (n.is_constant() && d.is_constant())) continue;
    if (gcd(n, d).degree() > 0) continue;
    return {n, d};
  }
}

RationalFunction random_function(const Field& k, std::mt19937_64& rng, int max_deg) {
  auto [n, d] = random_map(k, rng, max_deg);
  return RationalFunction(n, d);
}

PrimeCorrespondence random_prime(const Field& k, std::mt19937_64& rng, int max_deg) {
  switch (rng() % 4) {
    case 0: {
      auto [n, d] = random_map(k, rng, max_deg);
      return graph(n, d);
    }
    case 1: {
      auto [n, d] = random_map(k, rng, max_deg);
      return transpose(Correspondence(graph(n, d))).terms().begin()->first;
    }
    case 2:
      return constant_correspondence(random_point(k, rng, max_deg));
    default:
      while (true) {
        int d = static_cast<int>(rng() % 2) + 1, e = static_cast<int>(rng() % 2) + 1;
        std::uniform_int_distribution<long> c(-2, 2);
        std::vector<Rational> m;
        for (int i = 0; i < (d + 1) * (e + 1); ++i) m.push_back(k.from_int(c(rng)));
        BiForm f(k, d, e, m);
        try {
          return validate_prime(f);
        } catch (const Error&) {
        }
      }
  }
}

Correspondence random_correspondence(const Field& k, std::mt19937_64& rng, int terms) {
  Correspondence c(k);
  std::uniform_int_distribution<long> v(-2, 2);
  for (int i = 0; i < terms; ++i) c.add(random_prime(k, rng), Rational(v(rng)));
  return c;
}

}  // namespace zc
