#pragma once

#include <random>
#include <utility>

#include "zc/corr.hpp"
#include "zc/cycles.hpp"
#include "zc/ratequiv.hpp"

namespace zc {

// Seeded generators for property checks. Coefficients are small integers
// (or small fractions over Q), so instances stay at desk scale.

Poly random_poly(const Field& k, int deg, std::mt19937_64& rng, long range = 3);
Rational random_rational(const Field& k, std::mt19937_64& rng, long range = 5);
/// Closed point of degree <= max_deg, infinity with probability 1/8.
ClosedPoint random_point(const Field& k, std::mt19937_64& rng, int max_deg = 2);
ZeroCycle random_cycle(const Field& k, std::mt19937_64& rng, int terms = 3, int max_deg = 2);
/// Nonzero degree-0 cycle on 2..max_support distinct points.
ZeroCycle random_degree0(const Field& k, std::mt19937_64& rng, int max_support, int max_deg);
MoebiusMap random_moebius(const Field& k, std::mt19937_64& rng);
/// Coprime (num, den) of degree between 1 and max_deg as a map.
std::pair<Poly, Poly> random_map(const Field& k, std::mt19937_64& rng, int max_deg = 3);
RationalFunction random_function(const Field& k, std::mt19937_64& rng, int max_deg = 3);
/// A graph, a transposed graph, a constant correspondence, or a random
/// irreducible form of bidegree at most (2, 2).
PrimeCorrespondence random_prime(const Field& k, std::mt19937_64& rng, int max_deg = 2);
Correspondence random_correspondence(const Field& k, std::mt19937_64& rng, int terms = 2);

}  // namespace zc
