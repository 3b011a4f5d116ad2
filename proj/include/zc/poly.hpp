#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "zc/field.hpp"
#include "zc/upoly.hpp"

namespace zc {

using Poly = UPoly<Field>;

struct Factor {
  Poly poly;
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorOptions {
  int degree_cap = 32;     // applies to inputs over Q
  std::uint64_t seed = 0;  // equal-degree splitting and prime selection
};

/// Builds a polynomial from small integer coefficients, lowest degree first.
Poly poly_from_ints(const Field& k, std::initializer_list<long> coeffs);
Poly poly_from_ints(const Field& k, const std::vector<long>& coeffs);

/// Monic gcd. Over Q this runs a primitive remainder sequence over Z, which
/// keeps coefficient growth in check; over F_p it defers to the Euclidean one.
Poly gcd(const Poly& a, const Poly& b);

/// Canonical order: by degree, then lexicographically on coefficients from
/// the constant term up (rationals by value, residues as integers).
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return canonical_compare(a, b) < 0; }
};

/// Human-readable form, e.g. "x^2 - 3/2*x + 1".
std::string to_string(const Poly& p, const std::string& var = "x");

/// Monic irreducible factors with multiplicities, sorted canonically. The
/// leading coefficient of p times the product of the factors equals p.
std::vector<Factor> factor(const Poly& p, const FactorOptions& opts = {});
bool is_irreducible(const Poly& p, const FactorOptions& opts = {});

/// Pairwise coprime squarefree parts a_i with p = lc * prod a_i^i.
std::vector<Factor> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

/// Expands lc * prod factor^multiplicity.
Poly expand(const Field& k, const Field::Elem& lc, const std::vector<Factor>& factors);

Poly pow(const Poly& p, int e);

}  // namespace zc
