#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zc/corr.hpp"
#include "zc/extfield.hpp"
#include "zc/ratequiv.hpp"

namespace zc {

/// Sparse homogeneous polynomial in W_0..W_n over k.
class HomForm {
 public:
  using Monomial = std::vector<int>;
  HomForm() = default;
  HomForm(Field k, int nvars) : k_(k), nvars_(nvars) {}
  static HomForm variable_power(const Field& k, int nvars, int var, int exponent);

  const Field& field() const { return k_; }
  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; all terms share it. -1 for the zero form.
  int degree() const;
  Rational coeff(const Monomial& m) const;
  void add(const Monomial& m, const Rational& c);
  /// Sets the listed variables to zero.
  HomForm restrict_zero(const std::vector<int>& vars) const;
  ExtField::Elem eval(const ExtField& K, const std::vector<ExtField::Elem>& point) const;
  friend bool operator==(const HomForm&, const HomForm&) = default;

 private:
  Field k_;
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const HomForm& f);

/// Point of P^n with coordinates in a simple extension K of k, scaled so the
/// first nonzero coordinate is 1.
class PointPn {
 public:
  PointPn() = default;
  /// Throws ZeroInput when all coordinates vanish.
  static PointPn create(const ExtField& K, std::vector<ExtField::Elem> coords);
  /// A point with coordinates in k.
  static PointPn rational(const Field& k, const std::vector<Rational>& coords);

  int dim() const { return static_cast<int>(c_.size()) - 1; }
  const ExtField& field() const { return K_; }
  const std::vector<ExtField::Elem>& coords() const { return c_; }
  bool is_rational() const;
  friend bool operator==(const PointPn& a, const PointPn& b) { return a.K_ == b.K_ && a.c_ == b.c_; }

 private:
  ExtField K_;
  std::vector<ExtField::Elem> c_;
};

std::string to_string(const PointPn& p);

/// Endomorphism of P^n given by n+1 forms of a common degree without common
/// zero. Base-point freeness is certified at construction.
class HomogeneousMap {
 public:
  HomogeneousMap() = default;
  /// Throws Precondition when the forms are not of one degree or freeness
  /// cannot be certified.
  static HomogeneousMap create(std::vector<HomForm> forms);

  const std::vector<HomForm>& forms() const { return f_; }
  int dim() const { return static_cast<int>(f_.size()) - 1; }
  int degree() const { return f_.empty() ? 0 : f_[0].degree(); }
  PointPn apply(const PointPn& p) const;
  /// Certificate text describing why the forms have no common zero.
  const std::string& certificate() const { return cert_; }

 private:
  std::vector<HomForm> f_;
  std::string cert_;
};

/// The point-merging endomorphism (W0^d : W1^d : P_2 : ... : P_n) for two
/// points on {W0 = 0} and off {W1 = 0}. Throws Precondition.
HomogeneousMap merge_endomorphism(const PointPn& p2, const PointPn& p3);

struct MapStep {
  std::string role;
  Poly num, den;
};

struct ReductionCertificate {
  ZeroCycle input;
  std::optional<MoebiusMap> transport;  // applied first when infinity is in the support
  ClosedPoint anchor;                    // in the transported coordinates
  Rational anchor_coeff;
  bool anchor_at_infinity = false;       // fallback when no rational point is free
  std::vector<MapStep> chain;            // factored maps, applied in order
  Poly composite_num, composite_den;     // the single map t -> num/den
  Rational scaling;                      // a = m1 * deg(p1)
  Correspondence theta;                  // (1/a) times the graph of the composite
  bool replay = false;                   // act(theta, input) == [0] - [inf]
};

struct ReduceOptions {
  std::optional<std::uint64_t> anchor_seed;  // random anchor instead of the canonical one
  FactorOptions factor;
};

/// [0] - [inf] over k.
ZeroCycle standard_cycle(const Field& k);

/// Builds theta with act(theta, xi) = [0] - [inf]. Throws ZeroCycleInput or
/// NonzeroDegree.
ReductionCertificate reduce_p1(const ZeroCycle& xi, const ReduceOptions& opts = {});
bool replay(const ReductionCertificate& cert);

/// c = transpose(graph(r)) o theta, so that act(c, xi) = div(r). Throws
/// ConstantFunction for constant r.
Correspondence rational_witness_correspondence(const ZeroCycle& xi, const RationalFunction& r,
                                               const ReduceOptions& opts = {});

struct GenerationEntry {
  ZeroCycle target;
  Correspondence correspondence;
  ZeroCycle produced;
  bool ok = false;
};

struct GenerationReport {
  bool degree_branch = false;  // xi of nonzero degree: constant correspondences
  Rational xi_degree;
  std::vector<GenerationEntry> entries;
  bool all_ok() const;
};

/// For each target eta, a correspondence c with act(c, xi) = eta, replayed.
/// Degree-0 xi requires degree-0 targets (NonzeroDegree otherwise).
GenerationReport verify_socle_generation(const ZeroCycle& xi, const std::vector<ZeroCycle>& targets,
                                         const ReduceOptions& opts = {});

}  // namespace zc
