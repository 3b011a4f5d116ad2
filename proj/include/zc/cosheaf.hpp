#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zc/cycles.hpp"
#include "zc/extfield.hpp"
#include "zc/ratequiv.hpp"

namespace zc {

/// Degree of t -> num/den as a map P^1 -> P^1: max(deg num, deg den).
int map_degree(const RationalFunction& f);
/// Throws ConstantFunction.
void require_nonconstant(const RationalFunction& f);

/// The closed point f(q) and the index [kappa(q) : kappa(f(q))].
struct ImagePoint {
  ClosedPoint point;
  int index = 1;
};
ImagePoint image(const RationalFunction& f, const ClosedPoint& q);

/// f_* on cycles: [q] -> [kappa(q) : kappa(f(q))] [f(q)].
ZeroCycle pushforward(const RationalFunction& f, const ZeroCycle& z);
/// f^*[p] with ramification multiplicities.
ZeroCycle pullback(const RationalFunction& f, const ClosedPoint& p, const FactorOptions& opts = {});
ZeroCycle pullback(const RationalFunction& f, const ZeroCycle& z, const FactorOptions& opts = {});

/// Every closed point of P^1 over F_p of degree <= d, infinity last. Throws
/// Precondition over Q.
std::vector<ClosedPoint> closed_points_up_to(const Field& k, int d);
/// Fixed test points over Q: rational points, some chosen so the sample covers
/// have split fibers, and a few points of degree 2 and 3.
std::vector<ClosedPoint> rational_test_points();
/// closed_points_up_to over F_p; over Q, the test points of degree <= d.
std::vector<ClosedPoint> base_points(const Field& k, int d);

struct CoverPiece {
  RationalFunction map;
  std::vector<ClosedPoint> excluded;  // removed from the source
};

/// Finite family of maps P^1 minus finitely many points -> P^1.
class CoverSpec {
 public:
  CoverSpec() = default;
  /// Throws EmptyCover, ConstantFunction or FieldMismatch.
  static CoverSpec create(std::vector<CoverPiece> pieces);
  const Field& field() const { return pieces_.front().map.field(); }
  const std::vector<CoverPiece>& pieces() const { return pieces_; }

 private:
  std::vector<CoverPiece> pieces_;
};

struct CosheafOptions {
  /// Restrict every cycle to rational points (the subcosheaf of k-points).
  bool rational_only = false;
  /// Base points to test over Q; empty means rational_test_points().
  std::vector<ClosedPoint> test_points;
  FactorOptions factor;
};

struct SurjectivityEntry {
  ClosedPoint base;
  int piece = -1;  // -1 marks a gap
  std::optional<ClosedPoint> source;
};

struct SurjectivityReport {
  std::vector<SurjectivityEntry> entries;
  std::vector<ClosedPoint> gaps() const;
  bool gap_free() const { return gaps().empty(); }
};

/// For every base point of degree <= d, a piece and a non-excluded point of
/// its fiber. Throws Precondition for d < 1.
SurjectivityReport surjectivity_check(const CoverSpec& cover, int d, const CosheafOptions& opts = {});

/// Closed point z of U x_X U over (first, second) in the fiber over base.
/// When both legs are finite, z is the factor `component` of the second
/// leg's polynomial over kappa(first); otherwise the fiber is one point.
struct FiberPoint {
  ClosedPoint base, first, second;
  std::optional<ExtPoly> component;
  int degree = 1;        // [kappa(z) : k]
  int first_index = 1;   // [kappa(z) : kappa(first)]
  int second_index = 1;  // [kappa(z) : kappa(second)]

  /// (pr1_* - pr2_*)[z] = first_index [first] - second_index [second].
  ZeroCycle difference() const;
};

std::string to_string(const FiberPoint& z);

/// Closed points of q x_X q' for q over x via f and q' over x via g. Throws
/// NotInImage if f(q) != g(q').
std::vector<FiberPoint> fiber_points(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& q,
                                     const ClosedPoint& q2, const FactorOptions& opts = {});
/// All closed points of U x_X U over x, pair by pair in the order of the
/// fibers. Throws NotInImage if x is missed by f or g.
std::vector<FiberPoint> fiber_product_points(const RationalFunction& f, const RationalFunction& g,
                                             const ClosedPoint& x, const FactorOptions& opts = {});

struct LiftTerm {
  Rational coeff;
  FiberPoint point;
};

struct LiftCertificate {
  ZeroCycle target;
  std::vector<LiftTerm> terms;
  bool replay_ok = false;
};

/// sum coeff * (pr1_* - pr2_*)[z].
ZeroCycle replay(const Field& k, const std::vector<LiftTerm>& terms);

/// Lifts alpha in ker f_* through fiber points, pairing each support point
/// of a fiber with the last point of that fiber. Throws NotInKernel (message
/// carries f_* alpha), or Precondition when rational_only is set and alpha
/// has a point of degree > 1.
LiftCertificate kernel_certificate(const RationalFunction& f, const ZeroCycle& alpha,
                                   const CosheafOptions& opts = {});

struct SampleResult {
  ZeroCycle sample;
  bool in_kernel = false;
  std::optional<ZeroCycle> image;  // f_* sample when not in the kernel
  std::optional<LiftCertificate> certificate;
  std::string error;
};

struct PreimageEntry {
  ClosedPoint base;
  std::optional<ZeroCycle> preimage;  // f_* preimage = [base]
};

struct ExactnessReport {
  std::vector<PreimageEntry> surjectivity;
  std::vector<SampleResult> samples;
  int fiber_points_checked = 0;
  std::vector<FiberPoint> complex_failures;  // f_* (pr1_* - pr2_*)[z] != 0

  bool surjective() const;
  bool kernel_ok() const;
  bool complex_ok() const { return complex_failures.empty(); }
  bool ok() const { return surjective() && kernel_ok() && complex_ok(); }
};

/// Surjectivity of f_* on base points of degree <= d, lift certificates for
/// the samples in ker f_* (others are recorded with their image), and the
/// complex property on every fiber point over the samples' base points.
ExactnessReport verify_exactness(const RationalFunction& f, const std::vector<ZeroCycle>& samples, int d,
                                 const CosheafOptions& opts = {});

/// Random element of ker f_* supported over up to three base points of
/// degree <= d whose fibers have at least two points. Zero if no such fiber
/// exists.
ZeroCycle random_kernel_element(const RationalFunction& f, std::mt19937_64& rng, int d,
                                const CosheafOptions& opts = {});

}  // namespace zc
