#pragma once

#include <map>
#include <string>
#include <vector>

#include "zc/cycles.hpp"
#include "zc/forms.hpp"

namespace zc {

class Correspondence;
struct ComposeReport;

/// Irreducible bihomogeneous form on P^1 x P^1, finite and flat over the
/// first factor: dy >= 1 and no factor in (X0, X1) alone. Normalized.
class PrimeCorrespondence {
 public:
  PrimeCorrespondence() = default;
  const BiForm& form() const { return f_; }
  const Field& field() const { return f_.field(); }
  int dx() const { return f_.dx(); }
  int dy() const { return f_.dy(); }
  friend bool operator==(const PrimeCorrespondence&, const PrimeCorrespondence&) = default;
  friend auto operator<=>(const PrimeCorrespondence& a, const PrimeCorrespondence& b) { return a.f_ <=> b.f_; }

 private:
  explicit PrimeCorrespondence(BiForm f) : f_(std::move(f)) {}
  friend PrimeCorrespondence validate_prime(const BiForm&, const FactorOptions&);
  friend PrimeCorrespondence graph(const Poly&, const Poly&);
  friend class Correspondence;
  friend Correspondence transpose(const Correspondence&);
  friend ComposeReport compose_report(const Correspondence&, const Correspondence&, const FactorOptions&);
  friend Correspondence conjugate(const MoebiusMap&, const MoebiusMap&, const Correspondence&);
  BiForm f_;
};

/// Throws ZeroForm, XOnlyFactor or Reducible (message names a factor).
PrimeCorrespondence validate_prime(const BiForm& f, const FactorOptions& opts = {});

/// Graph of t -> num(t)/den(t): Y1 den_hom(X) - Y0 num_hom(X), bidegree (d, 1).
/// Throws CommonFactor or BothConstant.
PrimeCorrespondence graph(const Poly& num, const Poly& den);

/// The constant correspondence P^1 x [q].
PrimeCorrespondence constant_correspondence(const ClosedPoint& q);

/// Q-linear combination of prime correspondences.
class Correspondence {
 public:
  using Terms = std::map<PrimeCorrespondence, Rational>;

  Correspondence() = default;
  explicit Correspondence(Field k) : k_(k) {}
  Correspondence(const PrimeCorrespondence& p, const Rational& c = Rational(1));

  const Field& field() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PrimeCorrespondence& p, const Rational& c);
  Correspondence scaled(const Rational& s) const;

  friend Correspondence operator+(const Correspondence& a, const Correspondence& b);
  friend Correspondence operator-(const Correspondence& a, const Correspondence& b);
  friend bool operator==(const Correspondence& a, const Correspondence& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

 private:
  Field k_;
  Terms terms_;
};

std::string to_string(const Correspondence& c);

/// Swaps the two factors. Throws XOnlyFactor for primes of bidegree (d, 0)
/// after swapping, i.e. constant correspondences.
Correspondence transpose(const Correspondence& c);

/// Pushforward of the fiber divisor of F over p.
ZeroCycle act(const PrimeCorrespondence& f, const ClosedPoint& p, const FactorOptions& opts = {});
ZeroCycle act(const Correspondence& c, const ZeroCycle& z, const FactorOptions& opts = {});

struct ComposeReport {
  Correspondence value;
  /// Factors of the resultant that depend on X alone; these are dropped.
  std::vector<BiForm> stripped;
};

/// b o a for a: X -> Y and b: Y -> Z, via the resultant eliminating Y.
ComposeReport compose_report(const Correspondence& b, const Correspondence& a, const FactorOptions& opts = {});
/// As compose_report; throws DegenerateFactor if anything had to be stripped.
Correspondence compose(const Correspondence& b, const Correspondence& a, const FactorOptions& opts = {});

/// The form F(mx^-1 X; my^-1 Y), whose zero set is the image of V(F) under
/// mx x my.
BiForm push(const MoebiusMap& mx, const MoebiusMap& my, const BiForm& f);
Correspondence conjugate(const MoebiusMap& mx, const MoebiusMap& my, const Correspondence& c);

}  // namespace zc
