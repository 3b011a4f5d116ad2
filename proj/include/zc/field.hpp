#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace zc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "num/den" text form (den > 0, lowest terms; integers keep "/1").
std::string format_rational(const Rational& q);
/// Accepts "a", "-a", "a/b"; throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

/// Orders rationals by value; used for canonical term ordering.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool is_prime(std::uint64_t n);

/// The base field k: either Q or F_p (p prime, p < 2^31). Elements of F_p are
/// stored as Rationals with denominator 1 and numerator in [0, p).
class Field {
 public:
  using Elem = Rational;

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  Integer cardinality() const { return Integer(p_); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return normalize(Elem(v)); }
  /// Maps an arbitrary rational into the field (for F_p: num * den^-1 mod p).
  Elem normalize(const Rational& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  /// Element text form: "num/den" over Q, plain residue over F_p.
  std::string format(const Elem& a) const;
  Elem parse(std::string_view text) const;

  std::string name() const;
  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

void require_same_field(const Field& a, const Field& b, const char* where);

}  // namespace zc
