#pragma once

#include <algorithm>
#include <concepts>
#include <span>
#include <utility>
#include <vector>

#include "zc/error.hpp"
#include "zc/field.hpp"

namespace zc {

/// Dense univariate polynomial over a field K (coefficients lowest degree
/// first, trailing coefficient nonzero unless zero). K supplies the element
/// arithmetic: Field for k itself, ExtField for simple extensions k[t]/(m).
template <class K>
class UPoly {
 public:
  using Elem = typename K::Elem;

  UPoly() requires std::default_initializable<K> = default;
  explicit UPoly(K field) : field_(std::move(field)) {}
  UPoly(K field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& e : c_) e = field_.normalize(e);
    trim();
  }

  static UPoly constant(const K& field, const Elem& value) {
    return UPoly(field, std::vector<Elem>{value});
  }
  static UPoly monomial(const K& field, const Elem& value, int degree) {
    std::vector<Elem> c(static_cast<std::size_t>(degree) + 1, field.zero());
    c.back() = value;
    return UPoly(field, std::move(c));
  }
  static UPoly x(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)]
                                                        : field_.zero();
  }
  const Elem& lead() const {
    ensure(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }

  Elem eval(const Elem& a) const {
    Elem r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, a), *it);
    return r;
  }

  UPoly monic() const {
    if (c_.empty()) return *this;
    Elem inv = field_.inv(c_.back());
    return scaled(inv);
  }
  UPoly scaled(const Elem& s) const {
    if (field_.is_zero(s)) return UPoly(field_);
    UPoly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(field_.mul(e, s));
    r.trim();
    return r;
  }
  UPoly derivative() const {
    UPoly r(field_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.c_.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
    }
    r.trim();
    return r;
  }
  /// Substitution p(q(x)).
  UPoly compose(const UPoly& inner) const {
    UPoly r(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(field_, *it);
    return r;
  }
  /// Multiplication by x^k.
  UPoly shifted(int k) const {
    if (c_.empty()) return *this;
    UPoly r(field_);
    r.c_.assign(static_cast<std::size_t>(k), field_.zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    const K& f = a.field_;
    UPoly r(f);
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= a.c_.size()) r.c_.push_back(b.c_[i]);
      else if (i >= b.c_.size()) r.c_.push_back(a.c_[i]);
      else r.c_.push_back(f.add(a.c_[i], b.c_[i]));
    }
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r(a.field_);
    r.c_.reserve(a.c_.size());
    for (const auto& e : a.c_) r.c_.push_back(a.field_.neg(e));
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    const K& f = a.field_;
    if (a.c_.empty() || b.c_.empty()) return UPoly(f);
    UPoly r(f);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
      }
    }
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  /// Division with remainder; b must be nonzero.
  friend std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    const K& f = a.field_;
    if (b.is_zero()) fail(ErrorCode::ZeroInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(f), a};
    std::vector<Elem> rem = a.c_;
    const int db = b.degree();
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    const bool monic_b = b.is_monic();
    Elem lead_inv = monic_b ? f.one() : f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
      const Elem& top = rem[static_cast<std::size_t>(i)];
      if (f.is_zero(top)) continue;
      Elem q = monic_b ? top : f.mul(top, lead_inv);
      for (int j = 0; j <= db; ++j) {
        auto& slot = rem[static_cast<std::size_t>(i - db + j)];
        slot = f.sub(slot, f.mul(q, b.c_[static_cast<std::size_t>(j)]));
      }
      quo[static_cast<std::size_t>(i - db)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    UPoly qp(f), rp(f);
    qp.c_ = std::move(quo);
    rp.c_ = std::move(rem);
    qp.trim();
    rp.trim();
    return {std::move(qp), std::move(rp)};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divrem(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_{};
  std::vector<Elem> c_;
};

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
struct XgcdResult {
  UPoly<K> g, s, t;  // g = s*a + t*b, g monic (or zero)
};

template <class K>
XgcdResult<K> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  const K& f = a.field();
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(f, f.one()), s1(f);
  UPoly<K> t0(f), t1 = UPoly<K>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m for e >= 0.
template <class K>
UPoly<K> powmod(const UPoly<K>& base, const Integer& e, const UPoly<K>& m) {
  const K& f = base.field();
  UPoly<K> result = UPoly<K>::constant(f, f.one()) % m;
  UPoly<K> b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

/// Resultant of two univariate polynomials over a field (Euclidean algorithm).
template <class K>
typename K::Elem resultant(const UPoly<K>& a, const UPoly<K>& b) {
  const K& f = a.field();
  if (a.is_zero() || b.is_zero()) return f.zero();
  UPoly<K> p = a, q = b;
  auto res = f.one();
  while (q.degree() > 0) {
    int dp = p.degree(), dq = q.degree();
    auto r = p % q;
    if (r.is_zero()) return f.zero();
    // res(p, q) = (-1)^{dp dq} lc(q)^{dp - dr} res(q, r)
    if ((dp % 2 == 1) && (dq % 2 == 1)) res = f.neg(res);
    auto lc = q.lead();
    for (int i = 0; i < dp - r.degree(); ++i) res = f.mul(res, lc);
    p = std::move(q);
    q = std::move(r);
  }
  // q is a nonzero constant: res(p, c) = c^{deg p}
  auto c = q.lead();
  for (int i = 0; i < p.degree(); ++i) res = f.mul(res, c);
  return res;
}

}  // namespace zc
