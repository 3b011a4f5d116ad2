#include "zassenhaus.hpp"

#include <algorithm>
#include <random>

#include "nmod.hpp"
#include "zc/error.hpp"

namespace zc::detail {

namespace {

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly reduce_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return reduce_mod(r, m);
}

ZPoly add_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce_mod(r, m);
}

ZPoly sub_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce_mod(r, m);
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (sgn(r[i]) == 0) continue;
    Integer c = r[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  return {reduce_mod(q, m), reduce_mod(r, m)};
}

NPoly to_nmod(const Nmod& nm, const ZPoly& a) {
  NPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = nm.reduce(a[i]);
  trim(r);
  return r;
}

ZPoly from_nmod(const NPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

ZPoly make_monic_mod(const ZPoly& a, const Integer& m) {
  Integer inv;
  ensure(mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t()) != 0, "leading coefficient not invertible");
  ZPoly r = a;
  for (auto& c : r) c *= inv;
  return reduce_mod(r, m);
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Updates g, h, s, t to the same relations modulo mm = m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& mm) {
  ZPoly e = sub_mod(f, mul_mod(g, h, mm), mm);
  auto [q, r] = divrem_monic_mod(mul_mod(s, e, mm), h, mm);
  ZPoly g2 = add_mod(g, add_mod(mul_mod(t, e, mm), mul_mod(q, g, mm), mm), mm);
  ZPoly h2 = add_mod(h, r, mm);
  ZPoly b = sub_mod(add_mod(mul_mod(s, g2, mm), mul_mod(t, h2, mm), mm), ZPoly{Integer(1)}, mm);
  auto [c, d] = divrem_monic_mod(mul_mod(s, b, mm), h2, mm);
  s = sub_mod(s, d, mm);
  t = sub_mod(t, add_mod(mul_mod(t, b, mm), mul_mod(c, g2, mm), mm), mm);
  g = std::move(g2);
  h = std::move(h2);
}

// F = lc(F) * prod facs[lo, hi) mod p; appends monic lifts modulo M = p^(2^j).
void lift_tree(const Nmod& nm, const ZPoly& F, const std::vector<NPoly>& facs, std::size_t lo,
               std::size_t hi, const Integer& M, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(make_monic_mod(F, M));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  NPoly gp{nm.reduce(F.back())}, hp{1};
  for (std::size_t i = lo; i < mid; ++i) gp = mul(nm, gp, facs[i]);
  for (std::size_t i = mid; i < hi; ++i) hp = mul(nm, hp, facs[i]);
  NPoly gg, sp, tp;
  xgcd(nm, gp, hp, gg, sp, tp);
  ensure(gg == NPoly{1}, "modular factors not coprime");
  ZPoly g = from_nmod(gp), h = from_nmod(hp), s = from_nmod(sp), t = from_nmod(tp);
  Integer m(static_cast<unsigned long>(nm.p()));
  while (m < M) {
    m *= m;
    hensel_step(reduce_mod(F, m), g, h, s, t, m);
  }
  lift_tree(nm, g, facs, lo, mid, M, out);
  lift_tree(nm, h, facs, mid, hi, M, out);
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  ZPoly r = reduce_mod(a, m);
  for (auto& c : r) {
    if (c > half) c -= m;
  }
  ztrim(r);
  return r;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (a.size() < b.size()) return false;
  if (sgn(a[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[i - db] = c;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return false;
  }
  ztrim(q);
  quotient = std::move(q);
  return true;
}

std::vector<unsigned> candidate_primes(const ZPoly& f) {
  std::vector<unsigned> out;
  for (unsigned p = 3; out.size() < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Nmod nm(p);
    if (nm.reduce(f.back()) == 0) continue;
    NPoly fp = to_nmod(nm, f);
    if (!is_squarefree(nm, fp)) continue;
    out.push_back(p);
  }
  ensure(!out.empty(), "no suitable prime for modular factorization");
  return out;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  unsigned best_p = 0;
  int best_count = n + 1;
  for (unsigned p : candidate_primes(f)) {
    Nmod nm(p);
    int c = count_factors_squarefree(nm, to_nmod(nm, f));
    if (c < best_count) {
      best_count = c;
      best_p = p;
    }
    if (c == 1) break;
  }
  if (best_count == 1) return {f};

  Nmod nm(best_p);
  std::mt19937_64 rng(best_p);
  std::vector<NPoly> modular;
  for (auto& fac : factor(nm, to_nmod(nm, f), rng)) modular.push_back(std::move(fac.poly));

  Integer maxabs = 0;
  for (const auto& c : f) maxabs = std::max<Integer>(maxabs, abs(c));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
  root += 1;
  Integer bound = root * maxabs * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  Integer M(best_p);
  while (M <= 2 * bound) M *= M;

  std::vector<ZPoly> lifted;
  lift_tree(nm, reduce_mod(f, M), modular, 0, modular.size(), M, lifted);

  std::vector<ZPoly> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly g{rest.back()};
      for (std::size_t i : idx) g = mul_mod(g, lifted[remaining[i]], M);
      g = symmetric(g, M);
      ZPoly quotient;
      if (!g.empty()) {
        g = primitive(g);
        if (exact_divide(rest, g, quotient)) {
          out.push_back(g);
          rest = std::move(quotient);
          for (std::size_t k = s; k-- > 0;) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx[k]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  out.push_back(primitive(rest));
  return out;
}

}  // namespace zc::detail
