#include "nmod.hpp"

#include <algorithm>

#include "zc/error.hpp"

namespace zc::detail {

u64 Nmod::inv(u64 a) const {
  ensure(a % p_ != 0, "inverse of zero mod p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a % p_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<u64>(t);
}

u64 Nmod::reduce(const Integer& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
}

void trim(NPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const NPoly& a) { return static_cast<int>(a.size()) - 1; }

NPoly mul(const Nmod& m, const NPoly& a, const NPoly& b) {
  if (a.empty() || b.empty()) return {};
  const u64 p = m.p();
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  NPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  trim(r);
  return r;
}

NPoly add(const Nmod& m, const NPoly& a, const NPoly& b) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = m.add(x, y);
  }
  trim(r);
  return r;
}

NPoly sub(const Nmod& m, const NPoly& a, const NPoly& b) {
  NPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = m.sub(x, y);
  }
  trim(r);
  return r;
}

NPoly scale(const Nmod& m, const NPoly& a, u64 s) {
  NPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = m.mul(a[i], s);
  trim(r);
  return r;
}

std::pair<NPoly, NPoly> divrem(const Nmod& m, const NPoly& a, const NPoly& b) {
  ensure(!b.empty(), "division by zero polynomial mod p");
  if (a.size() < b.size()) return {NPoly{}, a};
  NPoly r = a;
  const std::size_t db = b.size() - 1;
  NPoly q(a.size() - db, 0);
  const u64 linv = m.inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    u64 c = m.mul(r[i], linv);
    q[i - db] = c;
    u64 nc = m.neg(c);
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = m.add(r[i - db + j], m.mul(nc, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

NPoly rem(const Nmod& m, const NPoly& a, const NPoly& b) {
  if (a.size() < b.size()) return a;
  NPoly r = a;
  const std::size_t db = b.size() - 1;
  const u64 linv = m.inv(b.back());
  const u64 p = m.p();
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    u64 nc = p - m.mul(r[i], linv);
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + nc * b[j]) % p;
  }
  r.resize(db);
  trim(r);
  return r;
}

NPoly monic(const Nmod& m, const NPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(m, a, m.inv(a.back()));
}

NPoly gcd(const Nmod& m, NPoly a, NPoly b) {
  while (!b.empty()) {
    NPoly r = rem(m, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(m, a);
}

void xgcd(const Nmod& m, const NPoly& a, const NPoly& b, NPoly& g, NPoly& s, NPoly& t) {
  NPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(m, r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(m, s0, mul(m, q, s1)));
    t0 = std::exchange(t1, sub(m, t0, mul(m, q, t1)));
  }
  ensure(!r0.empty(), "xgcd of two zero polynomials");
  u64 inv = m.inv(r0.back());
  g = scale(m, r0, inv);
  s = scale(m, s0, inv);
  t = scale(m, t0, inv);
}

NPoly derivative(const Nmod& m, const NPoly& a) {
  NPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(m.mul(a[i], i % m.p()));
  trim(r);
  return r;
}

NPoly powmod(const Nmod& m, const NPoly& base, const Integer& e, const NPoly& mod) {
  NPoly result = rem(m, NPoly{1}, mod);
  NPoly b = rem(m, base, mod);
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    result = rem(m, mul(m, result, result), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(m, mul(m, result, b), mod);
  }
  return result;
}

namespace {

NPoly pth_root(const Nmod& m, const NPoly& a) {
  // Over F_p every coefficient is its own p-th root.
  NPoly r;
  for (std::size_t i = 0; i < a.size(); i += m.p()) r.push_back(a[i]);
  trim(r);
  return r;
}

// Squarefree parts (possibly sharing factors across recursion levels).
void squarefree_parts(const Nmod& m, const NPoly& f, int scale_mult, std::vector<NFactor>& out) {
  if (degree(f) <= 0) return;
  NPoly d = derivative(m, f);
  if (d.empty()) {
    squarefree_parts(m, pth_root(m, f), scale_mult * static_cast<int>(m.p()), out);
    return;
  }
  NPoly c = gcd(m, f, d);
  NPoly w = divrem(m, f, c).first;
  int i = 1;
  while (degree(w) > 0) {
    NPoly y = gcd(m, w, c);
    NPoly fac = divrem(m, w, y).first;
    if (degree(fac) > 0) out.push_back({monic(m, fac), i * scale_mult});
    ++i;
    w = y;
    c = divrem(m, c, y).first;
  }
  if (degree(c) > 0) squarefree_parts(m, pth_root(m, c), scale_mult * static_cast<int>(m.p()), out);
}

std::vector<std::pair<NPoly, int>> distinct_degree(const Nmod& m, NPoly f) {
  std::vector<std::pair<NPoly, int>> out;
  const NPoly x{0, 1};
  NPoly h = rem(m, x, f);
  const Integer p(static_cast<unsigned long>(m.p()));
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(m, h, p, f);
    NPoly g = gcd(m, f, sub(m, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      f = divrem(m, f, g).first;
      h = rem(m, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(m, f), degree(f));
  return out;
}

NPoly random_poly(const Nmod& m, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, m.p() - 1);
  NPoly a(static_cast<std::size_t>(deg) + 1);
  for (auto& c : a) c = dist(rng);
  trim(a);
  return a;
}

void equal_degree(const Nmod& m, const NPoly& f, int d, std::mt19937_64& rng, std::vector<NPoly>& out) {
  if (degree(f) == d) {
    out.push_back(monic(m, f));
    return;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), m.p(), static_cast<unsigned long>(d));
  while (true) {
    NPoly a = random_poly(m, degree(f) - 1, rng);
    if (degree(a) <= 0) continue;
    NPoly b;
    if (m.p() == 2) {
      // Trace map F_{2^d} -> F_2 on each component.
      NPoly t = rem(m, a, f);
      b = t;
      for (int i = 1; i < d; ++i) {
        t = rem(m, mul(m, t, t), f);
        b = add(m, b, t);
      }
    } else {
      b = powmod(m, a, (q - 1) / 2, f);
      b = sub(m, b, NPoly{1});
    }
    NPoly g = gcd(m, f, b);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(m, g, d, rng, out);
      equal_degree(m, divrem(m, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_squarefree(const Nmod& m, const NPoly& f) {
  NPoly d = derivative(m, f);
  if (d.empty()) return degree(f) <= 0;
  return degree(gcd(m, f, d)) == 0;
}

int count_factors_squarefree(const Nmod& m, const NPoly& f) {
  int count = 0;
  for (const auto& [g, d] : distinct_degree(m, monic(m, f))) count += degree(g) / d;
  return count;
}

std::vector<NFactor> factor(const Nmod& m, const NPoly& f, std::mt19937_64& rng) {
  ensure(!f.empty(), "factor of zero polynomial mod p");
  std::vector<NFactor> parts;
  squarefree_parts(m, monic(m, f), 1, parts);
  std::vector<NFactor> out;
  for (const auto& part : parts) {
    for (const auto& [g, d] : distinct_degree(m, part.poly)) {
      std::vector<NPoly> pieces;
      equal_degree(m, g, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
    }
  }
  // Merge repeated irreducibles from different squarefree levels.
  std::sort(out.begin(), out.end(), [](const NFactor& a, const NFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return a.poly < b.poly;
  });
  std::vector<NFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly) merged.back().multiplicity += fac.multiplicity;
    else merged.push_back(std::move(fac));
  }
  return merged;
}

}  // namespace zc::detail
