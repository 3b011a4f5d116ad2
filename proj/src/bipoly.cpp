#include "zc/bipoly.hpp"

#include <algorithm>
#include <functional>

#include "zc/error.hpp"

namespace zc {

namespace {
constexpr int kInternalCap = 1 << 20;
}

BiPoly::BiPoly(Field k, std::vector<Poly> y_coeffs) : k_(k), c_(std::move(y_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_x(const Poly& p) { return BiPoly(p.field(), {p}); }

BiPoly BiPoly::from_y(const Poly& p) {
  std::vector<Poly> c;
  for (const auto& a : p.coeffs()) c.push_back(Poly::constant(p.field(), a));
  return BiPoly(p.field(), std::move(c));
}

BiPoly BiPoly::monomial(const Field& k, const Rational& c, int i, int j) {
  std::vector<Poly> cs(static_cast<std::size_t>(j) + 1, Poly(k));
  cs.back() = Poly::monomial(k, k.normalize(c), i);
  return BiPoly(k, std::move(cs));
}

int BiPoly::deg_x() const {
  int d = c_.empty() ? -1 : 0;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

Poly BiPoly::coeff_y(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return Poly(k_);
  return c_[static_cast<std::size_t>(j)];
}

Poly BiPoly::eval_x(const Rational& a) const {
  std::vector<Rational> c;
  for (const auto& p : c_) c.push_back(p.eval(a));
  return Poly(k_, std::move(c));
}

Poly BiPoly::eval_y(const Rational& b) const {
  Poly r(k_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r.scaled(b) + *it;
  return r;
}

BiPoly BiPoly::swap() const {
  const int dx = deg_x();
  std::vector<Poly> out;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Rational> c;
    for (const auto& p : c_) c.push_back(p.coeff(i));
    out.emplace_back(k_, std::move(c));
  }
  return BiPoly(k_, std::move(out));
}

BiPoly BiPoly::shift_x(const Rational& a) const {
  const Poly lin = poly_from_ints(k_, {0, 1}) + Poly::constant(k_, k_.normalize(a));
  std::vector<Poly> out;
  for (const auto& p : c_) out.push_back(p.compose(lin));
  return BiPoly(k_, std::move(out));
}

BiPoly BiPoly::derivative_y() const {
  std::vector<Poly> out;
  for (std::size_t j = 1; j < c_.size(); ++j) out.push_back(c_[j].scaled(k_.from_int(static_cast<long>(j))));
  return BiPoly(k_, std::move(out));
}

BiPoly BiPoly::scaled(const Rational& s) const {
  std::vector<Poly> out;
  for (const auto& p : c_) out.push_back(p.scaled(s));
  return BiPoly(k_, std::move(out));
}

Poly BiPoly::content_x() const {
  Poly g(k_);
  for (const auto& p : c_) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::div_x(const Poly& p) const {
  std::vector<Poly> out;
  for (const auto& c : c_) {
    auto [q, r] = divrem(c, p);
    ensure(r.is_zero(), "inexact division by an x-polynomial");
    out.push_back(std::move(q));
  }
  return BiPoly(k_, std::move(out));
}

BiPoly BiPoly::normalized() const {
  if (c_.empty()) return *this;
  return scaled(k_.inv(c_.back().lead()));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<Poly> out(std::max(a.c_.size(), b.c_.size()), Poly(a.k_));
  for (std::size_t j = 0; j < a.c_.size(); ++j) out[j] = a.c_[j];
  for (std::size_t j = 0; j < b.c_.size(); ++j) out[j] += b.c_[j];
  return BiPoly(a.k_, std::move(out));
}

BiPoly operator-(const BiPoly& a) {
  std::vector<Poly> out;
  for (const auto& p : a.c_) out.push_back(-p);
  return BiPoly(a.k_, std::move(out));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly(a.k_);
  std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.k_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(a.k_, std::move(out));
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "bivariate division by zero");
  const Field& k = a.field();
  if (a.is_zero()) return BiPoly(k);
  if (a.deg_y() < b.deg_y() || a.deg_x() < b.deg_x()) return std::nullopt;
  std::vector<Poly> q(static_cast<std::size_t>(a.deg_y() - b.deg_y()) + 1, Poly(k));
  BiPoly r = a;
  const Poly lb = b.lead_y();
  while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
    auto [qc, rem] = divrem(r.lead_y(), lb);
    if (!rem.is_zero()) return std::nullopt;
    const int shift = r.deg_y() - b.deg_y();
    std::vector<Poly> term(static_cast<std::size_t>(shift) + 1, Poly(k));
    term.back() = qc;
    q[static_cast<std::size_t>(shift)] = qc;
    const int before = r.deg_y();
    r = r - BiPoly(k, std::move(term)) * b;
    ensure(r.is_zero() || r.deg_y() < before, "bivariate division failed to cancel");
  }
  if (!r.is_zero()) return std::nullopt;
  return BiPoly(k, std::move(q));
}

namespace {

BiPoly pseudo_rem(BiPoly a, const BiPoly& b) {
  const Field& k = a.field();
  const BiPoly lb = BiPoly::from_x(b.lead_y());
  while (!a.is_zero() && a.deg_y() >= b.deg_y()) {
    std::vector<Poly> term(static_cast<std::size_t>(a.deg_y() - b.deg_y()) + 1, Poly(k));
    term.back() = a.lead_y();
    a = lb * a - BiPoly(k, std::move(term)) * b;
  }
  return a;
}

BiPoly primitive_part(const BiPoly& a) { return a.div_x(a.content_x()); }

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Field& k = a.field();
  Poly cg = gcd(a.content_x(), b.content_x());
  BiPoly A = primitive_part(a), B = primitive_part(b);
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_y() == 0) {
      A = BiPoly::from_x(Poly::constant(k, k.one()));
      break;
    }
    BiPoly R = pseudo_rem(A, B);
    A = std::move(B);
    B = R.is_zero() ? R : primitive_part(R);
  }
  return (BiPoly::from_x(cg) * A).normalized();
}

std::string to_string(const BiPoly& p, const std::string& x, const std::string& y) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.deg_y(); j >= 0; --j) {
    const Poly c = p.coeff_y(j);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = "(" + to_string(c, x) + ")";
    if (j == 0) out += cs;
    else out += cs + "*" + y + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out;
}

namespace {

using Series = std::vector<Poly>;  // coefficients of x^k, each a polynomial in y

Series to_series(const BiPoly& f) {
  const Field& k = f.field();
  Series s;
  for (int i = 0; i <= f.deg_x(); ++i) {
    std::vector<Rational> c;
    for (int j = 0; j <= f.deg_y(); ++j) c.push_back(f.coeff(i, j));
    s.emplace_back(k, std::move(c));
  }
  return s;
}

BiPoly from_series(const Field& k, const Series& s) {
  std::vector<Poly> ycoeffs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (int j = 0; j <= s[i].degree(); ++j) {
      if (ycoeffs.size() <= static_cast<std::size_t>(j)) ycoeffs.resize(static_cast<std::size_t>(j) + 1, Poly(k));
      ycoeffs[static_cast<std::size_t>(j)] += Poly::monomial(k, s[i].coeff(j), static_cast<int>(i));
    }
  }
  return BiPoly(k, std::move(ycoeffs));
}

Series mul_trunc(const Series& a, const Series& b, std::size_t n, const Field& k) {
  Series c(n, Poly(k));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

template <class Visit>
void for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > n) return;
  while (true) {
    if (visit(idx)) return;
    std::size_t kk = size;
    while (kk > 0 && idx[kk - 1] == n - size + kk - 1) --kk;
    if (kk == 0) return;
    ++idx[kk - 1];
    for (std::size_t j = kk; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Squarefree primitive s with no univariate factors, characteristic zero.
std::vector<BiPoly> hensel_factor(const BiPoly& s_in) {
  if (s_in.deg_y() <= 1 || s_in.deg_x() <= 1) return {s_in};
  if (s_in.deg_y() > s_in.deg_x()) {
    std::vector<BiPoly> out;
    for (const auto& g : hensel_factor(s_in.swap())) out.push_back(g.swap());
    return out;
  }
  const Field& k = s_in.field();
  const FactorOptions big{kInternalCap, 0};

  // Evaluation point with squarefree specialization and fewest factors.
  Rational best_x0;
  std::vector<Factor> best;
  int good = 0;
  for (int step = 0; step < 200 && good < 3; ++step) {
    long v = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    Rational x0(v);
    if (k.is_zero(s_in.lead_y().eval(x0))) continue;
    Poly spec = s_in.eval_x(x0);
    if (gcd(spec, spec.derivative()).degree() > 0) continue;
    auto fs = factor(spec, big);
    if (good == 0 || fs.size() < best.size()) {
      best = fs;
      best_x0 = x0;
    }
    ++good;
    if (best.size() == 1) break;
  }
  ensure(good > 0, "no squarefree specialization found");
  if (best.size() == 1) return {s_in};

  const BiPoly t = s_in.shift_x(best_x0);
  const Poly ell = t.lead_y();
  const std::size_t N = static_cast<std::size_t>(t.deg_x() + ell.degree() + 1);
  const std::size_t r = best.size();
  std::vector<Poly> u;
  for (const auto& f : best) u.push_back(f.poly);

  // Monic target: t / ell as a power series in x.
  std::vector<Rational> linv(N);
  const Rational l0inv = k.inv(ell.coeff(0));
  for (std::size_t i = 0; i < N; ++i) {
    Rational acc = i == 0 ? k.one() : k.zero();
    for (std::size_t j = 1; j <= i; ++j) acc = k.sub(acc, k.mul(ell.coeff(static_cast<int>(j)), linv[i - j]));
    linv[i] = k.mul(acc, l0inv);
  }
  const Series ts = to_series(t);
  Series target(N, Poly(k));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= i && j < ts.size(); ++j) target[i] += ts[j].scaled(linv[i - j]);
  }

  std::vector<Poly> inv_cof(r, Poly(k));
  for (std::size_t i = 0; i < r; ++i) {
    Poly cof = Poly::constant(k, k.one());
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) cof = (cof * u[j]) % u[i];
    }
    auto x = xgcd(cof, u[i]);
    ensure(x.g.degree() == 0, "specialized factors not coprime");
    inv_cof[i] = x.s % u[i];
  }

  std::vector<Series> U(r);
  for (std::size_t i = 0; i < r; ++i) U[i] = Series{u[i]};
  for (std::size_t step = 1; step < N; ++step) {
    Series prod{Poly::constant(k, k.one())};
    for (std::size_t i = 0; i < r; ++i) prod = mul_trunc(prod, U[i], step + 1, k);
    Poly e = target[step] - (step < prod.size() ? prod[step] : Poly(k));
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      U[i].resize(step + 1, Poly(k));
      U[i][step] = (e * inv_cof[i]) % u[i];
    }
  }

  std::vector<BiPoly> out;
  std::vector<std::size_t> remaining(r);
  for (std::size_t i = 0; i < r; ++i) remaining[i] = i;
  BiPoly cur = t;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    for_each_subset(remaining.size(), size, [&](const std::vector<std::size_t>& idx) {
      Series cand;
      for (int i = 0; i <= cur.lead_y().degree(); ++i) {
        cand.push_back(Poly::constant(k, cur.lead_y().coeff(i)));
      }
      for (std::size_t i : idx) cand = mul_trunc(cand, U[remaining[i]], N, k);
      BiPoly g = from_series(k, cand);
      if (g.is_zero()) return false;
      g = primitive_part(g);
      if (g.deg_y() < 1) return false;
      auto q = exact_div(cur, g);
      if (!q) return false;
      out.push_back(g);
      cur = *q;
      for (std::size_t j = idx.size(); j-- > 0;) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx[j]));
      found = true;
      return true;
    });
    if (!found) ++size;
  }
  out.push_back(cur);
  for (auto& g : out) g = g.shift_x(k.neg(best_x0));
  return out;
}

std::vector<BiFactor> yun_bivariate(const BiPoly& g) {
  std::vector<BiFactor> out;
  BiPoly d = g.derivative_y();
  BiPoly a0 = gcd(g, d);
  BiPoly b = *exact_div(g, a0);
  BiPoly c = *exact_div(d, a0);
  BiPoly e = c - b.derivative_y();
  for (int i = 1; b.deg_y() > 0; ++i) {
    BiPoly a = gcd(b, e);
    b = *exact_div(b, a);
    c = *exact_div(e, a);
    e = c - b.derivative_y();
    if (a.deg_y() > 0) out.push_back({a, i});
  }
  return out;
}

// Kronecker substitution x -> z, y -> z^D over a finite field.
std::vector<BiPoly> kronecker_factor(const BiPoly& g) {
  const Field& k = g.field();
  const int D = g.deg_x() + 1;
  std::vector<Rational> kc(static_cast<std::size_t>(g.deg_x() + g.deg_y() * D) + 1, Rational(0));
  for (int j = 0; j <= g.deg_y(); ++j) {
    for (int i = 0; i <= g.coeff_y(j).degree(); ++i) kc[static_cast<std::size_t>(i + j * D)] = g.coeff(i, j);
  }
  auto image = factor(Poly(k, std::move(kc)), FactorOptions{kInternalCap, 0});
  std::vector<Poly> pieces;
  std::vector<int> avail;
  for (const auto& f : image) {
    pieces.push_back(f.poly);
    avail.push_back(f.multiplicity);
  }
  auto inverse = [&](const Poly& p) {
    std::vector<Poly> ycoeffs;
    for (int m = 0; m <= p.degree(); ++m) {
      if (k.is_zero(p.coeff(m))) continue;
      const int i = m % D, j = m / D;
      if (ycoeffs.size() <= static_cast<std::size_t>(j)) ycoeffs.resize(static_cast<std::size_t>(j) + 1, Poly(k));
      ycoeffs[static_cast<std::size_t>(j)] += Poly::monomial(k, p.coeff(m), i);
    }
    return BiPoly(k, std::move(ycoeffs));
  };
  auto remaining_degree = [&] {
    int d = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) d += avail[i] * pieces[i].degree();
    return d;
  };

  std::vector<BiPoly> out;
  BiPoly cur = g;
  int t = 1;
  while (2 * t <= remaining_degree()) {
    std::vector<int> use(pieces.size(), 0);
    bool found = false;
    // Depth-first search over sub-multisets of total degree t.
    std::function<void(std::size_t, int)> dfs = [&](std::size_t idx, int left) {
      if (found) return;
      if (left == 0) {
        Poly prod = Poly::constant(k, k.one());
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          if (use[i] > 0) prod *= pow(pieces[i], use[i]);
        }
        BiPoly cand = inverse(prod);
        if (cand.deg_y() < 1 && cand.deg_x() < 1) return;
        auto q = exact_div(cur, cand);
        if (!q) return;
        out.push_back(cand);
        cur = *q;
        for (std::size_t i = 0; i < pieces.size(); ++i) avail[i] -= use[i];
        found = true;
        return;
      }
      if (idx == pieces.size()) return;
      const int dp = pieces[idx].degree();
      for (int c = std::min(avail[idx], left / dp); c >= 0; --c) {
        use[idx] = c;
        dfs(idx + 1, left - c * dp);
        if (found) return;
      }
      use[idx] = 0;
    };
    dfs(0, t);
    if (!found) ++t;
  }
  if (cur.deg_y() > 0 || cur.deg_x() > 0) out.push_back(cur);
  return out;
}

bool bi_less(const BiPoly& a, const BiPoly& b) {
  if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
  if (a.deg_x() != b.deg_x()) return a.deg_x() < b.deg_x();
  for (int j = 0; j <= a.deg_y(); ++j) {
    auto c = canonical_compare(a.coeff_y(j), b.coeff_y(j));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<BiFactor> factor(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
  const Field& k = f.field();
  const FactorOptions big{kInternalCap, 0};
  std::vector<BiFactor> raw;
  Poly cx = f.content_x();
  for (const auto& p : factor(cx, big)) raw.push_back({BiPoly::from_x(p.poly), p.multiplicity});
  BiPoly g = f.div_x(cx).swap();
  Poly cy = g.content_x();
  for (const auto& p : factor(cy, big)) raw.push_back({BiPoly::from_y(p.poly), p.multiplicity});
  g = g.div_x(cy).swap();
  if (g.deg_y() > 0) {
    if (k.is_rationals()) {
      for (const auto& part : yun_bivariate(g)) {
        for (const auto& h : hensel_factor(part.poly)) raw.push_back({h, part.multiplicity});
      }
    } else {
      for (const auto& h : kronecker_factor(g)) raw.push_back({h, 1});
    }
  }
  for (auto& r : raw) r.poly = r.poly.normalized();
  std::sort(raw.begin(), raw.end(), [](const BiFactor& a, const BiFactor& b) { return bi_less(a.poly, b.poly); });
  std::vector<BiFactor> out;
  for (auto& r : raw) {
    if (!out.empty() && out.back().poly == r.poly) out.back().multiplicity += r.multiplicity;
    else out.push_back(std::move(r));
  }
  return out;
}

}  // namespace zc
