#include "zc/extfield.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zc/bareiss.hpp"
#include "zc/error.hpp"
#include "zc/linalg.hpp"

namespace zc {

ExtField ExtField::create(const Poly& modulus, bool check) {
  if (modulus.degree() < 1) fail(ErrorCode::ConstantPolynomial, "extension modulus must be nonconstant");
  if (check && !is_irreducible(modulus, FactorOptions{1 << 20, 0})) {
    fail(ErrorCode::ReducibleModulus, "extension modulus " + to_string(modulus, "t") + " is reducible");
  }
  ExtField K;
  K.d_ = std::make_shared<const Data>(Data{modulus.field(), modulus.monic()});
  return K;
}

ExtField::Elem ExtField::normalize(const Elem& a) const {
  if (a.degree() < d_->modulus.degree()) return a;
  return a % d_->modulus;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (a.is_zero()) fail(ErrorCode::ZeroInput, "division by zero in extension field");
  auto r = xgcd(a, d_->modulus);
  ensure(r.g.degree() == 0, "non-invertible extension element");
  return r.s % d_->modulus;
}

Integer ExtField::cardinality() const {
  if (base().is_rationals()) return 0;
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), base().characteristic(), static_cast<unsigned long>(degree()));
  return q;
}

ExtPoly embed(const ExtField& K, const Poly& p) {
  std::vector<Poly> c;
  for (const auto& a : p.coeffs()) c.push_back(K.embed(a));
  return ExtPoly(K, std::move(c));
}

std::string to_string(const ExtPoly& p, const std::string& var, const std::string& gen) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Poly c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.is_constant() ? to_string(c, gen) : "(" + to_string(c, gen) + ")";
    if (i == 0) {
      out += cs;
    } else {
      if (!(c.is_constant() && c.coeff(0) == 1)) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly min_poly(const ExtField& K, const Poly& e) {
  const Field& k = K.base();
  const int n = K.degree();
  auto as_vec = [&](const Poly& a) {
    Vec v(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i <= a.degree(); ++i) v[static_cast<std::size_t>(i)] = a.coeff(i);
    return v;
  };
  std::vector<Vec> powers;
  Poly cur = K.one();
  const Poly el = K.normalize(e);
  for (int j = 0; j <= n; ++j) {
    Vec v = as_vec(cur);
    if (!powers.empty()) {
      if (auto c = solve(Matrix::from_columns(k, n, powers), v)) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1, Rational(0));
        for (int i = 0; i < j; ++i) coeffs[static_cast<std::size_t>(i)] = k.neg((*c)[static_cast<std::size_t>(i)]);
        coeffs.back() = 1;
        return Poly(k, std::move(coeffs));
      }
    }
    powers.push_back(std::move(v));
    cur = K.mul(cur, el);
  }
  fail(ErrorCode::Internal, "minimal polynomial search exceeded the extension degree");
}

namespace {

struct PolyRingOps {
  Field k;
  Poly zero() const { return Poly(k); }
  Poly one() const { return Poly::constant(k, k.one()); }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  Poly exact_div(const Poly& a, const Poly& b) const {
    auto [q, r] = divrem(a, b);
    ensure(r.is_zero(), "inexact division in fraction-free elimination");
    return q;
  }
};

Integer ipow(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

ExtPoly random_ext_poly(const ExtField& K, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned long> dist(0, K.base().characteristic() - 1);
  std::vector<Poly> c;
  for (int i = 0; i <= deg; ++i) {
    std::vector<Rational> t;
    for (int j = 0; j < K.degree(); ++j) t.emplace_back(dist(rng));
    c.push_back(Poly(K.base(), std::move(t)));
  }
  return ExtPoly(K, std::move(c));
}

// F monic squarefree in K[x] with all irreducible factors of degree e (K finite).
void equal_degree_ext(const ExtPoly& F, int e, std::mt19937_64& rng, std::vector<ExtPoly>& out) {
  if (F.degree() == e) {
    out.push_back(F);
    return;
  }
  const ExtField& K = F.field();
  const unsigned long p = K.base().characteristic();
  const Integer q_e = ipow(p, static_cast<unsigned long>(K.degree() * e));
  const ExtPoly one = ExtPoly::constant(K, K.one());
  while (true) {
    ExtPoly a = random_ext_poly(K, F.degree() - 1, rng);
    if (a.degree() <= 0) continue;
    ExtPoly b(K);
    if (p == 2) {
      ExtPoly t = a % F;
      b = t;
      for (int i = 1; i < K.degree() * e; ++i) {
        t = (t * t) % F;
        b = b + t;
      }
    } else {
      b = powmod(a, (q_e - 1) / 2, F) - one;
    }
    ExtPoly g = gcd(F, b);
    if (g.degree() > 0 && g.degree() < F.degree()) {
      equal_degree_ext(g, e, rng, out);
      equal_degree_ext(F / g, e, rng, out);
      return;
    }
  }
}

// Shifted-norm factorization of f, irreducible over Q, in K[x].
std::vector<ExtPoly> trager(const Poly& f, const ExtField& K) {
  const ExtPoly ef = embed(K, f);
  if (f.degree() == 1 || K.degree() == 1) return {ef.monic()};
  const ExtPoly x = ExtPoly::x(K);
  for (int step = 1; step < 200; ++step) {
    long s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    ExtPoly shift = ExtPoly::constant(K, K.mul(K.from_int(s), K.gen()));
    ExtPoly shifted = ef.compose(x - shift);
    Poly N = norm(shifted);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    auto nf = factor(N, FactorOptions{1 << 20, 0});
    if (nf.size() == 1) return {ef.monic()};
    std::vector<ExtPoly> out;
    for (const auto& piece : nf) {
      ExtPoly g = gcd(shifted, embed(K, piece.poly));
      out.push_back(g.compose(x + shift).monic());
    }
    return out;
  }
  fail(ErrorCode::Internal, "no squarefree norm found for the shifted polynomial");
}

bool ext_less(const ExtFactor& a, const ExtFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  for (int i = 0; i <= a.poly.degree(); ++i) {
    auto c = canonical_compare(a.poly.coeff(i), b.poly.coeff(i));
    if (c != 0) return c < 0;
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

Poly norm(const ExtPoly& p) {
  const ExtField& K = p.field();
  const Field& k = K.base();
  const int n = K.degree();
  // P(t) with coefficients in k[x].
  int et = 0;
  for (const auto& c : p.coeffs()) et = std::max(et, c.degree());
  std::vector<Poly> P(static_cast<std::size_t>(et) + 1, Poly(k));
  for (int i = 0; i <= p.degree(); ++i) {
    const Poly c = p.coeff(i);
    for (int j = 0; j <= c.degree(); ++j) {
      P[static_cast<std::size_t>(j)] += Poly::monomial(k, c.coeff(j), i);
    }
  }
  if (et == 0) return pow(P[0], n);
  std::vector<Poly> M;
  for (const auto& c : K.modulus().coeffs()) M.push_back(Poly::constant(k, c));
  PolyRingOps ops{k};
  return bareiss_det(sylvester(M, P, Poly(k)), ops);
}

std::vector<ExtFactor> factor_over_extension(const Poly& p, const ExtField& K, const FactorOptions& opts) {
  require_same_field(p.field(), K.base(), "factor_over_extension");
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
  std::vector<ExtFactor> out;
  std::mt19937_64 rng(opts.seed);
  for (const auto& f : factor(p, opts)) {
    if (K.base().is_rationals()) {
      for (auto& g : trager(f.poly, K)) out.push_back({std::move(g), f.multiplicity});
    } else {
      const int d = f.poly.degree();
      const int g = std::gcd(d, K.degree());
      std::vector<ExtPoly> pieces;
      equal_degree_ext(embed(K, f.poly), d / g, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), f.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), ext_less);
  return out;
}

std::vector<ExtFactor> factor_over_extension(const Poly& p, const Poly& modulus, const FactorOptions& opts) {
  return factor_over_extension(p, ExtField::create(modulus), opts);
}

}  // namespace zc
