#include "zc/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <utility>

#include "zc/catalg.hpp"
#include "zc/corr.hpp"
#include "zc/cosheaf.hpp"
#include "zc/io.hpp"
#include "zc/random.hpp"
#include "zc/ratequiv.hpp"
#include "zc/reduce.hpp"

namespace zc {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::mt19937_64 generator(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

// Counts cases and keeps the first few failure descriptions.
class Tally {
 public:
  void record(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what());
  }

  // Runs one case; module errors count as failures.
  void run(const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string why = label;
    try {
      ok = body();
    } catch (const Error& e) {
      why += ": " + std::string(e.code_name()) + ": " + e.what();
    }
    record(ok, [&] { return why; });
  }

  void absorb(const Tally& o) {
    cases_ += o.cases_;
    failures_ += o.failures_;
    for (const auto& n : o.notes_) {
      if (notes_.size() < 3) notes_.push_back(n);
    }
  }

  int cases() const { return cases_; }
  int failures() const { return failures_; }

  std::string summary(const std::string& what) const {
    std::ostringstream s;
    s << (cases_ - failures_) << "/" << cases_;
    if (!what.empty()) s << " " << what;
    for (const auto& n : notes_) s << "; failed: " << n;
    return s.str();
  }

 private:
  int cases_ = 0;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> k = {Field::rationals(), Field::prime(5), Field::prime(101)};
  return k;
}

std::string case_label(const Field& k, int i) { return k.name() + " case " + std::to_string(i); }

CriterionResult finish(int id, std::string name, const Tally& t, std::string detail, bool extra_ok = true) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.cases = t.cases();
  r.failures = t.failures();
  r.pass = t.failures() == 0 && t.cases() > 0 && extra_ok;
  r.detail = std::move(detail);
  return r;
}

CriterionResult reduction(std::mt19937_64& rng) {
  Tally t;
  double worst = 0;
  for (const Field& k : fields()) {
    for (int i = 0; i < 500; ++i) {
      ZeroCycle xi = random_degree0(k, rng, 6, 4);
      t.run(case_label(k, i) + " " + to_string(xi), [&] {
        const auto t0 = Clock::now();
        ReductionCertificate cert = reduce_p1(xi);
        const bool ok = act(cert.theta, xi) == standard_cycle(k) && verify_reduction(cert);
        worst = std::max(worst, since(t0));
        return ok;
      });
    }
  }
  const bool fast = worst < 1.0;
  return finish(1, "reduction to [0]-[inf]", t,
                t.summary("degree-0 cycles over Q, F5, F101 reduce with exact replay") +
                    (fast ? "; every case under 1 s" : "; per-case bound of 1 s exceeded"),
                fast);
}

CriterionResult witness(std::mt19937_64& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Field& k = fields()[static_cast<std::size_t>(i) % 3];
    ZeroCycle xi = random_degree0(k, rng, 4, 2);
    RationalFunction r = random_function(k, rng, 4);
    t.run(case_label(k, i) + " xi=" + to_string(xi) + " r=" + to_string(r), [&] {
      Correspondence c = rational_witness_correspondence(xi, r);
      ZeroCycle target = principal_divisor(r);
      return act(c, xi) == target && is_degree_trivial(target);
    });
  }
  return finish(2, "rational-equivalence generation", t,
                t.summary("witness correspondences replay act(c, xi) = div(r)"));
}

CriterionResult unit_generation(std::mt19937_64& rng) {
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const Field& k = fields()[static_cast<std::size_t>(i) % 3];
    ZeroCycle xi(k);
    while (sgn(degree(xi)) == 0) xi = random_cycle(k, rng, 3, 2);
    ClosedPoint y = random_point(k, rng, 2);
    t.run(case_label(k, i) + " xi=" + to_string(xi) + " y=" + to_string(y), [&] {
      const Rational d = degree(xi);
      Correspondence c(constant_correspondence(y));
      ZeroCycle target = ZeroCycle::point(y);
      GenerationReport g = verify_socle_generation(xi, {target});
      return act(c, xi) == target.scaled(d) && act(c.scaled(1 / d), xi) == target && g.degree_branch &&
             g.all_ok();
    });
  }
  return finish(3, "generation from nonzero degree", t,
                t.summary("constant correspondences give deg(xi) [y] and, scaled, [y]"));
}

CriterionResult calculus(std::mt19937_64& rng) {
  Tally action, assoc, functorial, projection;
  for (int i = 0; i < 1000; ++i) {
    const Field& k = fields()[static_cast<std::size_t>(i) % 3];
    const std::string label = case_label(k, i);

    Correspondence a = random_correspondence(k, rng, 1 + static_cast<int>(rng() % 2));
    Correspondence b = random_correspondence(k, rng, 1);
    ZeroCycle z = random_cycle(k, rng, 2);
    action.run(label, [&] { return act(compose(b, a), z) == act(b, act(a, z)); });

    Correspondence p(random_prime(k, rng)), q(random_prime(k, rng)), r(random_prime(k, rng));
    assoc.run(label, [&] { return compose(compose(r, q), p) == compose(r, compose(q, p)); });

    RationalFunction f = random_function(k, rng), g = random_function(k, rng);
    functorial.run(label, [&] {
      RationalFunction h = compose(g, f);
      return compose(Correspondence(graph(g.num(), g.den())), Correspondence(graph(f.num(), f.den()))) ==
             Correspondence(graph(h.num(), h.den()));
    });

    RationalFunction m = random_function(k, rng);
    ZeroCycle w = random_cycle(k, rng, 3);
    projection.run(label, [&] {
      Correspondence gm(graph(m.num(), m.den()));
      const ZeroCycle expect = w.scaled(map_degree(m));
      return act(gm, act(transpose(gm), w)) == expect && pushforward(m, pullback(m, w)) == expect;
    });
  }
  Tally all;
  for (const Tally* x : {&action, &assoc, &functorial, &projection}) all.absorb(*x);
  std::ostringstream d;
  d << "action " << action.summary("") << " | associativity " << assoc.summary("") << " | graph functoriality "
    << functorial.summary("") << " | projection " << projection.summary("");
  return finish(4, "correspondence calculus", all, d.str());
}

CriterionResult morita(std::mt19937_64& rng) {
  Tally rt, idem;
  std::uniform_int_distribution<long> small(-3, 3);
  for (int i = 0; i < 50; ++i) {
    ConcreteCategory cc = random_concrete_category(rng, 4, 3);
    const FinCategory& c = cc.category;
    rt.run("category " + std::to_string(i), [&] {
      bool ok = c.num_objects() <= 4;
      for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) ok = ok && c.hom_dim(x, y) <= 3;
      }
      CategoryAlgebra A = CategoryAlgebra::build(c);
      ok = ok && morita_round_trip(A, cc.tautological).ok();
      for (int x = 0; x < c.num_objects(); ++x) ok = ok && morita_round_trip(A, representable(c, x)).ok();
      return ok && morita_round_trip(functor_to_module(A, cc.tautological)).ok();
    });
  }
  for (int i = 0; i < 100; ++i) {
    ConcreteCategory cc = random_concrete_category(rng, 4, 3);
    CategoryAlgebra A = CategoryAlgebra::build(cc.category);
    std::vector<Vec> B;
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < m; ++j) {
      Vec a = A.zero();
      for (int s = 0; s < 2; ++s) a[rng() % static_cast<unsigned>(A.dim())] = small(rng);
      B.push_back(a);
    }
    idem.run("subset " + std::to_string(i), [&] {
      Vec e = covering_idempotent(A, B);
      bool ok = A.mul(e, e) == e;
      for (const auto& a : B) ok = ok && A.mul(e, a) == a && A.mul(a, e) == a;
      return ok;
    });
  }
  Tally all;
  all.absorb(rt);
  all.absorb(idem);
  return finish(5, "functor-module equivalence", all,
                "round trips " + rt.summary("random categories") + " | covering idempotents " +
                    idem.summary("random subsets with e^2 = e, ea = a = ae"));
}

bool same_span(const Field& k, int n, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (span_basis(k, n, a).size() != span_basis(k, n, b).size()) return false;
  for (const auto& v : b) {
    if (!in_span(k, n, a, v)) return false;
  }
  return true;
}

CriterionResult loewy() {
  const Field Q = Field::rationals();
  Tally t;
  std::vector<std::string> facts;

  t.run("A2 radical", [&] {
    CategoryAlgebra a2 = CategoryAlgebra::build(a2_category());
    RadicalReport r = algebra_radical(a2);
    const bool ok = same_span(Q, a2.dim(), r.basis, {a2.basis_vector(a2.offset(0, 1))}) && r.nilpotency_index == 2;
    facts.push_back("A2: dim J = " + std::to_string(r.basis.size()) + ", J^2 = 0: " +
                    (r.nilpotency_index == 2 ? "yes" : "no"));
    return ok;
  });

  t.run("A2 projective", [&] {
    FinCategory c = a2_category();
    CategoryAlgebra a2 = CategoryAlgebra::build(c);
    CatModule P = functor_to_module(a2, representable(c, 0));
    const int ll = loewy_length(P);
    facts.push_back("A2 projective: Loewy length " + std::to_string(ll));
    return P.dim() == 2 && ll == 2;
  });

  t.run("square-zero algebra", [&] {
    FinCategory c = square_zero_category();
    CategoryAlgebra A = CategoryAlgebra::build(c);
    std::vector<Vec> eps;
    for (int p = 0; p < A.dim(); ++p) {
      if (A.basis()[static_cast<std::size_t>(p)].index == 1) eps.push_back(A.basis_vector(p));
    }
    RadicalReport r = algebra_radical(A);
    CatModule M = functor_to_module(A, representable(c, 0));
    std::vector<Vec> IM;
    for (const auto& j : r.basis) {
      Matrix L = M.action(j);
      for (int i = 0; i < M.dim(); ++i) {
        Vec v(static_cast<std::size_t>(M.dim()), Rational(0));
        v[static_cast<std::size_t>(i)] = 1;
        IM.push_back(L.apply(v));
      }
    }
    IM = span_basis(Q, M.dim(), IM);
    const int ll = loewy_length(M);
    auto soc = socle_series(M);
    const bool ok = same_span(Q, A.dim(), r.basis, eps) && r.nilpotency_index == 2 && ll == 2 && soc.size() == 3 &&
                    same_span(Q, M.dim(), soc[1], IM) && !IM.empty();
    facts.push_back("I^2 = 0 instance: J = I: " + std::string(same_span(Q, A.dim(), r.basis, eps) ? "yes" : "no") +
                    ", Loewy length " + std::to_string(ll) + ", soc M = IM: " +
                    (soc.size() > 1 && same_span(Q, M.dim(), soc[1], IM) ? "yes" : "no"));
    return ok;
  });

  t.run("matrix module", [&] {
    FinCategory c = matrix_category(2);
    SimplicityReport s = is_absolutely_simple(functor_to_module(CategoryAlgebra::build(c), representable(c, 0)));
    facts.push_back("M2 column module: simple " + std::string(s.simple ? "yes" : "no") + ", End dim " +
                    std::to_string(s.end_dim));
    return s.absolutely_simple();
  });

  t.run("Q(i) module", [&] {
    FinCategory c = gaussian_category();
    SimplicityReport s = is_absolutely_simple(functor_to_module(CategoryAlgebra::build(c), representable(c, 0)));
    facts.push_back("Q(i): simple " + std::string(s.simple ? "yes" : "no") + ", End dim " +
                    std::to_string(s.end_dim));
    return s.simple && s.end_dim == 2 && !s.absolutely_simple();
  });

  std::string d = t.summary("fixed instances");
  for (const auto& f : facts) d += "; " + f;
  return finish(6, "radical and Loewy machinery", t, d);
}

// A cycle sum m_i [n_i P] on y^2 + y = x^3 - x, where P = (0, 0) generates
// the Mordell-Weil group (rank 1, trivial torsion). Then the Abel-Jacobi sum
// is (sum m_i n_i) P, so the layer is read off the two sums.
struct CurveSample {
  std::string label;
  std::vector<std::pair<long, Rational>> terms;  // (n, m)
};

Rational Q_(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<CurveSample> curve_samples() {
  return {
      {"[P]", {{1, Q_(1)}}},
      {"[P]-[O]", {{1, Q_(1)}, {0, Q_(-1)}}},
      {"[P]+[-P]-2[O]", {{1, Q_(1)}, {-1, Q_(1)}, {0, Q_(-2)}}},
      {"h1", {{0, Q_(1)}}},
      {"h2", {{2, Q_(1)}, {0, Q_(-1)}}},
      {"h3", {{1, Q_(2)}, {2, Q_(-1)}, {0, Q_(-1)}}},
      {"h4", {{1, Q_(1)}, {2, Q_(1)}, {3, Q_(-1)}, {0, Q_(-1)}}},
      {"h5", {{3, Q_(1)}, {-3, Q_(1)}, {0, Q_(-2)}}},
      {"h6", {{1, Q_(1)}, {-2, Q_(1)}, {0, Q_(-2)}}},
      {"h7", {{1, Q_(1, 2)}, {0, Q_(-1, 2)}}},
      {"h8", {{2, Q_(1, 2)}, {1, Q_(-1)}, {0, Q_(1, 2)}}},
      {"h9", {{1, Q_(3)}, {3, Q_(-1)}, {0, Q_(-2)}}},
      {"h10", {{4, Q_(1)}, {2, Q_(-2)}, {0, Q_(1)}}},
      {"h11", {{5, Q_(1)}, {0, Q_(-1)}}},
      {"h12", {{-1, Q_(1)}, {0, Q_(-1)}}},
      {"h13", {{1, Q_(1)}, {2, Q_(1)}}},
      {"h14", {{1, Q_(1)}, {-1, Q_(-2)}}},
      {"h15", {{1, Q_(1, 3)}, {2, Q_(1, 3)}, {-3, Q_(1, 3)}, {0, Q_(-1)}}},
      {"h16", {{1, Q_(2, 3)}, {0, Q_(-2, 3)}}},
      {"h17", {{6, Q_(1)}, {3, Q_(-2)}, {0, Q_(1)}}},
      {"h18", {{2, Q_(1)}, {1, Q_(-1)}, {-1, Q_(1)}, {-2, Q_(-1)}}},
      {"h19", {{1, Q_(5)}, {0, Q_(1)}}},
      {"h20", {{3, Q_(1)}, {1, Q_(-3)}, {0, Q_(2)}}},
  };
}

CriterionResult curve_layers() {
  Tally t;
  const WeierstrassCurve e = WeierstrassCurve::create(0, 0, 1, -1, 0);
  const ECPoint P = ECPoint::affine(e, 0, 0);

  t.run("nP != O for n <= 12", [&] {
    for (int n = 1; n <= 12; ++n) {
      if (ec_mul(e, n, P).is_origin()) return false;
    }
    return !ec_is_torsion(e, P).has_value();
  });

  int counts[3] = {0, 0, 0};
  for (const CurveSample& s : curve_samples()) {
    Rational deg = 0, index = 0;
    ECCycle c(e);
    for (const auto& [n, m] : s.terms) {
      deg += m;
      index += m * n;
      c.add(ec_mul(e, n, P), m);
    }
    const Layer expect = sgn(deg) != 0 ? Layer::Unit : sgn(index) == 0 ? Layer::Socle : Layer::Middle;
    ++counts[static_cast<int>(expect)];
    t.run(s.label, [&] {
      const Layer got = classify_layer(c);
      // Containment: socle and middle samples pass the degree gate.
      const bool gate = got == Layer::Unit || sgn(degree(c)) == 0;
      if (got != Layer::Unit && aj_sum(c).point.is_origin() != (got == Layer::Socle)) return false;
      return got == expect && gate;
    });
  }
  std::ostringstream d;
  d << t.summary("checks (P non-torsion up to 12; three named cycles and 20 handcrafted ones)") << "; expected "
    << counts[0] << " UNIT, " << counts[1] << " MIDDLE, " << counts[2] << " SOCLE";
  return finish(7, "curve layers", t, d.str());
}

CriterionResult cosheaf(std::mt19937_64& rng) {
  Tally t;
  const int D = 3;
  const int samples = 25;
  int certificates = 0, fiber_points = 0;
  for (const Field& k : {Field::prime(5), Field::rationals()}) {
    auto P = [&](std::initializer_list<long> c) { return poly_from_ints(k, c); };
    const std::vector<std::pair<std::string, RationalFunction>> covers = {
        {"t^2", RationalFunction(P({0, 0, 1}), P({1}))},
        {"t^3", RationalFunction(P({0, 0, 0, 1}), P({1}))},
        {"(t^2+1)/t", RationalFunction(P({1, 0, 1}), P({0, 1}))},
    };
    for (const auto& [name, f] : covers) {
      const std::string label = k.name() + " " + name;
      t.run(label + " surjectivity", [&] {
        return surjectivity_check(CoverSpec::create({CoverPiece{f, {}}}), D).gap_free();
      });
      std::vector<ZeroCycle> xs;
      for (int i = 0; i < samples; ++i) xs.push_back(random_kernel_element(f, rng, D));
      t.run(label + " exactness", [&] {
        ExactnessReport r = verify_exactness(f, xs, D);
        bool ok = r.surjective() && r.kernel_ok() && r.complex_ok() && r.fiber_points_checked > 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const SampleResult& s = r.samples[i];
          ok = ok && s.in_kernel && s.certificate && s.certificate->replay_ok && s.certificate->target == xs[i] &&
               verify_lift(f, *s.certificate) && replay(k, s.certificate->terms) == xs[i];
          if (s.certificate) ++certificates;
        }
        fiber_points += r.fiber_points_checked;
        return ok;
      });
    }
  }
  std::ostringstream d;
  d << t.summary("cover checks over F5 (all points of degree <= 3) and Q (test points)") << "; " << certificates
    << " lift certificates replayed; complex zero on " << fiber_points << " fiber points";
  return finish(8, "cosheaf exactness", t, d.str());
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  std::mt19937_64 rng = generator(seed, id);
  const auto t0 = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = reduction(rng); break;
    case 2: r = witness(rng); break;
    case 3: r = unit_generation(rng); break;
    case 4: r = calculus(rng); break;
    case 5: r = morita(rng); break;
    case 6: r = loewy(); break;
    case 7: r = curve_layers(); break;
    case 8: r = cosheaf(rng); break;
    default: fail(ErrorCode::Precondition, "no acceptance criterion " + std::to_string(id));
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) {
    out.push_back(run_criterion(id, seed));
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace zc
