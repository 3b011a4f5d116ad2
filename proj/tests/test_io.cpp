#include <gtest/gtest.h>

#include "test_util.hpp"
#include "zc/io.hpp"

using namespace zc;
using zc::test::P;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

std::string error_message(const std::function<void()>& f, ErrorCode* code = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (code) *code = e.code();
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, CycleDocumentExample) {
  ZeroCycle z = ZeroCycle::point(ClosedPoint::finite(P(Q, {-1, 1}))) - ZeroCycle::point(ClosedPoint::finite(P(Q, {-3, 1})));
  Json j = cycle_document(z);
  EXPECT_EQ(j.dump(),
            R"({"field":{"kind":"Q"},"cycle":[{"coeff":"-1/1","point":{"poly":["-3/1","1/1"]}},)"
            R"({"coeff":"1/1","point":{"poly":["-1/1","1/1"]}}]})");
  EXPECT_EQ(cycle_from_document(j), z);
  Json inf = cycle_document(ZeroCycle::point(ClosedPoint::infinity(F5), Rational(2)));
  EXPECT_EQ(inf.dump(), R"({"field":{"kind":"Fp","p":5},"cycle":[{"coeff":"2/1","point":"inf"}]})");
}

TEST(Io, RoundTripsAreBitExact) {
  std::mt19937_64 rng(5);
  for (const Field& k : {Q, F5, Field::prime(101)}) {
    for (int it = 0; it < 30; ++it) {
      ZeroCycle z = random_cycle(k, rng, 4, 3);
      Json jz = cycle_document(z);
      EXPECT_EQ(cycle_document(cycle_from_document(Json::parse(jz.dump()))).dump(), jz.dump());

      Correspondence c = random_correspondence(k, rng, 2);
      Json jc = to_json(c);
      EXPECT_EQ(to_json(correspondence_from_json(k, Json::parse(jc.dump()), "corr")).dump(), jc.dump());

      RationalFunction r = random_function(k, rng, 3);
      EXPECT_EQ(function_from_json(k, to_json(r), "r"), r);

      ReductionCertificate cert = reduce_p1(random_degree0(k, rng, 4, 2));
      Json jr = to_json(cert);
      ReductionCertificate back = reduction_from_json(k, Json::parse(jr.dump()), "cert");
      EXPECT_EQ(to_json(back).dump(), jr.dump());
      EXPECT_TRUE(verify_reduction(back));
    }
  }
  for (const auto& c : {a2_category(), matrix_category(2), gaussian_category(), square_zero_category()}) {
    Json j = to_json(c);
    EXPECT_EQ(to_json(category_from_json(Json::parse(j.dump()), "category")).dump(), j.dump());
    CategoryAlgebra A = CategoryAlgebra::build(c);
    CatFunctor F = representable(c, 0);
    Json jf = to_json(F);
    EXPECT_EQ(to_json(functor_from_json(jf, "functor")).dump(), jf.dump());
    CatModule M = functor_to_module(A, F);
    Json jm = to_json(M);
    EXPECT_EQ(to_json(module_from_json(A, jm, "module")).dump(), jm.dump());
  }
  WeierstrassCurve e = WeierstrassCurve::create(0, 0, 1, -1, 0);
  ECCycle ec(e);
  ec.add(ECPoint::affine(e, 0, 0), Rational(1));
  ec.add(ECPoint::origin(), Rational(-1));
  Json je = to_json(ec);
  EXPECT_EQ(to_json(ec_cycle_from_json(curve_from_json(to_json(e), "curve"), je, "cycle")).dump(), je.dump());
}

TEST(Io, CategoryNamesAndDocuments) {
  EXPECT_EQ(CategoryAlgebra::build(category_from_json("matrix:3", "c")).dim(), 9);
  EXPECT_EQ(CategoryAlgebra::build(category_from_json("a2", "c")).dim(), 3);
  ErrorCode code{};
  EXPECT_NE(error_message([] { category_from_json("nope", "category"); }, &code).find("category"), std::string::npos);
  EXPECT_EQ(code, ErrorCode::Parse);
  // Basis 1, a, b with a o a = b, b o a = a, a o b = 0: (a o a) o a != a o (a o a).
  Json bad = Json::parse(R"({"objects":["x"],"hom_dim":[[3]],
    "compose":[{"x":0,"y":0,"z":0,"values":[["1","0","0"],["0","1","0"],["0","0","1"],
                                             ["0","1","0"],["0","0","1"],["0","1","0"],
                                             ["0","0","1"],["0","0","0"],["0","0","0"]]}],
    "identity":[["1","0","0"]]})");
  code = ErrorCode::Parse;
  error_message([&] { category_from_json(bad, "category"); }, &code);
  EXPECT_EQ(code, ErrorCode::AssociativityViolation);
}

TEST(Io, ErrorsCarryLocations) {
  ErrorCode code{};
  Json j = Json::parse(R"({"field":{"kind":"Q"},"cycle":[{"coeff":"1","point":"inf"},{"coeff":"x/2","point":"inf"}]})");
  std::string msg = error_message([&] { cycle_from_document(j); }, &code);
  EXPECT_EQ(code, ErrorCode::Parse);
  EXPECT_NE(msg.find("cycle[1].coeff"), std::string::npos) << msg;

  Json missing = Json::parse(R"({"field":{"kind":"Q"},"cycle":[{"coeff":"1"}]})");
  msg = error_message([&] { cycle_from_document(missing); }, &code);
  EXPECT_NE(msg.find("cycle[0]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("point"), std::string::npos) << msg;

  Json reducible = Json::parse(R"({"field":{"kind":"Q"},"cycle":[{"coeff":"1","point":{"poly":["-1","0","1"]}}]})");
  error_message([&] { cycle_from_document(reducible); }, &code);
  EXPECT_EQ(code, ErrorCode::ReduciblePolynomial);

  error_message([] { field_from_json(Json::parse(R"({"kind":"Fp","p":6})"), "field"); }, &code);
  EXPECT_EQ(code, ErrorCode::NotPrime);
  msg = error_message([] { field_from_json(Json::parse(R"({"kind":"R"})"), "field"); }, &code);
  EXPECT_EQ(code, ErrorCode::Parse);
  EXPECT_NE(msg.find("field.kind"), std::string::npos);

  Json form = Json::parse(R"([{"coeff":"1","form":{"bidegree":[1,1],"matrix":[["0","1"]]}}])");
  msg = error_message([&] { correspondence_from_json(Q, form, "corr"); }, &code);
  EXPECT_NE(msg.find("corr[0].form.matrix"), std::string::npos) << msg;
}

TEST(Io, VerifyRejectsTamperedCertificates) {
  ZeroCycle xi = ZeroCycle::point(ClosedPoint::finite(P(Q, {-1, 1}))) - ZeroCycle::point(ClosedPoint::finite(P(Q, {-3, 1})));
  ReductionCertificate cert = reduce_p1(xi);
  EXPECT_TRUE(verify_reduction(cert));
  ReductionCertificate bad = cert;
  bad.scaling = 2;
  EXPECT_FALSE(verify_reduction(bad));
  bad = cert;
  bad.theta = cert.theta.scaled(2);
  EXPECT_FALSE(verify_reduction(bad));
  bad = cert;
  bad.input = xi.scaled(2);
  EXPECT_FALSE(verify_reduction(bad));
  bad = cert;
  bad.chain.pop_back();
  EXPECT_FALSE(verify_reduction(bad));

  RationalFunction f(P(Q, {0, 0, 1}), P(Q, {1}));
  ZeroCycle alpha = ZeroCycle::point(ClosedPoint::finite(P(Q, {-1, 1}))) - ZeroCycle::point(ClosedPoint::finite(P(Q, {1, 1})));
  LiftCertificate lift = kernel_certificate(f, alpha);
  Json jl = to_json(lift);
  LiftCertificate back = lift_from_json(Q, Json::parse(jl.dump()), "lift");
  EXPECT_EQ(to_json(back).dump(), jl.dump());
  EXPECT_TRUE(verify_lift(f, back));
  LiftCertificate wrong = back;
  wrong.terms[0].coeff = 2;
  EXPECT_FALSE(verify_lift(f, wrong));
  EXPECT_FALSE(verify_lift(RationalFunction(P(Q, {0, 0, 0, 1}), P(Q, {1})), back));
}

TEST(Io, LiftCertificatesWithComponentsReplay) {
  std::mt19937_64 rng(9);
  for (const Field& k : {Q, F5}) {
    RationalFunction f(P(k, {1, 0, 1}), P(k, {0, 1}));
    for (int it = 0; it < 10; ++it) {
      ZeroCycle alpha = random_kernel_element(f, rng, 2);
      LiftCertificate c = kernel_certificate(f, alpha);
      LiftCertificate back = lift_from_json(k, Json::parse(to_json(c).dump()), "lift");
      EXPECT_TRUE(verify_lift(f, back));
    }
  }
}
