#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zc/catalg.hpp"
#include "zc/corr.hpp"
#include "zc/cosheaf.hpp"
#include "zc/cycles.hpp"
#include "zc/ratequiv.hpp"
#include "zc/reduce.hpp"

namespace zc {

/// Keys keep insertion order, so serialized output is deterministic.
using Json = nlohmann::ordered_json;

// Readers take the location of the value (e.g. "cycle[2].coeff") and throw
// Parse errors that name it. Domain validation errors (reducible point
// polynomial, common factor, ...) propagate with their own codes.

const Json& json_member(const Json& j, const char* key, const std::string& where);
const Json& json_array(const Json& j, const std::string& where);
long json_integer(const Json& j, const std::string& where, long lo, long hi);
bool json_bool(const Json& j, const std::string& where);
std::string json_text(const Json& j, const std::string& where);

Json to_json(const Field& k);
Field field_from_json(const Json& j, const std::string& where);

/// Q-coefficients as "num/den".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

/// Coefficient strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Field& k, const Json& j, const std::string& where);

/// {"poly": [...]} or "inf".
Json to_json(const ClosedPoint& p);
ClosedPoint point_from_json(const Field& k, const Json& j, const std::string& where, const FactorOptions& opts = {});

/// List of {"coeff", "point"}.
Json to_json(const ZeroCycle& z);
ZeroCycle cycle_from_json(const Field& k, const Json& j, const std::string& where, const FactorOptions& opts = {});
/// {"field", "cycle"}.
Json cycle_document(const ZeroCycle& z);
ZeroCycle cycle_from_document(const Json& j, const FactorOptions& opts = {});

/// {"bidegree": [d, e], "matrix": rows indexed by the X exponent}.
Json to_json(const BiForm& f);
BiForm biform_from_json(const Field& k, const Json& j, const std::string& where);
/// List of {"coeff", "form"}; every form is validated as prime.
Json to_json(const Correspondence& c);
Correspondence correspondence_from_json(const Field& k, const Json& j, const std::string& where,
                                        const FactorOptions& opts = {});

/// {"num", "den"}.
Json to_json(const RationalFunction& r);
RationalFunction function_from_json(const Field& k, const Json& j, const std::string& where);

/// {"a", "b", "c", "d"}: t -> (a t + b)/(c t + d).
Json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const Field& k, const Json& j, const std::string& where);

/// {"a1", "a2", "a3", "a4", "a6"}; missing coefficients are zero.
Json to_json(const WeierstrassCurve& e);
WeierstrassCurve curve_from_json(const Json& j, const std::string& where);
/// {"x", "y"} or "O".
Json to_json(const ECPoint& p);
ECPoint ec_point_from_json(const WeierstrassCurve& e, const Json& j, const std::string& where);
Json to_json(const ECCycle& c);
ECCycle ec_cycle_from_json(const WeierstrassCurve& e, const Json& j, const std::string& where);

Json to_json(const ReductionCertificate& c);
/// Reads the fields back without replaying; pair with verify_reduction.
ReductionCertificate reduction_from_json(const Field& k, const Json& j, const std::string& where);
/// Replay only: the chain composes to the composite, theta is the scaled
/// graph of the composite, and act(theta, input) = [0] - [inf].
bool verify_reduction(const ReductionCertificate& c);

Json to_json(const WitnessTerm& t);
std::vector<WitnessTerm> witness_terms_from_json(const Field& k, const Json& j, const std::string& where);

/// Rows of rational strings, over Q.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& where);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const std::string& where);

/// {"objects", "hom_dim", "compose": [{"x","y","z","values"}], "identity"}.
Json to_json(const FinCategory& c);
/// A category document or the name of a built-in instance: "one", "a2",
/// "gaussian", "square_zero", "matrix:<n>".
FinCategory category_from_json(const Json& j, const std::string& where);
/// {"dim", "action": one matrix per algebra basis element}.
Json to_json(const CatModule& m);
CatModule module_from_json(const CategoryAlgebra& a, const Json& j, const std::string& where);
/// {"dims", "maps": [{"x","y","index","matrix"}]}.
Json to_json(const CatFunctor& f);
CatFunctor functor_from_json(const Json& j, const std::string& where);

/// {"field", "pieces": [{"map", "excluded"}]}.
Json to_json(const CoverSpec& c);
CoverSpec cover_from_json(const Field& k, const Json& j, const std::string& where);

Json to_json(const FiberPoint& z);
FiberPoint fiber_point_from_json(const Field& k, const Json& j, const std::string& where);
Json to_json(const LiftCertificate& c);
LiftCertificate lift_from_json(const Field& k, const Json& j, const std::string& where);
/// Replay only: every fiber point lies over its base under f (component
/// checked against the fiber equation), and the terms sum to the target.
bool verify_lift(const RationalFunction& f, const LiftCertificate& c);

}  // namespace zc
