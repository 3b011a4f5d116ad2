#include "zc/io.hpp"

#include <algorithm>

#include "zc/error.hpp"

namespace zc {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { fail(ErrorCode::Parse, where + ": " + what); }

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& where, const char* key) { return where + "." + key; }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long>();
}

int small_int(const Json& j, const std::string& where, long lo, long hi) {
  long v = integer(j, where);
  if (v < lo || v > hi) bad(where, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where, "expected true or false");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

// Re-raises parse failures of a scalar with the location attached.
template <class F>
auto located(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    bad(where, e.what());
  }
}

Rational element(const Field& k, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return k.from_int(j.get<long>());
  std::string s = text(j, where);
  return located(where, [&] { return k.parse(s); });
}

Json element_to_json(const Field& k, const Rational& a) { return k.format(a); }

Json ext_to_json(const ExtPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

ExtPoly ext_from_json(const ExtField& K, const Json& j, const std::string& where) {
  std::vector<ExtField::Elem> c;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    c.push_back(K.normalize(poly_from_json(K.base(), j[i], at(where, i))));
  }
  return ExtPoly(K, std::move(c));
}

}  // namespace

Json to_json(const Field& k) {
  if (k.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", k.characteristic()}};
}

Field field_from_json(const Json& j, const std::string& where) {
  std::string kind = text(member(j, "kind", where), dot(where, "kind"));
  if (kind == "Q") return Field::rationals();
  if (kind != "Fp") bad(dot(where, "kind"), "expected \"Q\" or \"Fp\"");
  long p = integer(member(j, "p", where), dot(where, "p"));
  if (p < 2) fail(ErrorCode::NotPrime, dot(where, "p") + ": " + std::to_string(p) + " is not prime");
  return Field::prime(static_cast<std::uint64_t>(p));
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  std::string s = text(j, where);
  return located(where, [&] { return parse_rational(s); });
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(element_to_json(p.field(), c));
  return out;
}

Poly poly_from_json(const Field& k, const Json& j, const std::string& where) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) c.push_back(element(k, j[i], at(where, i)));
  Poly p(k, std::move(c));
  return p;
}

Json to_json(const ClosedPoint& p) {
  if (p.is_infinity()) return "inf";
  return Json{{"poly", to_json(p.poly())}};
}

ClosedPoint point_from_json(const Field& k, const Json& j, const std::string& where, const FactorOptions& opts) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ClosedPoint::infinity(k);
    bad(where, "expected \"inf\" or {\"poly\": [...]}");
  }
  return ClosedPoint::finite(poly_from_json(k, member(j, "poly", where), dot(where, "poly")), opts);
}

Json to_json(const ZeroCycle& z) {
  Json out = Json::array();
  for (const auto& [p, c] : z.terms()) out.push_back(Json{{"coeff", rational_to_json(c)}, {"point", to_json(p)}});
  return out;
}

ZeroCycle cycle_from_json(const Field& k, const Json& j, const std::string& where, const FactorOptions& opts) {
  ZeroCycle z(k);
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    Rational c = rational_from_json(member(j[i], "coeff", w), dot(w, "coeff"));
    z.add(point_from_json(k, member(j[i], "point", w), dot(w, "point"), opts), c);
  }
  return z;
}

Json cycle_document(const ZeroCycle& z) { return Json{{"field", to_json(z.field())}, {"cycle", to_json(z)}}; }

ZeroCycle cycle_from_document(const Json& j, const FactorOptions& opts) {
  Field k = field_from_json(member(j, "field", "$"), "field");
  return cycle_from_json(k, member(j, "cycle", "$"), "cycle", opts);
}

Json to_json(const BiForm& f) {
  Json m = Json::array();
  for (int i = 0; i <= f.dx(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj <= f.dy(); ++jj) row.push_back(element_to_json(f.field(), f.entry(i, jj)));
    m.push_back(row);
  }
  return Json{{"bidegree", {f.dx(), f.dy()}}, {"matrix", m}};
}

BiForm biform_from_json(const Field& k, const Json& j, const std::string& where) {
  const Json& bd = array(member(j, "bidegree", where), dot(where, "bidegree"));
  if (bd.size() != 2) bad(dot(where, "bidegree"), "expected [d, e]");
  int d = small_int(bd[0], dot(where, "bidegree") + "[0]", 0, 64);
  int e = small_int(bd[1], dot(where, "bidegree") + "[1]", 0, 64);
  std::string mw = dot(where, "matrix");
  const Json& m = array(member(j, "matrix", where), mw);
  if (m.size() != static_cast<std::size_t>(d + 1)) bad(mw, "expected " + std::to_string(d + 1) + " rows");
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Json& row = array(m[i], at(mw, i));
    if (row.size() != static_cast<std::size_t>(e + 1)) bad(at(mw, i), "expected " + std::to_string(e + 1) + " entries");
    for (std::size_t jj = 0; jj < row.size(); ++jj) entries.push_back(element(k, row[jj], at(at(mw, i), jj)));
  }
  return BiForm(k, d, e, std::move(entries));
}

Json to_json(const Correspondence& c) {
  Json out = Json::array();
  for (const auto& [p, a] : c.terms()) out.push_back(Json{{"coeff", rational_to_json(a)}, {"form", to_json(p.form())}});
  return out;
}

Correspondence correspondence_from_json(const Field& k, const Json& j, const std::string& where,
                                        const FactorOptions& opts) {
  Correspondence c(k);
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    Rational a = rational_from_json(member(j[i], "coeff", w), dot(w, "coeff"));
    BiForm f = biform_from_json(k, member(j[i], "form", w), dot(w, "form"));
    c.add(validate_prime(f, opts), a);
  }
  return c;
}

Json to_json(const RationalFunction& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalFunction function_from_json(const Field& k, const Json& j, const std::string& where) {
  Poly n = poly_from_json(k, member(j, "num", where), dot(where, "num"));
  Poly d = poly_from_json(k, member(j, "den", where), dot(where, "den"));
  return RationalFunction(n, d);
}

Json to_json(const MoebiusMap& m) {
  const Field& k = m.field();
  return Json{{"a", element_to_json(k, m.a())},
              {"b", element_to_json(k, m.b())},
              {"c", element_to_json(k, m.c())},
              {"d", element_to_json(k, m.d())}};
}

MoebiusMap moebius_from_json(const Field& k, const Json& j, const std::string& where) {
  auto get = [&](const char* key) { return element(k, member(j, key, where), dot(where, key)); };
  return MoebiusMap::create(k, get("a"), get("b"), get("c"), get("d"));
}

Json to_json(const WeierstrassCurve& e) {
  return Json{{"a1", rational_to_json(e.a1())},
              {"a2", rational_to_json(e.a2())},
              {"a3", rational_to_json(e.a3())},
              {"a4", rational_to_json(e.a4())},
              {"a6", rational_to_json(e.a6())}};
}

WeierstrassCurve curve_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [key, v] : j.items()) {
    if (key != "a1" && key != "a2" && key != "a3" && key != "a4" && key != "a6") bad(where, "unknown key \"" + key + "\"");
  }
  auto get = [&](const char* key) {
    auto it = j.find(key);
    return it == j.end() ? Rational(0) : rational_from_json(*it, dot(where, key));
  };
  return WeierstrassCurve::create(get("a1"), get("a2"), get("a3"), get("a4"), get("a6"));
}

Json to_json(const ECPoint& p) {
  if (p.is_origin()) return "O";
  return Json{{"x", rational_to_json(p.x())}, {"y", rational_to_json(p.y())}};
}

ECPoint ec_point_from_json(const WeierstrassCurve& e, const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "O") return ECPoint::origin();
    bad(where, "expected \"O\" or {\"x\", \"y\"}");
  }
  return ECPoint::affine(e, rational_from_json(member(j, "x", where), dot(where, "x")),
                         rational_from_json(member(j, "y", where), dot(where, "y")));
}

Json to_json(const ECCycle& c) {
  Json out = Json::array();
  for (const auto& [p, a] : c.terms()) out.push_back(Json{{"coeff", rational_to_json(a)}, {"point", to_json(p)}});
  return out;
}

ECCycle ec_cycle_from_json(const WeierstrassCurve& e, const Json& j, const std::string& where) {
  ECCycle c(e);
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    Rational a = rational_from_json(member(j[i], "coeff", w), dot(w, "coeff"));
    c.add(ec_point_from_json(e, member(j[i], "point", w), dot(w, "point")), a);
  }
  return c;
}

Json to_json(const ReductionCertificate& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back(Json{{"role", s.role}, {"num", to_json(s.num)}, {"den", to_json(s.den)}});
  return Json{{"input", to_json(c.input)},
              {"transport", c.transport ? to_json(*c.transport) : Json(nullptr)},
              {"anchor", to_json(c.anchor)},
              {"anchor_coeff", rational_to_json(c.anchor_coeff)},
              {"anchor_at_infinity", c.anchor_at_infinity},
              {"chain", chain},
              {"composite", {{"num", to_json(c.composite_num)}, {"den", to_json(c.composite_den)}}},
              {"scaling", rational_to_json(c.scaling)},
              {"theta", to_json(c.theta)},
              {"replay", c.replay}};
}

ReductionCertificate reduction_from_json(const Field& k, const Json& j, const std::string& where) {
  ReductionCertificate c;
  c.input = cycle_from_json(k, member(j, "input", where), dot(where, "input"));
  const Json& tr = member(j, "transport", where);
  if (!tr.is_null()) c.transport = moebius_from_json(k, tr, dot(where, "transport"));
  c.anchor = point_from_json(k, member(j, "anchor", where), dot(where, "anchor"));
  c.anchor_coeff = rational_from_json(member(j, "anchor_coeff", where), dot(where, "anchor_coeff"));
  c.anchor_at_infinity = boolean(member(j, "anchor_at_infinity", where), dot(where, "anchor_at_infinity"));
  std::string cw = dot(where, "chain");
  const Json& chain = array(member(j, "chain", where), cw);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::string w = at(cw, i);
    c.chain.push_back({text(member(chain[i], "role", w), dot(w, "role")),
                       poly_from_json(k, member(chain[i], "num", w), dot(w, "num")),
                       poly_from_json(k, member(chain[i], "den", w), dot(w, "den"))});
  }
  std::string pw = dot(where, "composite");
  const Json& comp = member(j, "composite", where);
  c.composite_num = poly_from_json(k, member(comp, "num", pw), dot(pw, "num"));
  c.composite_den = poly_from_json(k, member(comp, "den", pw), dot(pw, "den"));
  c.scaling = rational_from_json(member(j, "scaling", where), dot(where, "scaling"));
  c.theta = correspondence_from_json(k, member(j, "theta", where), dot(where, "theta"));
  c.replay = boolean(member(j, "replay", where), dot(where, "replay"));
  return c;
}

bool verify_reduction(const ReductionCertificate& c) {
  const Field& k = c.input.field();
  if (c.chain.empty() || sgn(c.scaling) == 0) return false;
  if (c.scaling != c.anchor_coeff * c.anchor.degree()) return false;
  RationalFunction acc(Poly::x(k), Poly::constant(k, k.one()));
  for (const auto& s : c.chain) acc = compose(RationalFunction(s.num, s.den), acc);
  RationalFunction composite(c.composite_num, c.composite_den);
  if (!(acc == composite)) return false;
  if (!(c.theta == Correspondence(graph(composite.num(), composite.den()), 1 / c.scaling))) return false;
  return act(c.theta, c.input) == standard_cycle(k);
}

Json to_json(const WitnessTerm& t) {
  return Json{{"coeff", rational_to_json(t.coeff)}, {"function", to_json(t.function)}};
}

std::vector<WitnessTerm> witness_terms_from_json(const Field& k, const Json& j, const std::string& where) {
  std::vector<WitnessTerm> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    out.push_back({rational_from_json(member(j[i], "coeff", w), dot(w, "coeff")),
                   function_from_json(k, member(j[i], "function", w), dot(w, "function"))});
  }
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& where) {
  const Json& a = array(j, where);
  if (a.size() != static_cast<std::size_t>(rows)) bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(Field::rationals(), rows, cols);
  for (int i = 0; i < rows; ++i) {
    Vec r = vec_from_json(a[static_cast<std::size_t>(i)], at(where, static_cast<std::size_t>(i)));
    if (r.size() != static_cast<std::size_t>(cols)) {
      bad(at(where, static_cast<std::size_t>(i)), "expected " + std::to_string(cols) + " entries");
    }
    for (int jj = 0; jj < cols; ++jj) m.at(i, jj) = r[static_cast<std::size_t>(jj)];
  }
  return m;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vec vec_from_json(const Json& j, const std::string& where) {
  Vec v;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) v.push_back(rational_from_json(j[i], at(where, i)));
  return v;
}

Json to_json(const FinCategory& c) {
  const auto& d = c.data();
  Json compose = Json::array();
  for (const auto& [t, values] : d.compose) {
    Json vs = Json::array();
    for (const auto& v : values) vs.push_back(vec_to_json(v));
    compose.push_back(Json{{"x", t[0]}, {"y", t[1]}, {"z", t[2]}, {"values", vs}});
  }
  Json ids = Json::array();
  for (const auto& v : d.identity) ids.push_back(vec_to_json(v));
  return Json{{"objects", d.objects}, {"hom_dim", d.hom_dim}, {"compose", compose}, {"identity", ids}};
}

FinCategory category_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "one") return one_object_category();
    if (name == "a2") return a2_category();
    if (name == "gaussian") return gaussian_category();
    if (name == "square_zero") return square_zero_category();
    if (name.starts_with("matrix:")) {
      int n = located(where, [&] { return static_cast<int>(parse_rational(name.substr(7)).get_num().get_si()); });
      if (n < 1 || n > 8) bad(where, "matrix size out of range [1, 8]");
      return matrix_category(n);
    }
    bad(where, "unknown category \"" + name + "\"");
  }
  FinCategory::Data d;
  std::string ow = dot(where, "objects");
  const Json& objs = array(member(j, "objects", where), ow);
  for (std::size_t i = 0; i < objs.size(); ++i) d.objects.push_back(text(objs[i], at(ow, i)));
  const std::size_t n = d.objects.size();
  std::string hw = dot(where, "hom_dim");
  const Json& hd = array(member(j, "hom_dim", where), hw);
  if (hd.size() != n) bad(hw, "expected " + std::to_string(n) + " rows");
  for (std::size_t x = 0; x < n; ++x) {
    const Json& row = array(hd[x], at(hw, x));
    if (row.size() != n) bad(at(hw, x), "expected " + std::to_string(n) + " entries");
    std::vector<int> r;
    for (std::size_t y = 0; y < n; ++y) r.push_back(small_int(row[y], at(at(hw, x), y), 0, 64));
    d.hom_dim.push_back(r);
  }
  std::string cw = dot(where, "compose");
  const Json& comp = array(member(j, "compose", where), cw);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::string w = at(cw, i);
    FinCategory::Triple t;
    const char* keys[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; ++a) {
      t[static_cast<std::size_t>(a)] = small_int(member(comp[i], keys[a], w), dot(w, keys[a]), 0, static_cast<long>(n) - 1);
    }
    std::string vw = dot(w, "values");
    const Json& vals = array(member(comp[i], "values", w), vw);
    std::vector<Vec> vs;
    for (std::size_t v = 0; v < vals.size(); ++v) vs.push_back(vec_from_json(vals[v], at(vw, v)));
    if (d.compose.count(t)) bad(w, "duplicate triple");
    d.compose[t] = std::move(vs);
  }
  std::string iw = dot(where, "identity");
  const Json& ids = array(member(j, "identity", where), iw);
  for (std::size_t i = 0; i < ids.size(); ++i) d.identity.push_back(vec_from_json(ids[i], at(iw, i)));
  return FinCategory::create(std::move(d));
}

Json to_json(const CatModule& m) {
  Json action = Json::array();
  for (int p = 0; p < m.algebra().dim(); ++p) action.push_back(to_json(m.action(p)));
  return Json{{"dim", m.dim()}, {"action", action}};
}

CatModule module_from_json(const CategoryAlgebra& a, const Json& j, const std::string& where) {
  int n = small_int(member(j, "dim", where), dot(where, "dim"), 0, 1024);
  std::string aw = dot(where, "action");
  const Json& act = array(member(j, "action", where), aw);
  if (act.size() != static_cast<std::size_t>(a.dim())) {
    bad(aw, "expected one matrix per algebra basis element (" + std::to_string(a.dim()) + ")");
  }
  std::vector<Matrix> L;
  for (std::size_t p = 0; p < act.size(); ++p) L.push_back(matrix_from_json(act[p], n, n, at(aw, p)));
  return CatModule::create(a, n, std::move(L));
}

Json to_json(const CatFunctor& f) {
  Json maps = Json::array();
  for (const auto& [key, m] : f.maps) {
    maps.push_back(Json{{"x", key[0]}, {"y", key[1]}, {"index", key[2]}, {"matrix", to_json(m)}});
  }
  return Json{{"dims", f.dims}, {"maps", maps}};
}

CatFunctor functor_from_json(const Json& j, const std::string& where) {
  CatFunctor f;
  std::string dw = dot(where, "dims");
  const Json& dims = array(member(j, "dims", where), dw);
  for (std::size_t i = 0; i < dims.size(); ++i) f.dims.push_back(small_int(dims[i], at(dw, i), 0, 1024));
  const long n = static_cast<long>(f.dims.size());
  std::string mw = dot(where, "maps");
  const Json& maps = array(member(j, "maps", where), mw);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::string w = at(mw, i);
    int x = small_int(member(maps[i], "x", w), dot(w, "x"), 0, n - 1);
    int y = small_int(member(maps[i], "y", w), dot(w, "y"), 0, n - 1);
    int idx = small_int(member(maps[i], "index", w), dot(w, "index"), 0, 1024);
    FinCategory::Triple key{x, y, idx};
    if (f.maps.count(key)) bad(w, "duplicate map");
    f.maps[key] = matrix_from_json(member(maps[i], "matrix", w), f.dims[static_cast<std::size_t>(y)],
                                   f.dims[static_cast<std::size_t>(x)], dot(w, "matrix"));
  }
  return f;
}

Json to_json(const CoverSpec& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces()) {
    Json ex = Json::array();
    for (const auto& q : p.excluded) ex.push_back(to_json(q));
    pieces.push_back(Json{{"map", to_json(p.map)}, {"excluded", ex}});
  }
  return Json{{"field", to_json(c.field())}, {"pieces", pieces}};
}

CoverSpec cover_from_json(const Field& k, const Json& j, const std::string& where) {
  std::string pw = dot(where, "pieces");
  const Json& pieces = array(member(j, "pieces", where), pw);
  std::vector<CoverPiece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string w = at(pw, i);
    CoverPiece piece{function_from_json(k, member(pieces[i], "map", w), dot(w, "map")), {}};
    auto it = pieces[i].find("excluded");
    if (it != pieces[i].end()) {
      std::string ew = dot(w, "excluded");
      for (std::size_t e = 0; e < array(*it, ew).size(); ++e) piece.excluded.push_back(point_from_json(k, (*it)[e], at(ew, e)));
    }
    out.push_back(std::move(piece));
  }
  return CoverSpec::create(std::move(out));
}

Json to_json(const FiberPoint& z) {
  return Json{{"base", to_json(z.base)},
              {"first", to_json(z.first)},
              {"second", to_json(z.second)},
              {"component", z.component ? ext_to_json(*z.component) : Json(nullptr)},
              {"degree", z.degree},
              {"first_index", z.first_index},
              {"second_index", z.second_index}};
}

FiberPoint fiber_point_from_json(const Field& k, const Json& j, const std::string& where) {
  FiberPoint z;
  z.base = point_from_json(k, member(j, "base", where), dot(where, "base"));
  z.first = point_from_json(k, member(j, "first", where), dot(where, "first"));
  z.second = point_from_json(k, member(j, "second", where), dot(where, "second"));
  const Json& comp = member(j, "component", where);
  if (!comp.is_null()) {
    if (z.first.is_infinity()) bad(dot(where, "component"), "a component needs a finite first leg");
    z.component = ext_from_json(ExtField::create(z.first.poly(), false), comp, dot(where, "component"));
  }
  z.degree = small_int(member(j, "degree", where), dot(where, "degree"), 1, 1 << 20);
  z.first_index = small_int(member(j, "first_index", where), dot(where, "first_index"), 1, 1 << 20);
  z.second_index = small_int(member(j, "second_index", where), dot(where, "second_index"), 1, 1 << 20);
  return z;
}

Json to_json(const LiftCertificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(Json{{"coeff", rational_to_json(t.coeff)}, {"point", to_json(t.point)}});
  return Json{{"target", to_json(c.target)}, {"terms", terms}, {"replay", c.replay_ok}};
}

LiftCertificate lift_from_json(const Field& k, const Json& j, const std::string& where) {
  LiftCertificate c;
  c.target = cycle_from_json(k, member(j, "target", where), dot(where, "target"));
  std::string tw = dot(where, "terms");
  const Json& terms = array(member(j, "terms", where), tw);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string w = at(tw, i);
    c.terms.push_back({rational_from_json(member(terms[i], "coeff", w), dot(w, "coeff")),
                       fiber_point_from_json(k, member(terms[i], "point", w), dot(w, "point"))});
  }
  c.replay_ok = boolean(member(j, "replay", where), dot(where, "replay"));
  return c;
}

bool verify_lift(const RationalFunction& f, const LiftCertificate& c) {
  const Field& k = f.field();
  for (const auto& t : c.terms) {
    const FiberPoint& z = t.point;
    ImagePoint a = image(f, z.first), b = image(f, z.second);
    if (a.point != z.base || b.point != z.base) return false;
    if (z.degree != z.first_index * z.first.degree() || z.degree != z.second_index * z.second.degree()) return false;
    if (z.first.is_infinity() || z.second.is_infinity()) {
      if (z.component || z.degree != std::max(z.first.degree(), z.second.degree())) return false;
      continue;
    }
    if (!z.component) return false;
    const ExtPoly& r = *z.component;
    ExtField K = r.field();
    if (!(K.modulus() == z.first.poly()) || r.degree() != z.first_index || !r.is_monic()) return false;
    auto theta = K.gen();
    auto nf = embed(K, f.num()).eval(theta);
    auto df = embed(K, f.den()).eval(theta);
    ExtPoly h = embed(K, f.num()).scaled(df) - embed(K, f.den()).scaled(nf);
    if (!(embed(K, z.second.poly()) % r).is_zero() || !(h % r).is_zero()) return false;
    // r is one of the irreducible factors of the second leg over kappa(first).
    auto fs = factor_over_extension(z.second.poly(), K);
    if (std::none_of(fs.begin(), fs.end(), [&](const ExtFactor& e) { return e.poly == r; })) return false;
  }
  return replay(k, c.terms) == c.target;
}

const Json& json_member(const Json& j, const char* key, const std::string& where) { return member(j, key, where); }
const Json& json_array(const Json& j, const std::string& where) { return array(j, where); }
long json_integer(const Json& j, const std::string& where, long lo, long hi) {
  long v = integer(j, where);
  if (v < lo || v > hi) bad(where, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}
bool json_bool(const Json& j, const std::string& where) { return boolean(j, where); }
std::string json_text(const Json& j, const std::string& where) { return text(j, where); }

}  // namespace zc
