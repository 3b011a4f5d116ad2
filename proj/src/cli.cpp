#include "zc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>

#include "zc/acceptance.hpp"
#include "zc/random.hpp"

namespace zc {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { fail(ErrorCode::Parse, where + ": " + what); }

const Json* optional_member(const Json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() ? nullptr : &*it;
}

std::uint64_t read_seed(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  return static_cast<std::uint64_t>(json_integer(j, where, 0, std::numeric_limits<long>::max()));
}

// A payload value is either bare or wrapped as {"field": ..., <kind>: value}.
bool is_wrapped(const Json& v) { return v.is_object() && v.contains("field"); }

std::optional<Field> wrapped_field(const Json& v, const std::string& where) {
  if (!is_wrapped(v)) return std::nullopt;
  return field_from_json(v["field"], where + ".field");
}

class Reader {
 public:
  Reader(const Json& doc, Field k, FactorOptions opts) : doc_(doc), k_(k), opts_(opts) {}

  const Field& field() const { return k_; }
  const FactorOptions& factor() const { return opts_; }
  const Json& doc() const { return doc_; }
  const Json& get(const char* key) const { return json_member(doc_, key, "task"); }
  bool has(const char* key) const { return doc_.contains(key); }

  // Unwraps a payload, checking its field against the task field.
  const Json& unwrap(const Json& v, const char* kind, const std::string& where) const {
    if (auto f = wrapped_field(v, where)) {
      if (!(*f == k_)) {
        fail(ErrorCode::FieldMismatch, where + ": field " + f->name() + " does not match the task field " + k_.name());
      }
      return json_member(v, kind, where);
    }
    return v;
  }

  ZeroCycle cycle(const Json& v, const std::string& where) const {
    const Json& body = unwrap(v, "cycle", where);
    return cycle_from_json(k_, body, is_wrapped(v) ? where + ".cycle" : where, opts_);
  }
  ZeroCycle cycle(const char* key) const { return cycle(get(key), key); }

  Correspondence corr(const char* key) const {
    const Json& v = get(key);
    return correspondence_from_json(k_, unwrap(v, "corr", key), is_wrapped(v) ? std::string(key) + ".corr" : key,
                                    opts_);
  }

  RationalFunction function(const char* key) const {
    const Json& v = get(key);
    return function_from_json(k_, unwrap(v, "function", key),
                              is_wrapped(v) ? std::string(key) + ".function" : key);
  }

  std::string op(const std::vector<std::string>& allowed) const {
    std::string o = json_text(get("op"), "op");
    if (std::find(allowed.begin(), allowed.end(), o) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      bad("op", "unknown operation \"" + o + "\" (expected one of " + list + ")");
    }
    return o;
  }

 private:
  const Json& doc_;
  Field k_;
  FactorOptions opts_;
};

// Members that may carry a wrapped field, in the order they are consulted.
std::optional<Field> payload_field(const Json& doc) {
  for (const char* key : {"cycle", "corr", "b", "a", "function", "map", "cover"}) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (auto f = wrapped_field(*it, key)) return f;
    }
  }
  return std::nullopt;
}

CatModule catalg_module(const Reader& r, const CategoryAlgebra& A, std::optional<CatFunctor>& functor) {
  const FinCategory& c = A.category();
  if (r.has("module")) return module_from_json(A, r.get("module"), "module");
  if (r.has("functor")) {
    functor = functor_from_json(r.get("functor"), "functor");
    return functor_to_module(A, *functor);
  }
  if (r.has("representable")) {
    int x = static_cast<int>(json_integer(r.get("representable"), "representable", 0, c.num_objects() - 1));
    functor = representable(c, x);
    return functor_to_module(A, *functor);
  }
  bad("task", "missing \"module\", \"functor\" or \"representable\"");
}

Payload parse_payload(const std::string& cmd, const Reader& r, const TaskDefaults& defaults);

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"reduce", "witness", "act",     "compose", "divisor", "rattest", "ec",
                                                 "layer",  "catalg",  "cosheaf", "verify",  "selftest"};
  return names;
}

Task parse_task(std::string_view text, const TaskDefaults& defaults) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad("document", std::string("malformed JSON (") + e.what() + ")");
  }
  return parse_task_document(doc, defaults);
}

Task parse_task_document(const Json& doc, const TaskDefaults& defaults) {
  if (!doc.is_object()) bad("document", "expected an object");
  Task t;
  t.cmd = json_text(json_member(doc, "cmd", "document"), "cmd");
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), t.cmd) == names.end()) {
    fail(ErrorCode::UnknownCommand, "cmd: unknown command \"" + t.cmd + "\"");
  }

  if (const Json* f = optional_member(doc, "field")) {
    t.field = field_from_json(*f, "field");
    if (defaults.field && !(*defaults.field == t.field)) {
      fail(ErrorCode::FieldMismatch,
           "field: document field " + t.field.name() + " does not match --field " + defaults.field->name());
    }
  } else if (defaults.field) {
    t.field = *defaults.field;
  } else if (auto pf = payload_field(doc)) {
    t.field = *pf;
  }

  t.seed = defaults.seed;
  if (const Json* s = optional_member(doc, "seed")) t.seed = read_seed(*s, "seed");
  if (defaults.degree_cap) t.factor.degree_cap = *defaults.degree_cap;
  if (const Json* d = optional_member(doc, "degree_cap")) {
    t.factor.degree_cap = static_cast<int>(json_integer(*d, "degree_cap", 1, 4096));
  }
  t.factor.seed = t.seed;

  t.echo = doc;
  t.echo["field"] = to_json(t.field);
  t.echo["seed"] = t.seed;
  t.echo["degree_cap"] = t.factor.degree_cap;

  Reader r(doc, t.field, t.factor);
  t.payload = parse_payload(t.cmd, r, defaults);
  if (const auto* v = std::get_if<VerifyPayload>(&t.payload)) {
    t.field = v->original->field;
    t.echo["field"] = to_json(t.field);
  }
  return t;
}

namespace {

Payload parse_payload(const std::string& cmd, const Reader& r, const TaskDefaults& defaults) {
  const Field& k = r.field();
  if (cmd == "reduce") {
    ReducePayload p{r.cycle("cycle"), std::nullopt};
    if (r.has("anchor_seed")) p.anchor_seed = read_seed(r.get("anchor_seed"), "anchor_seed");
    return p;
  }
  if (cmd == "witness") return WitnessPayload{r.cycle("cycle"), r.function("function")};
  if (cmd == "act") return ActPayload{r.corr("corr"), r.cycle("cycle")};
  if (cmd == "compose") {
    ComposePayload p{r.corr("b"), r.corr("a"), std::nullopt};
    if (r.has("cycle")) p.cycle = r.cycle("cycle");
    return p;
  }
  if (cmd == "divisor") return DivisorPayload{r.function("function")};
  if (cmd == "rattest") return RattestPayload{r.cycle("cycle")};
  if (cmd == "ec") {
    EcPayload p;
    p.op = r.op({"add", "neg", "mul", "torsion", "aj"});
    p.curve = curve_from_json(r.get("curve"), "curve");
    if (p.op == "aj") {
      p.cycle = ec_cycle_from_json(p.curve, r.get("cycle"), "cycle");
      return p;
    }
    p.p = ec_point_from_json(p.curve, r.get("p"), "p");
    if (p.op == "add") p.q = ec_point_from_json(p.curve, r.get("q"), "q");
    if (p.op == "mul") {
      const Json& n = r.get("n");
      if (n.is_string()) {
        std::string s = n.get<std::string>();
        if (p.n.set_str(s, 10) != 0) bad("n", "expected an integer");
      } else {
        p.n = json_integer(n, "n", std::numeric_limits<long>::min(), std::numeric_limits<long>::max());
      }
    }
    return p;
  }
  if (cmd == "layer") {
    WeierstrassCurve e = curve_from_json(r.get("curve"), "curve");
    return LayerPayload{ec_cycle_from_json(e, r.get("cycle"), "cycle")};
  }
  if (cmd == "catalg") {
    CatalgPayload p;
    p.op = r.op({"build", "radical", "loewy", "simple", "morita"});
    p.category = category_from_json(r.get("category"), "category");
    if (p.op == "loewy" || p.op == "simple" || p.op == "morita") {
      p.module = catalg_module(r, CategoryAlgebra::build(p.category), p.functor);
    }
    return p;
  }
  if (cmd == "cosheaf") {
    CosheafPayload p;
    p.op = r.op({"surj", "lift", "exact"});
    p.options.factor = r.factor();
    if (r.has("degree")) p.degree = static_cast<int>(json_integer(r.get("degree"), "degree", 1, 8));
    if (r.has("rational_only")) p.options.rational_only = json_bool(r.get("rational_only"), "rational_only");
    if (r.has("test_points")) {
      const Json& pts = json_array(r.get("test_points"), "test_points");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        p.options.test_points.push_back(
            point_from_json(k, pts[i], "test_points[" + std::to_string(i) + "]", r.factor()));
      }
    }
    if (p.op == "surj") {
      if (r.has("cover")) {
        const Json& c = r.get("cover");
        if (auto f = wrapped_field(c, "cover"); f && !(*f == k)) {
          fail(ErrorCode::FieldMismatch, "cover: field " + f->name() + " does not match the task field " + k.name());
        }
        p.cover = cover_from_json(k, c, "cover");
      } else {
        p.cover = CoverSpec::create({CoverPiece{r.function("map"), {}}});
      }
      return p;
    }
    p.map = r.function("map");
    require_nonconstant(*p.map);
    if (p.op == "lift") {
      p.samples.push_back(r.cycle("cycle"));
      return p;
    }
    if (r.has("samples")) {
      const Json& s = json_array(r.get("samples"), "samples");
      for (std::size_t i = 0; i < s.size(); ++i) p.samples.push_back(r.cycle(s[i], "samples[" + std::to_string(i) + "]"));
    }
    if (r.has("random_samples")) {
      p.random_samples = static_cast<int>(json_integer(r.get("random_samples"), "random_samples", 0, 10000));
    }
    if (p.samples.empty() && p.random_samples == 0) bad("task", "missing \"samples\" or \"random_samples\"");
    return p;
  }
  if (cmd == "verify") {
    const Json& rep = r.get("report");
    if (!rep.is_object()) bad("report", "expected an object");
    VerifyPayload p;
    TaskDefaults inner;
    inner.seed = defaults.seed;
    Task original = parse_task_document(json_member(rep, "task", "report"), inner);
    if (original.cmd == "verify" || original.cmd == "selftest") {
      bad("report.task.cmd", "a " + original.cmd + " report carries no certificates");
    }
    if ((r.has("field") || defaults.field) && !(original.field == k)) {
      fail(ErrorCode::FieldMismatch, "report.task.field: " + original.field.name() + " does not match " + k.name());
    }
    p.original = std::make_shared<Task>(std::move(original));
    p.certificates = json_member(rep, "certificates", "report");
    if (!p.certificates.is_object()) bad("report.certificates", "expected an object");
    return p;
  }
  return SelftestPayload{};
}

// Execution ----------------------------------------------------------------

struct Outcome {
  std::vector<Check> checks;
  Json result = Json::object();
  Json certificates = Json::object();
  Json timing = Json::object();

  void check(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

Json point_pair(const std::optional<ZeroCycle>& z) { return z ? to_json(*z) : Json(nullptr); }

Json layer_json(const ECCycle& c, Json& certs) {
  Json out{{"degree", rational_to_json(degree(c))}};
  const Layer l = classify_layer(c);
  out["layer"] = std::string(layer_name(l));
  if (l != Layer::Unit) {
    AJSum aj = aj_sum(c);
    auto order = ec_is_torsion(c.curve(), aj.point);
    Json ajj{{"point", to_json(aj.point)}, {"denominator", aj.denominator.get_str()}};
    out["aj"] = ajj;
    out["torsion_order"] = order ? Json(*order) : Json(nullptr);
    certs["aj"] = ajj;
    certs["torsion_order"] = out["torsion_order"];
  }
  return out;
}

Outcome run(const Task& t, const ReducePayload& p) {
  Outcome o;
  ReduceOptions opts;
  opts.anchor_seed = p.anchor_seed;
  opts.factor = t.factor;
  ReductionCertificate cert = reduce_p1(p.cycle, opts);
  const bool replayed = act(cert.theta, p.cycle) == standard_cycle(t.field);
  o.check("replay act(theta, xi) = [0]-[inf]", replayed && cert.replay);
  o.check("chain composes to theta", verify_reduction(cert));
  o.result = Json{{"theta", to_json(cert.theta)},
                  {"composite", {{"num", to_json(cert.composite_num)}, {"den", to_json(cert.composite_den)}}},
                  {"scaling", rational_to_json(cert.scaling)},
                  {"replay", replayed ? "pass" : "fail"}};
  o.certificates["reduction"] = to_json(cert);
  return o;
}

Outcome run(const Task& t, const WitnessPayload& p) {
  Outcome o;
  ReduceOptions opts;
  opts.factor = t.factor;
  ReductionCertificate cert = reduce_p1(p.cycle, opts);
  Correspondence c = rational_witness_correspondence(p.cycle, p.function, opts);
  ZeroCycle div = principal_divisor(p.function);
  o.check("replay act(c, xi) = div(r)", act(c, p.cycle, t.factor) == div);
  o.result = Json{{"correspondence", to_json(c)}, {"divisor", to_json(div)}};
  o.certificates["reduction"] = to_json(cert);
  o.certificates["correspondence"] = to_json(c);
  return o;
}

Rational expected_degree(const Correspondence& c, const ZeroCycle& z) {
  Rational s = 0;
  for (const auto& [p, coeff] : c.terms()) s += coeff * p.dy();
  return s * degree(z);
}

Outcome run(const Task& t, const ActPayload& p) {
  Outcome o;
  ZeroCycle image = act(p.corr, p.cycle, t.factor);
  o.check("degree of the image", degree(image) == expected_degree(p.corr, p.cycle),
          "deg = " + format_rational(degree(image)));
  o.result = Json{{"cycle", to_json(image)}};
  o.certificates["image"] = to_json(image);
  return o;
}

Outcome run(const Task& t, const ComposePayload& p) {
  Outcome o;
  Correspondence c = compose(p.b, p.a, t.factor);
  if (p.cycle) {
    o.check("act(b o a, z) = act(b, act(a, z))",
            act(c, *p.cycle, t.factor) == act(p.b, act(p.a, *p.cycle, t.factor), t.factor));
  }
  o.result = Json{{"composite", to_json(c)}};
  o.certificates["composite"] = to_json(c);
  return o;
}

Outcome run(const Task&, const DivisorPayload& p) {
  Outcome o;
  ZeroCycle d = principal_divisor(p.function);
  o.check("degree zero", sgn(degree(d)) == 0);
  o.result = Json{{"divisor", to_json(d)}};
  o.certificates["divisor"] = to_json(d);
  return o;
}

Outcome run(const Task& t, const RattestPayload& p) {
  Outcome o;
  const bool trivial = is_rationally_trivial_p1(p.cycle);
  o.result = Json{{"degree", rational_to_json(degree(p.cycle))}, {"rationally_trivial", trivial}};
  if (trivial) {
    auto w = rational_witness_p1(p.cycle);
    o.check("witness expands to the cycle", expand_witness(t.field, w) == p.cycle);
    Json terms = Json::array();
    for (const auto& term : w) terms.push_back(to_json(term));
    o.certificates["witness"] = terms;
  } else {
    o.check("nonzero degree certifies nontriviality", sgn(degree(p.cycle)) != 0);
  }
  return o;
}

Outcome run(const Task&, const EcPayload& p) {
  Outcome o;
  const WeierstrassCurve& e = p.curve;
  if (p.op == "add") o.result = Json{{"point", to_json(ec_add(e, *p.p, *p.q))}};
  if (p.op == "neg") o.result = Json{{"point", to_json(ec_neg(e, *p.p))}};
  if (p.op == "mul") o.result = Json{{"point", to_json(ec_mul(e, p.n, *p.p))}};
  if (p.op == "torsion") {
    auto order = ec_is_torsion(e, *p.p);
    o.result = Json{{"torsion_order", order ? Json(*order) : Json(nullptr)}};
    if (order) o.check("order kills the point", ec_mul(e, *order, *p.p).is_origin());
  }
  if (p.op == "aj") {
    AJSum aj = aj_sum(*p.cycle);
    o.result = Json{{"point", to_json(aj.point)}, {"denominator", aj.denominator.get_str()}};
  }
  return o;
}

Outcome run(const Task&, const LayerPayload& p) {
  Outcome o;
  o.result = layer_json(p.cycle, o.certificates);
  return o;
}

Json subspace_dims(const std::vector<Subspace>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.size());
  return out;
}

Outcome run(const Task&, const CatalgPayload& p) {
  Outcome o;
  CategoryAlgebra A = CategoryAlgebra::build(p.category);
  if (p.op == "build") {
    o.check("associativity and identities", true);
    o.result = Json{{"objects", p.category.num_objects()}, {"dim", A.dim()}, {"category", to_json(p.category)}};
  } else if (p.op == "radical") {
    RadicalReport r = algebra_radical(A);
    Json basis = Json::array();
    for (const auto& v : r.basis) basis.push_back(vec_to_json(v));
    o.result = Json{{"dim", r.basis.size()}, {"basis", basis}, {"nilpotency_index", r.nilpotency_index}};
    o.check("J is a nilpotent two-sided ideal", true);
  } else if (p.op == "loewy") {
    const CatModule& M = *p.module;
    const int len = loewy_length(M);
    auto rad = radical_series(M);
    auto soc = socle_series(M);
    o.check("radical and socle series have equal length",
            static_cast<int>(rad.size()) == len + 1 && static_cast<int>(soc.size()) == len + 1);
    o.result = Json{{"module_dim", M.dim()},
                    {"length", len},
                    {"radical_series_dims", subspace_dims(rad)},
                    {"socle_series_dims", subspace_dims(soc)}};
  } else if (p.op == "simple") {
    SimplicityReport s = is_absolutely_simple(*p.module);
    o.result = Json{{"module_dim", p.module->dim()},
                    {"simple", s.simple},
                    {"end_dim", s.end_dim},
                    {"absolutely_simple", s.absolutely_simple()},
                    {"certificate", s.certificate}};
  } else {
    MoritaCertificate c = p.functor ? morita_round_trip(A, *p.functor) : morita_round_trip(*p.module);
    o.check("functor round trip", c.functor_ok);
    o.check("module round trip", c.module_ok);
    Json iso = Json::array();
    for (const auto& m : c.functor_iso) iso.push_back(to_json(m));
    o.result = Json{{"functor_ok", c.functor_ok}, {"module_ok", c.module_ok}};
    o.certificates["functor_iso"] = iso;
    o.certificates["module_iso"] = to_json(c.module_iso);
  }
  return o;
}

Json surjectivity_json(const SurjectivityReport& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back(Json{{"base", to_json(e.base)},
                           {"piece", e.piece},
                           {"source", e.source ? to_json(*e.source) : Json(nullptr)}});
  }
  Json gaps = Json::array();
  for (const auto& g : s.gaps()) gaps.push_back(to_json(g));
  return Json{{"gap_free", s.gap_free()}, {"gaps", gaps}, {"entries", entries}};
}

// Explicit samples followed by seeded random kernel elements.
std::vector<ZeroCycle> cosheaf_samples(const Task& t, const CosheafPayload& p) {
  std::vector<ZeroCycle> samples = p.samples;
  std::mt19937_64 rng(t.seed);
  for (int i = 0; i < p.random_samples; ++i) samples.push_back(random_kernel_element(*p.map, rng, p.degree, p.options));
  return samples;
}

Outcome run(const Task& t, const CosheafPayload& p) {
  Outcome o;
  if (p.op == "surj") {
    SurjectivityReport s = surjectivity_check(*p.cover, p.degree, p.options);
    o.check("surjectivity on base points of degree <= " + std::to_string(p.degree), s.gap_free(),
            std::to_string(s.gaps().size()) + " gaps");
    o.result = surjectivity_json(s);
    return o;
  }
  const RationalFunction& f = *p.map;
  if (p.op == "lift") {
    LiftCertificate c = kernel_certificate(f, p.samples.front(), p.options);
    o.check("lift replays to the cycle", c.replay_ok && replay(t.field, c.terms) == p.samples.front());
    o.result = Json{{"terms", c.terms.size()}};
    o.certificates["lifts"] = Json::array({to_json(c)});
    return o;
  }
  std::vector<ZeroCycle> samples = cosheaf_samples(t, p);
  ExactnessReport r = verify_exactness(f, samples, p.degree, p.options);
  int in_kernel = 0;
  Json rows = Json::array();
  Json lifts = Json::array();
  for (const auto& s : r.samples) {
    Json row{{"sample", to_json(s.sample)}, {"in_kernel", s.in_kernel}, {"image", point_pair(s.image)}};
    if (!s.error.empty()) row["error"] = s.error;
    rows.push_back(row);
    if (s.in_kernel) ++in_kernel;
    if (s.certificate) lifts.push_back(to_json(*s.certificate));
  }
  std::size_t gaps = 0;
  for (const auto& e : r.surjectivity) gaps += e.preimage ? 0 : 1;
  o.check("surjectivity", r.surjective(), std::to_string(gaps) + " of " + std::to_string(r.surjectivity.size()) +
                                              " base points without preimage");
  o.check("kernel elements lift", r.kernel_ok(),
          std::to_string(in_kernel) + " of " + std::to_string(r.samples.size()) + " samples in the kernel");
  o.check("complex: f_* (pr1_* - pr2_*) = 0", r.complex_ok(),
          std::to_string(r.fiber_points_checked) + " fiber points");
  o.result = Json{{"surjective", r.surjective()},
                  {"kernel_ok", r.kernel_ok()},
                  {"complex_ok", r.complex_ok()},
                  {"base_points", r.surjectivity.size()},
                  {"fiber_points_checked", r.fiber_points_checked},
                  {"samples", rows}};
  o.certificates["lifts"] = lifts;
  return o;
}

// Replays the certificates of a report against its echoed task.
Outcome run(const Task&, const VerifyPayload& p) {
  Outcome o;
  const Task& t = *p.original;
  const Json& certs = p.certificates;
  const Field& k = t.field;
  int checked = 0;
  auto cert = [&](const char* key) -> const Json& { return json_member(certs, key, "report.certificates"); };

  if (const auto* x = std::get_if<ReducePayload>(&t.payload)) {
    ReductionCertificate c = reduction_from_json(k, cert("reduction"), "report.certificates.reduction");
    o.check("reduction certificate replays", verify_reduction(c) && c.input == x->cycle);
    ++checked;
  } else if (const auto* x = std::get_if<WitnessPayload>(&t.payload)) {
    ReductionCertificate c = reduction_from_json(k, cert("reduction"), "report.certificates.reduction");
    o.check("reduction certificate replays", verify_reduction(c) && c.input == x->cycle);
    Correspondence w =
        correspondence_from_json(k, cert("correspondence"), "report.certificates.correspondence", t.factor);
    o.check("act(c, xi) = div(r)", act(w, x->cycle, t.factor) == principal_divisor(x->function));
    checked += 2;
  } else if (const auto* x = std::get_if<ActPayload>(&t.payload)) {
    ZeroCycle img = cycle_from_json(k, cert("image"), "report.certificates.image", t.factor);
    o.check("image recomputed", act(x->corr, x->cycle, t.factor) == img);
    ++checked;
  } else if (const auto* x = std::get_if<ComposePayload>(&t.payload)) {
    Correspondence c = correspondence_from_json(k, cert("composite"), "report.certificates.composite", t.factor);
    o.check("composite recomputed", compose(x->b, x->a, t.factor) == c);
    ++checked;
  } else if (const auto* x = std::get_if<DivisorPayload>(&t.payload)) {
    ZeroCycle d = cycle_from_json(k, cert("divisor"), "report.certificates.divisor", t.factor);
    o.check("divisor recomputed", principal_divisor(x->function) == d);
    ++checked;
  } else if (const auto* x = std::get_if<RattestPayload>(&t.payload)) {
    if (certs.contains("witness")) {
      auto w = witness_terms_from_json(k, cert("witness"), "report.certificates.witness");
      o.check("witness expands to the cycle", expand_witness(k, w) == x->cycle);
    } else {
      o.check("nonzero degree certifies nontriviality", sgn(degree(x->cycle)) != 0);
    }
    ++checked;
  } else if (const auto* x = std::get_if<LayerPayload>(&t.payload)) {
    if (certs.contains("aj")) {
      const WeierstrassCurve& e = x->cycle.curve();
      ECPoint pt = ec_point_from_json(e, json_member(cert("aj"), "point", "report.certificates.aj"),
                                      "report.certificates.aj.point");
      AJSum aj = aj_sum(x->cycle);
      o.check("Abel-Jacobi sum recomputed", aj.point == pt);
      const Json& ord = cert("torsion_order");
      if (ord.is_null()) {
        bool clear = true;
        for (int n = 1; n <= 12; ++n) clear = clear && !ec_mul(e, n, pt).is_origin();
        o.check("nP != O for n <= 12", clear);
      } else {
        long n = json_integer(ord, "report.certificates.torsion_order", 1, 12);
        o.check("order kills the sum", ec_mul(e, n, pt).is_origin());
      }
      checked += 2;
    } else {
      o.check("nonzero degree", sgn(degree(x->cycle)) != 0);
      ++checked;
    }
  } else if (const auto* x = std::get_if<CosheafPayload>(&t.payload); x && x->op != "surj") {
    const Json& lifts = json_array(cert("lifts"), "report.certificates.lifts");
    std::vector<ZeroCycle> targets;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      std::string where = "report.certificates.lifts[" + std::to_string(i) + "]";
      LiftCertificate c = lift_from_json(k, lifts[i], where);
      o.check("lift " + std::to_string(i) + " replays", verify_lift(*x->map, c));
      targets.push_back(c.target);
      ++checked;
    }
    // Every sample in the kernel has a lift, and every lift is of a sample.
    std::vector<ZeroCycle> expected;
    for (const auto& s : cosheaf_samples(t, *x)) {
      if (pushforward(*x->map, s).is_zero()) expected.push_back(s);
    }
    o.check("lifts cover exactly the kernel samples", targets == expected,
            std::to_string(targets.size()) + " lifts, " + std::to_string(expected.size()) + " kernel samples");
  } else {
    fail(ErrorCode::Precondition, "report.task.cmd: " + t.cmd + " reports carry no replayable certificates");
  }
  o.result = Json{{"verified_cmd", t.cmd}, {"certificates_checked", checked}};
  return o;
}

Outcome run(const Task& t, const SelftestPayload&) {
  Outcome o;
  Json criteria = Json::array();
  Json times = Json::array();
  for (const CriterionResult& c : run_acceptance(t.seed)) {
    o.check("criterion " + std::to_string(c.id) + ": " + c.name, c.pass, c.detail);
    criteria.push_back(Json{{"id", c.id},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"cases", c.cases},
                            {"failures", c.failures},
                            {"detail", c.detail}});
    times.push_back(Json{{"id", c.id}, {"seconds", c.seconds}});
  }
  o.result = Json{{"criteria", criteria}};
  o.timing["criteria"] = times;
  return o;
}

}  // namespace

bool Report::pass() const {
  return !error_code && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int Report::exit_code() const {
  if (pass()) return 0;
  return error_code == ErrorCode::Internal ? 3 : 2;
}

Report execute(const Task& t) {
  Report r;
  r.cmd = t.cmd;
  r.seed = t.seed;
  r.field = t.field;
  r.task = t.echo;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = std::visit([&](const auto& p) { return run(t, p); }, t.payload);
    r.checks = std::move(o.checks);
    r.result = std::move(o.result);
    r.certificates = std::move(o.certificates);
    r.timing = std::move(o.timing);
  } catch (const Error& e) {
    r.error_code = e.code();
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.error_code = ErrorCode::Internal;
    r.error_message = e.what();
  }
  r.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Report error_report(std::string cmd, const Error& e) {
  Report r;
  r.cmd = std::move(cmd);
  r.task = nullptr;
  r.error_code = e.code();
  r.error_message = e.what();
  return r;
}

Json to_json(const Report& r, bool include_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json row{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(row);
  }
  Json out{{"tool", std::string(kToolName)},
           {"version", std::string(kToolVersion)},
           {"cmd", r.cmd},
           {"seed", r.seed},
           {"field", r.field ? to_json(*r.field) : Json(nullptr)},
           {"task", r.task},
           {"outcome", r.error_code ? "error" : r.pass() ? "pass" : "fail"},
           {"checks", checks},
           {"result", r.result},
           {"certificates", r.certificates},
           {"error", r.error_code ? Json{{"code", std::string(error_code_name(*r.error_code))},
                                         {"message", r.error_message}}
                                  : Json(nullptr)}};
  if (include_timing) out["timing"] = r.timing;
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream s;
  s << kToolName << " " << kToolVersion << "  " << r.cmd;
  if (r.field) s << "  field=" << r.field->name();
  s << "  seed=" << r.seed << "\n";
  s << "outcome: " << (r.error_code ? "error" : r.pass() ? "pass" : "fail") << "\n";
  if (r.error_code) s << "error: " << error_code_name(*r.error_code) << ": " << r.error_message << "\n";
  for (const auto& c : r.checks) {
    s << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) s << " (" << c.detail << ")";
    s << "\n";
  }
  if (!r.result.empty()) s << "result: " << r.result.dump(2) << "\n";
  return s.str();
}

}  // namespace zc
