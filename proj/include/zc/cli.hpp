#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zc/catalg.hpp"
#include "zc/corr.hpp"
#include "zc/cosheaf.hpp"
#include "zc/io.hpp"
#include "zc/ratequiv.hpp"
#include "zc/reduce.hpp"

namespace zc {

inline constexpr std::string_view kToolName = "zcycles";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Subcommand names in canonical order.
const std::vector<std::string>& command_names();

/// Command-line settings that apply when the document does not say otherwise.
struct TaskDefaults {
  std::optional<Field> field;
  std::uint64_t seed = 0;
  std::optional<int> degree_cap;
};

struct ReducePayload {
  ZeroCycle cycle;
  std::optional<std::uint64_t> anchor_seed;
};
struct WitnessPayload {
  ZeroCycle cycle;
  RationalFunction function;
};
struct ActPayload {
  Correspondence corr;
  ZeroCycle cycle;
};
struct ComposePayload {
  Correspondence b, a;  // b o a
  std::optional<ZeroCycle> cycle;
};
struct DivisorPayload {
  RationalFunction function;
};
struct RattestPayload {
  ZeroCycle cycle;
};
struct EcPayload {
  std::string op;  // add, neg, mul, torsion, aj
  WeierstrassCurve curve;
  std::optional<ECPoint> p, q;
  Integer n;
  std::optional<ECCycle> cycle;
};
struct LayerPayload {
  ECCycle cycle;
};
struct CatalgPayload {
  std::string op;  // build, radical, loewy, simple, morita
  FinCategory category;
  std::optional<CatFunctor> functor;
  std::optional<CatModule> module;
};
struct CosheafPayload {
  std::string op;  // surj, lift, exact
  std::optional<CoverSpec> cover;
  std::optional<RationalFunction> map;
  std::vector<ZeroCycle> samples;
  int random_samples = 0;
  int degree = 3;
  CosheafOptions options;
};
struct Task;
struct VerifyPayload {
  std::shared_ptr<Task> original;  // the task echoed by the report
  Json certificates;
};
struct SelftestPayload {};

using Payload = std::variant<ReducePayload, WitnessPayload, ActPayload, ComposePayload, DivisorPayload, RattestPayload,
                             EcPayload, LayerPayload, CatalgPayload, CosheafPayload, VerifyPayload, SelftestPayload>;

struct Task {
  std::string cmd;
  Field field;
  std::uint64_t seed = 0;
  FactorOptions factor;
  Json echo;  // the document with field, seed and degree_cap resolved
  Payload payload;
};

/// Parses and validates a task document {"cmd": ..., ...}. The field is the
/// document's "field", else defaults.field, else the field attached to the
/// first wrapped payload ({"field", <kind>: value}), else Q; any payload
/// carrying a different field raises FieldMismatch. Errors name the
/// offending location.
Task parse_task(std::string_view text, const TaskDefaults& defaults = {});
Task parse_task_document(const Json& doc, const TaskDefaults& defaults = {});

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string cmd;
  std::uint64_t seed = 0;
  std::optional<Field> field;
  Json task;  // echo
  std::vector<Check> checks;
  Json result = Json::object();
  Json certificates = Json::object();
  std::optional<ErrorCode> error_code;
  std::string error_message;
  Json timing = Json::object();

  bool pass() const;
  /// 0 when every check passes, 3 for internal errors, 2 otherwise.
  int exit_code() const;
};

/// Dispatches to the module operation. Module errors become a failed report.
Report execute(const Task& t);

/// Report for a task that failed before execution (parse or validation).
Report error_report(std::string cmd, const Error& e);

Json to_json(const Report& r, bool include_timing = true);
std::string render_text(const Report& r);

}  // namespace zc
