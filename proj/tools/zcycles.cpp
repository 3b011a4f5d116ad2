#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zc/cli.hpp"

namespace {

zc::Field parse_field_flag(const std::string& s) {
  if (s == "Q") return zc::Field::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(s.substr(3), &used);
      if (used == s.size() - 3) return zc::Field::prime(p);
    } catch (const std::logic_error&) {
    }
  }
  zc::fail(zc::ErrorCode::Parse, "--field: expected Q or Fp:<p>, got \"" + s + "\"");
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) zc::fail(zc::ErrorCode::Parse, path + ": cannot open input");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes next to the target and renames, so readers never see a partial report.
void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp + ": cannot open for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error(tmp + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

// The task document for a subcommand: "cmd" is filled in when absent, and a
// report handed to verify is wrapped as {"cmd": "verify", "report": ...}.
zc::Json task_document(const std::string& sub, const std::string& input) {
  if (sub == "selftest" && input.empty()) return zc::Json{{"cmd", "selftest"}};
  zc::Json doc;
  try {
    doc = zc::Json::parse(read_input(input));
  } catch (const nlohmann::json::parse_error& e) {
    zc::fail(zc::ErrorCode::Parse, input + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) zc::fail(zc::ErrorCode::Parse, input + ": expected an object");
  if (sub == "run") return doc;
  if (sub == "verify" && doc.contains("tool")) return zc::Json{{"cmd", "verify"}, {"report", doc}};
  if (auto it = doc.find("cmd"); it != doc.end()) {
    if (*it != sub) zc::fail(zc::ErrorCode::Parse, "cmd: document says " + it->dump() + " but the subcommand is " + sub);
    return doc;
  }
  zc::Json out{{"cmd", sub}};
  for (auto& [k, v] : doc.items()) out[k] = v;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 0-cycle, correspondence and category-algebra verifiers"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_flag, out_path, format = "json";
  std::uint64_t seed = 0;
  int degree_cap = 0;
  app.add_option("--field", field_flag, "Base field: Q or Fp:<p>");
  app.add_option("--seed", seed, "Seed for all randomness")->default_val(0);
  app.add_option("--degree-cap", degree_cap, "Largest polynomial degree factored over Q")->check(CLI::Range(1, 4096));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string input;
  std::vector<std::string> subs = zc::command_names();
  subs.push_back("run");
  for (const auto& name : subs) {
    std::string help = name == "run" ? "Run a task document carrying its own \"cmd\""
                       : name == "verify" ? "Replay the certificates embedded in a report"
                       : name == "selftest" ? "Run the acceptance criteria"
                                            : "Run the " + name + " task in the input document";
    CLI::App* s = app.add_subcommand(name, help);
    auto* opt = s->add_option("input", input, "Task document (- for stdin)");
    if (name != "selftest") opt->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string sub = app.get_subcommands().front()->get_name();

  zc::Report report;
  try {
    zc::TaskDefaults defaults;
    if (!field_flag.empty()) defaults.field = parse_field_flag(field_flag);
    defaults.seed = seed;
    if (degree_cap > 0) defaults.degree_cap = degree_cap;
    zc::Task task = zc::parse_task_document(task_document(sub, input), defaults);
    report = zc::execute(task);
  } catch (const zc::Error& e) {
    report = zc::error_report(sub, e);
    report.seed = seed;
  } catch (const std::exception& e) {
    report = zc::error_report(sub, zc::Error(zc::ErrorCode::Internal, e.what()));
  }

  const std::string text = format == "text" ? zc::render_text(report) : zc::to_json(report).dump(2) + "\n";
  try {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_atomic(out_path, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "zcycles: " << e.what() << "\n";
    return 3;
  }
  return report.exit_code();
}
