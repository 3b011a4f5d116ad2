// Acceptance suite: criteria 1-8 through `selftest`, and reproducibility of
// the selftest report as criterion 9. Exit status 0 iff every line passes.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zc/cli.hpp"

namespace {

zc::Report selftest(std::uint64_t seed) {
  zc::TaskDefaults d;
  d.seed = seed;
  return zc::execute(zc::parse_task_document(zc::Json{{"cmd", "selftest"}}, d));
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  const auto t0 = std::chrono::steady_clock::now();
  zc::Report first = selftest(seed);
  zc::Report second = selftest(seed);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool all = true;
  if (first.error_code) {
    std::printf("selftest error: %s\n", first.error_message.c_str());
    all = false;
  }
  for (const auto& c : first.checks) {
    std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    all = all && c.pass;
  }
  if (first.checks.size() != 8) {
    std::printf("[FAIL] expected 8 criteria from selftest, got %zu\n", first.checks.size());
    all = false;
  }

  const std::string a = zc::to_json(first, false).dump();
  const std::string b = zc::to_json(second, false).dump();
  const bool same = a == b;
  const bool fast = total < 600;
  std::printf("[%s] criterion 9: determinism: selftest --seed %llu twice gives %s reports (%zu bytes); "
              "both runs in %.1f s, limit 600 s\n",
              same && fast ? "PASS" : "FAIL", static_cast<unsigned long long>(seed),
              same ? "byte-identical" : "different", a.size(), total);
  all = all && same && fast;
  std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return all ? 0 : 1;
}
