// Runs the ten acceptance criteria and prints one line per criterion.
// Usage: regulab_acceptance [criterion ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "regulab/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double budget_secs;
};

const std::vector<Criterion> kCriteria = {
    {1, "Froberg equivalence", {"froberg"}, 5 * 60},
    {2, "regularity at most 3", {"reg-le-3"}, 10 * 60},
    {3, "squares and the C5 cube", {"main-theorem-s2", "main-theorem-c5-s3"}, 60 * 60},
    {4, "colon values", {"colon-values"}, 5 * 60},
    {5, "sufficiency pipeline", {"banerjee-sufficiency"}, 20 * 60},
    {6, "even-connection oracle", {"even-connection-oracle"}, 15 * 60},
    {7, "ordered colon decomposition", {"ordered-colon"}, 10 * 60},
    {8, "structural lemmas", {"structure-lemmas"}, 15 * 60},
    {9, "classification round trip", {"classification"}, 5 * 60},
    {10, "field robustness", {"field-robustness"}, 60 * 60},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    std::size_t total = 0, passed = 0;
    bool ok = true;
    std::vector<std::string> bad;
    for (const auto& name : c.suites) {
      auto report = regulab::run_suite(name);
      auto s = report.summary();
      total += s.total;
      passed += s.passed;
      ok = ok && report.pass();
      for (const auto& r : report.records)
        if (!r.pass) bad.push_back(r.id + (r.skipped ? " (skipped: " + r.reason + ")" : ""));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_secs;
    ok = ok && in_budget && total > 0;
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %-28s %zu/%zu cases, %.1fs of %.0fs budget\n", c.number,
                ok ? "PASS" : "FAIL", c.title.c_str(), passed, total, secs, c.budget_secs);
    for (const auto& b : bad) std::printf("    failed: %s\n", b.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
