#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace regulab {

struct CaseRecord {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool skipped = false;
  std::string reason;  // why a case was skipped, or a note
  double seconds = 0;
};

struct SuiteSummary {
  std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseRecord> records;
  std::map<std::string, std::string> metadata;
  double seconds = 0;

  SuiteSummary summary() const;
  /// Every record passed and nothing was skipped.
  bool pass() const;
  /// Stable across runs and worker counts unless `timings` is set.
  std::string json(bool timings = false) const;
  std::string pretty(bool timings = false) const;
};

struct SuiteOptions {
  int jobs = 0;               // 0: REGULAB_JOBS or 1
  double timeout_secs = 0;    // 0: no limit; cases not started in time are skipped
  std::vector<unsigned> characteristics;  // field-robustness only; empty: 0, 2, 3
  std::uint64_t seed = 20240611;
};

std::vector<std::string> suite_names();
/// Throws Error for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

const char* version();

}  // namespace regulab
