#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eso {

// Differential suites: each pits a decider against the brute-force search
// it replaces and counts disagreements.

struct SuiteOptions {
  int max_n = 0;            // 0 picks the suite default
  std::uint64_t seed = 1;
  int random = -1;          // random cases; -1 picks the suite default
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t disagreements = 0;
  std::string summary;
  std::vector<std::string> notes;  // first few disagreements, counters
  bool ok() const { return disagreements == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace eso
