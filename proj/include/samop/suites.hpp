#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace samop {

// Named property suites runnable from the CLI (`verify --suite=NAME`) and
// from the acceptance harness. Seeded and deterministic.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions
  double seconds = 0;

  bool passed() const { return failures == 0; }
  std::string str() const;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// `cases` caps the number of generated instances (fixed-catalog suites ignore
// it); `seed` drives the generator.
SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed);

}  // namespace samop
