// Acceptance gate: one test per criterion, each printing a pass/fail line
// with its runtime. All checks are exact (tolerance 0); runtime bounds are
// asserted as stated.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "samop/suites.hpp"

using namespace samop;

namespace {

constexpr std::uint64_t kSeed = 42;

double run_and_report(int number, const char* label, const std::string& suite, int cases,
                      double limit_seconds) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r = run_suite(suite, cases, kSeed);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d (%s): %d cases, %d failures, %.2fs (limit %.0fs)\n",
              r.passed() && secs < limit_seconds ? "PASS" : "FAIL", number, label,
              r.cases, r.failures, secs, limit_seconds);
  for (const std::string& m : r.messages) std::printf("    %s\n", m.c_str());
  std::fflush(stdout);
  CHECK(r.failures == 0);
  CHECK(secs < limit_seconds);
  return secs;
}

}  // namespace

TEST_CASE("criterion 1: Example 1.3 regression") {
  run_and_report(1, "example 1.3", "example1_3", 1, 1.0);
}

TEST_CASE("criterion 2: index identity on 500 seeded expressions") {
  run_and_report(2, "index identity", "index_identity", 500, 30.0);
}

TEST_CASE("criterion 3: Theorem 1.9 equivalences on 500 seeded expressions") {
  run_and_report(3, "theorem 1.9", "theorem1_9", 500, 30.0);
}

TEST_CASE("criterion 4: Lemma 1.6 statements on 300 seeded triples") {
  run_and_report(4, "lemma 1.6", "lemma1_6", 300, 60.0);
}

TEST_CASE("criterion 5: Theorem 2.7 equivalence and witnesses on 500 seeded pairs") {
  run_and_report(5, "theorem 2.7", "theorem2_7", 500, 60.0);
}

TEST_CASE("criterion 6: completion-spectrum formulas on the catalog") {
  run_and_report(6, "completion grid", "completion_grid", 1, 30.0);
}

TEST_CASE("criterion 7: truncation oracle on 200 seeded expressions") {
  run_and_report(7, "oracle", "oracle", 200, 120.0);
}

TEST_CASE("criterion 8: normal-form audit on 300 seeded semi-Fredholm expressions") {
  run_and_report(8, "normal form", "normal_form", 300, 30.0);
}
