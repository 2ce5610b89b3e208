#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rikit/gen.hpp"

namespace rikit {

// Property suites driving the equational laws. Every case is a pure function
// of (suite, seed, index), so the sweep is data parallel: the parallel runner
// fans cases out with OpenMP and must produce bit-identical reports to the
// serial reference runner, which the tests enforce.

enum class SuiteKind { Univ, Smn, Fix, Fund, Ana, Galois };

const char* suite_name(SuiteKind k);
bool suite_from_name(const std::string& name, SuiteKind& out);

enum class RunMode { Serial, Parallel };

struct LawCount {
  std::string law;
  int pass = 0;
  int fail = 0;
  int skip = 0;  // cases a law does not apply to (e.g. the oracle diverged)
};

struct CaseFailure {
  int index;
  std::string law;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  std::uint64_t seed = 0;
  std::vector<LawCount> laws;
  std::vector<CaseFailure> failures;  // capped, ordered by case index

  bool ok() const;
  std::string render_text() const;  // deterministic; no timing
};

struct SuiteConfig {
  int cases = 100;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Parallel;
  Fuel fuel = 100000;
};

SuiteReport run_suite(SuiteKind kind, const SuiteConfig& config);

// Single-case kernel, exposed for the benchmark.
struct LawResult {
  std::string law;
  int verdict;  // 0 pass, 1 fail, 2 skip
  std::string message;
};
std::vector<LawResult> run_case(SuiteKind kind, std::uint64_t seed, int index, Fuel fuel);

}  // namespace rikit
