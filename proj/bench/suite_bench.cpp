// Times the property-suite sweeps with the serial reference runner and the
// OpenMP runner on the same workload, and cross-checks that both produce the
// same report.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rikit/suites.hpp"

using namespace rikit;

namespace {

double run_once(SuiteKind kind, const SuiteConfig& config, std::string& rendered) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report = run_suite(kind, config);
  auto stop = std::chrono::steady_clock::now();
  rendered = report.render_text();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("%-8s %8s %12s %12s %8s %6s\n", "suite", "cases", "serial(ms)", "parallel(ms)",
              "speedup", "same");

  struct Row {
    SuiteKind kind;
    int cases;
  };
  const Row rows[] = {
      {SuiteKind::Univ, 500}, {SuiteKind::Smn, 500},   {SuiteKind::Fix, 200},
      {SuiteKind::Fund, 200}, {SuiteKind::Ana, 100},   {SuiteKind::Galois, 200},
  };

  bool all_same = true;
  for (const Row& row : rows) {
    SuiteConfig config;
    config.cases = row.cases;
    config.seed = 1;
    config.fuel = 100000;

    config.mode = RunMode::Serial;
    std::string serial_text;
    double serial_ms = run_once(row.kind, config, serial_text);

    config.mode = RunMode::Parallel;
    std::string parallel_text;
    double parallel_ms = run_once(row.kind, config, parallel_text);

    bool same = serial_text == parallel_text;
    all_same = all_same && same;
    std::printf("%-8s %8d %12.1f %12.1f %7.2fx %6s\n", suite_name(row.kind), row.cases, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
