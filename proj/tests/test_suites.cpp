#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rikit/suites.hpp"

using namespace rikit;

TEST_CASE("suite names round-trip") {
  for (SuiteKind k : {SuiteKind::Univ, SuiteKind::Smn, SuiteKind::Fix, SuiteKind::Fund,
                      SuiteKind::Ana, SuiteKind::Galois}) {
    SuiteKind back;
    REQUIRE(suite_from_name(suite_name(k), back));
    CHECK(back == k);
  }
  SuiteKind k;
  CHECK_FALSE(suite_from_name("bogus", k));
}

TEST_CASE("every suite passes on a quick run") {
  for (SuiteKind kind : {SuiteKind::Univ, SuiteKind::Smn, SuiteKind::Fix, SuiteKind::Fund,
                         SuiteKind::Ana, SuiteKind::Galois}) {
    SuiteConfig config;
    config.cases = 25;
    config.seed = 7;
    config.mode = RunMode::Serial;
    SuiteReport report = run_suite(kind, config);
    INFO(report.render_text());
    CHECK(report.ok());
    CHECK(report.failures.empty());
  }
}

TEST_CASE("parallel runner reproduces the serial reference bit for bit") {
  for (SuiteKind kind : {SuiteKind::Univ, SuiteKind::Smn, SuiteKind::Fix, SuiteKind::Fund,
                         SuiteKind::Ana, SuiteKind::Galois}) {
    SuiteConfig serial{50, 3, RunMode::Serial, 100000};
    SuiteConfig parallel{50, 3, RunMode::Parallel, 100000};
    std::string a = run_suite(kind, serial).render_text();
    std::string b = run_suite(kind, parallel).render_text();
    CHECK(a == b);
  }
}

TEST_CASE("reports are deterministic given the seed and differ across seeds") {
  SuiteConfig config{40, 11, RunMode::Parallel, 100000};
  std::string one = run_suite(SuiteKind::Univ, config).render_text();
  std::string two = run_suite(SuiteKind::Univ, config).render_text();
  CHECK(one == two);

  // a different seed exercises different cases; the shape still matches
  config.seed = 12;
  std::string three = run_suite(SuiteKind::Univ, config).render_text();
  CHECK(three.find("suite: univ") == 0);
}

TEST_CASE("single-case kernel is pure") {
  auto a = run_case(SuiteKind::Smn, 5, 17, 100000);
  auto b = run_case(SuiteKind::Smn, 5, 17, 100000);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].law == b[i].law);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].message == b[i].message);
  }
}
