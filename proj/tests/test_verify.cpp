#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "partclass/errors.hpp"
#include "partclass/verify.hpp"

using namespace partclass;

TEST_CASE("suite registry") {
  const auto& all = suite_names();
  const auto& defaults = default_suites();
  CHECK(all.size() == defaults.size() + 2);
  for (const auto& name : defaults) CHECK(std::find(all.begin(), all.end(), name) != all.end());
  CHECK(std::find(defaults.begin(), defaults.end(), "t1") == defaults.end());
  CHECK_THROWS_AS(run_suite("no-such-suite"), DomainError);
  CHECK_THROWS_AS(run_suite("dedekind", VerifyOptions{2}), DomainError);
}

TEST_CASE("quick suites pass") {
  for (const char* name : {"dedekind", "orthogonality", "wright", "cusp-bound", "antisymmetry", "numerics"}) {
    const SuiteReport report = run_suite(name);
    INFO(name << ": " << report.detail);
    CHECK(report.passed);
    CHECK(report.checks > 0);
    CHECK(report.millis >= 0.0);
  }
  const SuiteReport small = run_suite("orthogonality", VerifyOptions{5});
  CHECK(small.passed);
  CHECK(small.checks < run_suite("orthogonality").checks);
}

TEST_CASE("the T1 suite reports where its tolerance fails") {
  const SuiteReport report = run_suite("t1");
  CHECK_FALSE(report.passed);
  CHECK(report.detail.find("fails for n in [1, 91]") != std::string::npos);
}
