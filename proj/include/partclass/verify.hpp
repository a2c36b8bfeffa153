#pragma once

// Named invariant suites over all modules. Each suite returns a pass/fail
// report with the number of individual checks and the first failure.

#include <string>
#include <string_view>
#include <vector>

namespace partclass {

struct VerifyOptions {
  long max_modulus = 30;  ///< upper modulus for the character suites
};

struct SuiteReport {
  std::string name;
  bool passed = false;
  long checks = 0;
  std::string detail;  ///< first failure, or a short summary on success
  double millis = 0.0;
};

/// Every suite, in run order.
const std::vector<std::string>& suite_names();

/// The suites run when none is named. Excludes `t1` and `tables-extended`,
/// whose literal tolerances are known not to hold.
const std::vector<std::string>& default_suites();

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace partclass
