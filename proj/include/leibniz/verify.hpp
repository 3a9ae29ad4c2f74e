#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

struct VerifyOptions {
  Field field = Field::rationals();
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  /// Window used by the matrix cross-checks.
  std::size_t window = 24;
};

/// Outcome of one randomized property suite. A case passes when every check
/// in it holds; the first few failing cases are kept with a reason.
struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return cases > 0 && passed == cases; }
};

/// Suites in run order. Each belongs to one numbered acceptance criterion.
const std::vector<std::string>& suite_names();

/// Runs one suite. Each suite draws from its own stream derived from the
/// seed, so results do not depend on which other suites ran.
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options);

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Fixed-width pass/fail table, byte-identical for identical inputs.
std::string format_report(const VerifyOptions& options, const std::vector<SuiteResult>& results);

}  // namespace leibniz
