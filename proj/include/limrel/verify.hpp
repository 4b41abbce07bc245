#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace limrel {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  std::size_t cases = 200;
  int max_degree = 3;
  std::size_t max_rank = 3;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions
  long long ms = 0;

  [[nodiscard]] bool passed() const noexcept { return failed == 0; }
};

/// Structural property suites, in execution order.
const std::vector<std::string>& property_suites();
/// Every name accepted by run_suite: the property suites and "paper" (the numerical criteria).
const std::vector<std::string>& suite_names();

/// Runs one suite; "paper" runs criteria 1..7. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Numerical criteria 1..7; each grid cell counts as one case.
SuiteReport run_criterion(int criterion, const SuiteOptions& options);

}  // namespace limrel
