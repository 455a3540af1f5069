#pragma once

// Seeded property suites over generated instances. Each trial draws its own
// seed from the master seed, so results do not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppt/matrix.hpp"

namespace ppt {

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  ToleranceConfig tol;
  unsigned threads = 1;
  /// Run exactly one trial with this seed instead of deriving seeds.
  std::optional<std::uint64_t> trial_seed;
};

/// Aggregate of one named check across all trials.
struct CheckSummary {
  std::string name;
  std::size_t evaluations = 0;
  std::size_t failures = 0;
  /// Largest residual (for bounds) or smallest margin (for lower bounds)
  /// seen; NaN when the check is boolean.
  double worst = 0.0;
  double threshold = 0.0;
  bool pass() const noexcept { return failures == 0; }
};

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::size_t trials = 0;
  std::vector<CheckSummary> checks;
  std::vector<TrialFailure> failures;  ///< first few per check
  double seconds = 0.0;
  bool pass() const noexcept;
  const CheckSummary* find(std::string_view check) const;
};

/// Registered suite names, excluding the aggregate "all".
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws InvalidInput on an unknown name or zero trials.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

/// Runs every registered suite in order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& options);

}  // namespace ppt
