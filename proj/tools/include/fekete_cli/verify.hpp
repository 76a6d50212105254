#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fekete::cli {

enum class Suite { all, identities, inequalities };

std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  Suite suite = Suite::all;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Replaces the tolerance of every check (harness self-test).
  std::optional<double> tolerance;
};

// One trial of one check. Identity checks report log_slack = -residual, so
// every check passes iff log_slack >= -tolerance.
struct CheckOutcome {
  std::string check;
  std::size_t trial = 0;
  std::size_t n = 0;
  double log_slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Set when the trial threw; the trial then counts as a failure.
  std::string error;
};

struct CheckSummary {
  std::string check;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_log_slack = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

// Names of the checks a suite runs, in output order.
std::vector<std::string> suite_checks(Suite suite);

// Runs every check of the suite for the requested number of trials. Trials
// draw from independent streams derived from the seed, so the outcome does not
// depend on the worker count. Results are ordered by check, then trial.
std::vector<CheckOutcome> run_verify(const VerifyOptions& opts);

std::vector<CheckSummary> summarize(const std::vector<CheckOutcome>& outcomes);

}  // namespace fekete::cli
