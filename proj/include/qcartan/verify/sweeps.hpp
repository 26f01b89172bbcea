#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcartan/verify/checks.hpp"
#include "qcartan/verify/properties.hpp"

namespace qcartan::verify {

/// "5", "2..6", "2-6" or "2,3,6" (mixtures like "1,3..5" too). Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);
/// Comma separated nonzero rationals "2,1/2,-2". Throws std::invalid_argument.
std::vector<mpq_class> parse_theta_list(const std::string& text);

/// Overrides from the command line; unset fields fall back to the per-subcommand defaults.
struct SweepOptions {
  std::optional<std::vector<int>> ell, n, d;
  std::optional<std::vector<long>> primes;
  std::optional<std::vector<mpq_class>> thetas;
  std::uint64_t seed = 1;
  bool hard = false;
};

std::vector<Task> graded_tasks(const SweepOptions& o);
std::vector<Task> kor_tasks(const SweepOptions& o);
std::vector<Task> specialized_tasks(const SweepOptions& o);
std::vector<Task> local_tasks(const SweepOptions& o);
std::vector<Task> cartan_block_tasks(const SweepOptions& o);
std::vector<Task> conjecture_tasks(const SweepOptions& o);
std::vector<Task> fitting_tasks(const SweepOptions& o);
std::vector<Task> property_tasks(const SweepOptions& o);

/// Appends a "local-coverage" report (equal iff all three valuation cases occur) to local reports.
CheckReport local_case_coverage(const std::vector<CheckReport>& reports);

/// Per-task wall-clock budget used with --hard.
inline constexpr double kHardBudgetSeconds = 120.0;

}  // namespace qcartan::verify
