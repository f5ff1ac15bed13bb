#pragma once

#include <chrono>
#include <cstdint>

namespace modlex {

/// Limits for the exponential searches (ndp sets, sdp orders, subset
/// enumeration). When a limit is hit the search throws BudgetExceeded rather
/// than returning a guess.
struct SearchBudget {
  /// Upper bound on vertex subsets examined by one search.
  std::uint64_t max_steps = 2'000'000'000ULL;
  /// Wall-clock limit; zero means unlimited.
  std::chrono::milliseconds time_limit{0};

  /// Defaults, with time_limit taken from MODLEX_BUDGET_MS when set.
  static SearchBudget from_environment();
};

}  // namespace modlex
