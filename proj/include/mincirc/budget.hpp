#pragma once

#include <cstdint>
#include <optional>

#include "mincirc/solver.hpp"

namespace mincirc {

// Resource bounds for a whole engine query. Total budgets span every solver
// call the query makes; per-call budgets additionally cap each call.
struct SearchBudget {
  std::optional<std::int64_t> totalConflicts;
  std::optional<std::int64_t> totalMillis;
  std::optional<std::int64_t> conflictsPerCall;
  std::optional<std::int64_t> millisPerCall;
  std::optional<std::int64_t> maxIterations;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget conflicts(std::int64_t total) {
    SearchBudget b;
    b.totalConflicts = total;
    return b;
  }
  static SearchBudget millis(std::int64_t total) {
    SearchBudget b;
    b.totalMillis = total;
    return b;
  }
};

struct EngineStats {
  std::int64_t iterations = 0;
  std::int64_t solverCalls = 0;
  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  double wallMs = 0.0;
};

}  // namespace mincirc
