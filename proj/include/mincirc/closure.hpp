#pragma once

#include <map>
#include <vector>

#include "mincirc/budget.hpp"
#include "mincirc/ffn.hpp"
#include "mincirc/formula.hpp"

namespace mincirc {

// Round-based budget escalation for Free-For-Negation-All: every unresolved
// variable is tested with the current per-test budget; the budget is
// multiplied between rounds up to a cap. Proven-free variables conjoin their
// negation onto the working formula, which preserves the minimal models.
struct ScheduleConfig {
  enum class Unit { Conflicts, Millis };

  Unit unit = Unit::Millis;
  std::int64_t initialBudget = 1000;
  double multiplier = 2.0;
  std::int64_t maxBudget = 32000;
  // Empty = all original variables.
  std::vector<Var> candidates;
  // Apply units learned mid-round to the same round's remaining tests
  // (greedy). Off = units only take effect at round boundaries.
  bool applyUnitsImmediately = true;
  // > 1 runs a round's tests concurrently against the round-start formula;
  // units merge at the round boundary.
  int workers = 1;
  // Ignore budgets entirely; every test runs to completion.
  bool noLimits = false;

  bool verify = false;
  bool reuseReps = true;
  SolverFactory makeSolver;

  static ScheduleConfig unlimited() {
    ScheduleConfig cfg;
    cfg.noLimits = true;
    return cfg;
  }
  static ScheduleConfig testDefaults() {
    ScheduleConfig cfg;
    cfg.unit = Unit::Conflicts;
    cfg.initialBudget = 20000;
    cfg.maxBudget = 32 * 20000;
    return cfg;
  }
};

enum class VarStatus { Free, NotFree, Unresolved };

struct ClosureResult {
  // F: proven free for negation, ascending.
  std::vector<Var> free;
  std::map<Var, VarStatus> status;
  // No candidate left unresolved.
  bool exact = false;
  // phi was unsatisfiable; every variable is vacuously free.
  bool vacuous = false;
  int rounds = 0;
  // Units in the order their negations were conjoined onto the working
  // formula.
  std::vector<Var> learnedOrder;
  EngineStats stats;
};

ClosureResult freeForNegationAll(const CnfFormula& phi,
                                 const ScheduleConfig& cfg = {});

struct GcwaClosure {
  CnfFormula formula;  // phi plus the unit clauses {~x : x in F}
  bool exact = false;
  bool vacuous = false;
};

GcwaClosure gcwaClosure(const CnfFormula& phi, const ScheduleConfig& cfg = {});

}  // namespace mincirc
