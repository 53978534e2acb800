#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "mincirc/formula.hpp"

namespace mincirc {

// Decision-phase preference. Affects which model a satisfiable solve returns,
// never the verdict. PreferFalse biases toward low models, PreferTrue toward
// high ones; Default uses phase saving.
enum class Polarity { PreferFalse, PreferTrue, Default };

struct SolveLimits {
  // A solve may finish instantly regardless of limits; a limit <= 0 means no
  // search effort is granted and the call reports BudgetExhausted up front.
  std::optional<std::int64_t> maxConflicts;
  std::optional<std::int64_t> maxMillis;

  static SolveLimits none() { return {}; }
};

struct SolveResult {
  enum class Kind { Sat, Unsat, BudgetExhausted };
  Kind kind;
  // Total over the session's variable count at solve time.
  std::optional<Assignment> model;

  bool sat() const { return kind == Kind::Sat; }
  bool unsat() const { return kind == Kind::Unsat; }
  bool exhausted() const { return kind == Kind::BudgetExhausted; }
};

struct SolverStats {
  std::int64_t solves = 0;
  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
};

// An incremental solving session: clauses are only ever added, the variable
// count only grows. A session is single-threaded; distinct sessions are
// independent.
class SatSolver {
 public:
  virtual ~SatSolver() = default;

  virtual Var numVars() const = 0;
  // Grows the variable count by `count`; returns the first new index.
  virtual Var reserveVars(Var count) = 0;
  // Throws std::invalid_argument if a literal exceeds the variable count.
  virtual void addClause(const Clause& c) = 0;
  virtual SolveResult solve(const SolveLimits& limits = {},
                            Polarity polarity = Polarity::Default) = 0;
  virtual const SolverStats& stats() const = 0;

  void addFormula(const CnfFormula& phi);
};

// Conflict-driven clause learning with two-watched-literal propagation,
// first-UIP learning, Luby restarts and phase saving. Deterministic; a
// nonzero seed perturbs decision tie-breaking.
std::unique_ptr<SatSolver> makeCdclSolver(Var numVars, std::uint64_t seed = 0);

// Plain backtracking search; slow but structurally independent of the CDCL
// solver, used for differential testing.
std::unique_ptr<SatSolver> makeBacktrackingSolver(Var numVars);

using SolverFactory = std::function<std::unique_ptr<SatSolver>(Var)>;

SolverFactory cdclFactory(std::uint64_t seed = 0);
SolverFactory backtrackingFactory();

}  // namespace mincirc
