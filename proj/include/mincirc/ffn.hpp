#pragma once

#include <map>
#include <vector>

#include "mincirc/budget.hpp"
#include "mincirc/formula.hpp"
#include "mincirc/solver.hpp"
#include "mincirc/tseitin.hpp"

namespace mincirc {

struct FfnOptions {
  SearchBudget budget;
  // Incremental encoding: refinements reuse clause representatives and only
  // re-encode clauses touched by S. Off = each refinement re-encodes the
  // whole reduction with fresh representatives (differential baseline).
  bool reuseReps = true;
  bool verify = false;
  Polarity counterexamplePolarity = Polarity::PreferFalse;
  Polarity witnessPolarity = Polarity::PreferTrue;
  SolverFactory makeSolver;
};

struct FfnResult {
  bool completed = false;
  // Valid when completed: x takes value 0 in every minimal model of phi.
  bool free = false;
  EngineStats stats;
};

// Maintains omega, the negation of the specialized abstraction
//   phi /\ x /\ /\_{S in W} ~phi[S -> 0],  x in S for every S,
// as an incrementally growing clause set. Every clause of phi[x -> 0] owns a
// representative r_c defined equivalent to it; each refinement emits one
// clause asserting that some clause of phi[x->0][S\{x} -> 0] is false,
// reusing representatives for untouched and previously seen content.
class FfnOmegaEncoder {
 public:
  FfnOmegaEncoder(const CnfFormula& phi, Var x, bool reuseReps = true);

  // omega's initial clauses (W = {{x}}); call exactly once.
  std::vector<Clause> initialClauses();
  // Strengthening for a new S (must contain x, not used before).
  std::vector<Clause> refineClauses(const std::vector<Var>& s);

  Var varsUsed() const { return alloc_.next() - 1; }
  const CnfFormula& phiZero() const { return phi0_; }
  const std::vector<std::vector<Var>>& history() const { return history_; }

 private:
  Var representative(const Clause& c, std::vector<Clause>& out);

  CnfFormula phi_;
  CnfFormula phi0_;
  Var x_;
  FreshVarAllocator alloc_;
  bool reuseReps_;
  bool initialized_ = false;
  std::vector<Var> phi0Reps_;
  std::map<Clause, Var> repMap_;
  std::vector<std::vector<Var>> history_;
};

// Algorithm: start from the abstraction W = {{x}}; counterexamples are
// models of omega (necessarily with x = 1); witnesses are models of
// phi /\ ~x keeping the counterexample's zeros, which are strictly smaller
// without any extra strictness clause. completed=false means the budget ran
// out before a verdict.
FfnResult freeForNegation(const CnfFormula& phi, Var x, const FfnOptions& options = {});

}  // namespace mincirc
