#pragma once

#include <vector>

#include "mincirc/boolexpr.hpp"
#include "mincirc/budget.hpp"
#include "mincirc/formula.hpp"
#include "mincirc/solver.hpp"

namespace mincirc {

// One refinement step: the counterexample model is mapped onto its witness by
// flipping S (P-variables, 1 to 0), Z0 (1 to 0) and Z1 (0 to 1). S is never
// empty; that is what makes the witness strictly smaller.
struct FlipDescriptor {
  std::vector<Var> s;
  std::vector<Var> z0;
  std::vector<Var> z1;

  bool operator==(const FlipDescriptor&) const = default;
  auto operator<=>(const FlipDescriptor&) const = default;
};

struct EntailsOptions {
  SearchBudget budget;
  // Share clause representatives across refinements (keyed by reduced-clause
  // content). Off = re-encode every refinement from scratch, kept for
  // differential testing.
  bool reuseReps = true;
  // Re-check progress and witness properties each iteration; violations throw
  // std::logic_error.
  bool verify = false;
  Polarity counterexamplePolarity = Polarity::PreferFalse;
  Polarity witnessPolarity = Polarity::PreferTrue;
  SolverFactory makeSolver;  // defaults to the CDCL backend
};

struct Verdict {
  enum class Kind { Entailed, NotEntailed, Exhausted };
  Kind kind;
  // The flip descriptors accumulated in W; a certificate when Entailed,
  // partial progress when Exhausted.
  std::vector<FlipDescriptor> certificate;
  // NotEntailed only: a (P,Z)-minimal model of phi violating psi.
  std::optional<Assignment> witness;
  EngineStats stats;
  // phi itself was unsatisfiable; entailment holds vacuously.
  bool vacuous = false;

  bool entailed() const { return kind == Kind::Entailed; }
  bool notEntailed() const { return kind == Kind::NotEntailed; }
  bool exhausted() const { return kind == Kind::Exhausted; }
};

// Does psi hold in every (P,Z)-minimal model of phi? CEGAR loop: solve the
// negation of the current abstraction, try to find a strictly smaller model
// of phi under the counterexample, and either report the counterexample as a
// minimal-model witness or refine with the resulting flip descriptor.
//
// The partition covers the combined universe of phi and psi; query variables
// beyond it (and beyond phi's universe) are minimized.
Verdict entailsMin(const CnfFormula& phi, const BoolExpr& psi, const Partition& part,
                   const EntailsOptions& options = {});

// A model of phi strictly below nu in the (P,Z) order: Sat with the model,
// Unsat when nu is (P,Z)-minimal, BudgetExhausted under the limits.
SolveResult findSmallerModel(const CnfFormula& phi, const Assignment& nu,
                             const Partition& part, const SolveLimits& limits = {},
                             Polarity polarity = Polarity::PreferTrue,
                             const SolverFactory& makeSolver = {});

// The componentwise difference of a model and a strictly smaller one.
// Throws std::logic_error if nuPrime is not strictly below nu.
FlipDescriptor deriveDescriptor(const Assignment& nu, const Assignment& nuPrime,
                                const Partition& part);

}  // namespace mincirc
