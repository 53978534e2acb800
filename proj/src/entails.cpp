#include "mincirc/entails.hpp"

#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "mincirc/tseitin.hpp"

namespace mincirc {

namespace {

using Clock = std::chrono::steady_clock;

// Per-query budget bookkeeping shared by the engines: total budgets are
// enforced by shrinking each call's limits to what remains.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  bool iterationAllowed(std::int64_t iteration) const {
    return !budget_.maxIterations || iteration < *budget_.maxIterations;
  }

  // Limits for the next solver call; nullopt when the total budget is spent.
  std::optional<SolveLimits> nextCall(std::int64_t conflictsUsed) const {
    SolveLimits limits;
    if (budget_.totalConflicts) {
      std::int64_t rest = *budget_.totalConflicts - conflictsUsed;
      if (rest <= 0) return std::nullopt;
      limits.maxConflicts = rest;
    }
    if (budget_.totalMillis) {
      std::int64_t rest = *budget_.totalMillis - elapsedMs();
      if (rest <= 0) return std::nullopt;
      limits.maxMillis = rest;
    }
    if (budget_.conflictsPerCall) {
      limits.maxConflicts = limits.maxConflicts
                                ? std::min(*limits.maxConflicts, *budget_.conflictsPerCall)
                                : *budget_.conflictsPerCall;
      if (*limits.maxConflicts <= 0) return std::nullopt;
    }
    if (budget_.millisPerCall) {
      limits.maxMillis = limits.maxMillis
                             ? std::min(*limits.maxMillis, *budget_.millisPerCall)
                             : *budget_.millisPerCall;
      if (*limits.maxMillis <= 0) return std::nullopt;
    }
    return limits;
  }

  double elapsedMsF() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  std::int64_t elapsedMs() const { return static_cast<std::int64_t>(elapsedMsF()); }

  SearchBudget budget_;
  Clock::time_point start_;
};

// Encodes refinement conjuncts ~phi[S->0,Z0->0,Z1->1] v /\_{x in S} ~x into
// the omega session. Falsity representatives (n_c true only if clause c is
// false) are shared across refinements by reduced-clause content.
class RefinementEncoder {
 public:
  RefinementEncoder(const CnfFormula& phi, FreshVarAllocator& alloc, bool reuse)
      : phi_(phi), alloc_(alloc), reuse_(reuse) {}

  std::vector<Clause> encode(const FlipDescriptor& d) {
    std::vector<Clause> out;
    std::vector<Var> zeros = d.s;
    zeros.insert(zeros.end(), d.z0.begin(), d.z0.end());
    CnfFormula reduced = substitute(phi_, zeros, d.z1);

    Var selReduced = alloc_.allocate(2);  // selects ~phi[d]
    Var selFlip = selReduced + 1;         // selects /\ ~x
    out.push_back(*Clause::make({pos(selReduced), pos(selFlip)}));
    for (Var x : d.s) out.push_back(*Clause::make({neg(selFlip), neg(x)}));

    std::vector<Lit> some{neg(selReduced)};
    for (const Clause& c : reduced.clauses()) some.push_back(pos(falsityRep(c, out)));
    out.push_back(*Clause::make(std::move(some)));
    return out;
  }

  Var varsUsed() const { return alloc_.next() - 1; }

 private:
  Var falsityRep(const Clause& c, std::vector<Clause>& out) {
    if (reuse_) {
      auto it = reps_.find(c);
      if (it != reps_.end()) return it->second;
    }
    Var n = alloc_.allocate();
    // n -> every literal of c false. An empty clause is already false and
    // leaves n unconstrained.
    for (Lit l : c.lits()) out.push_back(*Clause::make({neg(n), ~l}));
    if (reuse_) reps_.emplace(c, n);
    return n;
  }

  const CnfFormula& phi_;
  FreshVarAllocator& alloc_;
  bool reuse_;
  std::map<Clause, Var> reps_;
};

[[noreturn]] void verifyFailure(const char* what) {
  throw std::logic_error(std::string("entails-min invariant violated: ") + what);
}

}  // namespace

SolveResult findSmallerModel(const CnfFormula& phi, const Assignment& nu,
                             const Partition& part, const SolveLimits& limits,
                             Polarity polarity, const SolverFactory& makeSolver) {
  const SolverFactory& factory = makeSolver ? makeSolver : cdclFactory();
  auto solver = factory(phi.universe());
  solver->addFormula(phi);
  solver->addFormula(smallerModelConstraint(nu, part));
  SolveResult r = solver->solve(limits, polarity);
  if (r.sat()) r.model = r.model->project(phi.universe());
  return r;
}

FlipDescriptor deriveDescriptor(const Assignment& nu, const Assignment& nuPrime,
                                const Partition& part) {
  FlipDescriptor d;
  for (Var v = 1; v <= part.universe(); ++v) {
    bool was = nu.value(v), now = nuPrime.value(v);
    switch (part.group(v)) {
      case VarGroup::Minimized:
        if (was && !now) d.s.push_back(v);
        if (!was && now) verifyFailure("witness raises a minimized variable");
        break;
      case VarGroup::Fixed:
        if (was != now) verifyFailure("witness changes a fixed variable");
        break;
      case VarGroup::Varying:
        if (was && !now) d.z0.push_back(v);
        if (!was && now) d.z1.push_back(v);
        break;
    }
  }
  if (d.s.empty()) verifyFailure("witness is not strictly smaller");
  return d;
}

Verdict entailsMin(const CnfFormula& phi, const BoolExpr& psi, const Partition& part,
                   const EntailsOptions& options) {
  const SolverFactory factory = options.makeSolver ? options.makeSolver : cdclFactory();
  Var universe = std::max({phi.universe(), psi.maxVar(), part.universe()});
  CnfFormula phiExt = phi;
  phiExt.extendUniverse(universe);
  Partition p = part;
  p.extendTo(universe);

  BudgetTracker tracker(options.budget);
  Verdict verdict;
  verdict.kind = Verdict::Kind::Exhausted;
  EngineStats& stats = verdict.stats;

  auto solverConflicts = [&](const SatSolver& s) { return s.stats().conflicts; };
  auto finish = [&](Verdict::Kind kind) -> Verdict& {
    verdict.kind = kind;
    verdict.stats.wallMs = tracker.elapsedMsF();
    return verdict;
  };

  // omega = phi /\ ~psi, the negation of the empty-W abstraction.
  auto omega = factory(universe);
  omega->addFormula(phiExt);
  FreshVarAllocator alloc(universe + 1);
  TseitinCnf negPsi = tseitinNegation(psi, alloc);
  omega->reserveVars(alloc.next() - universe - 1);
  for (const Clause& c : negPsi.clauses) omega->addClause(c);

  RefinementEncoder encoder(phiExt, alloc, options.reuseReps);
  std::set<FlipDescriptor> seen;
  std::int64_t witnessConflicts = 0;

  for (;;) {
    if (!tracker.iterationAllowed(stats.iterations)) return finish(Verdict::Kind::Exhausted);

    auto limits = tracker.nextCall(solverConflicts(*omega) + witnessConflicts);
    if (!limits) return finish(Verdict::Kind::Exhausted);
    ++stats.solverCalls;
    SolveResult counter = omega->solve(*limits, options.counterexamplePolarity);
    stats.conflicts = solverConflicts(*omega) + witnessConflicts;

    if (counter.unsat()) {
      // No counterexample: the abstraction is a tautology. Check whether the
      // entailment is vacuous (phi itself unsatisfiable) for diagnostics.
      auto probeLimits = tracker.nextCall(stats.conflicts);
      if (probeLimits) {
        auto probe = factory(phiExt.universe());
        probe->addFormula(phiExt);
        ++stats.solverCalls;
        SolveResult sat = probe->solve(*probeLimits, Polarity::Default);
        witnessConflicts += probe->stats().conflicts;
        stats.conflicts = solverConflicts(*omega) + witnessConflicts;
        verdict.vacuous = sat.unsat();
      }
      return finish(Verdict::Kind::Entailed);
    }
    if (counter.exhausted()) return finish(Verdict::Kind::Exhausted);

    Assignment nu = counter.model->project(universe);
    if (options.verify) {
      if (!evaluate(nu, phiExt)) verifyFailure("counterexample does not satisfy phi");
      if (evaluate(nu, psi)) verifyFailure("counterexample satisfies psi");
    }

    auto witnessLimits = tracker.nextCall(stats.conflicts);
    if (!witnessLimits) return finish(Verdict::Kind::Exhausted);
    ++stats.solverCalls;
    auto witnessSolver = factory(universe);
    witnessSolver->addFormula(phiExt);
    witnessSolver->addFormula(smallerModelConstraint(nu, p));
    SolveResult smaller = witnessSolver->solve(*witnessLimits, options.witnessPolarity);
    witnessConflicts += witnessSolver->stats().conflicts;
    stats.conflicts = solverConflicts(*omega) + witnessConflicts;

    if (smaller.exhausted()) return finish(Verdict::Kind::Exhausted);
    if (smaller.unsat()) {
      // nu is (P,Z)-minimal, satisfies phi and violates psi.
      verdict.witness = std::move(nu);
      return finish(Verdict::Kind::NotEntailed);
    }

    Assignment nuPrime = smaller.model->project(universe);
    if (options.verify && !strictlySmaller(nuPrime, nu, p))
      verifyFailure("witness is not strictly below the counterexample");

    FlipDescriptor d = deriveDescriptor(nu, nuPrime, p);
    if (!seen.insert(d).second)
      throw std::logic_error("duplicate refinement descriptor; abstraction stalled");
    verdict.certificate.push_back(d);

    std::vector<Clause> refinement = encoder.encode(d);
    omega->reserveVars(encoder.varsUsed() - omega->numVars());
    for (const Clause& c : refinement) omega->addClause(c);

    if (options.verify) {
      // The refinement must exclude its own counterexample: nu satisfies
      // phi[d] and sets every S-variable to 1, so the new conjunct is false.
      std::vector<Var> zeros = d.s;
      zeros.insert(zeros.end(), d.z0.begin(), d.z0.end());
      CnfFormula reduced = substitute(phiExt, zeros, d.z1);
      if (!evaluate(nu, reduced))
        verifyFailure("refinement does not exclude its counterexample");
      for (Var x : d.s)
        if (!nu.value(x)) verifyFailure("flip descriptor names a zero variable");
    }

    ++stats.iterations;
  }
}

}  // namespace mincirc
