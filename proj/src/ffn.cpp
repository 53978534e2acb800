#include "mincirc/ffn.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace mincirc {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void verifyFailure(const char* what) {
  throw std::logic_error(std::string("free-for-negation invariant violated: ") + what);
}

}  // namespace

FfnOmegaEncoder::FfnOmegaEncoder(const CnfFormula& phi, Var x, bool reuseReps)
    : phi_(phi),
      phi0_(substitute(phi, std::vector<Var>{x}, {})),
      x_(x),
      alloc_(phi.universe() + 1),
      reuseReps_(reuseReps) {
  if (x < 1 || x > phi.universe())
    throw std::invalid_argument("queried variable outside formula universe");
}

Var FfnOmegaEncoder::representative(const Clause& c, std::vector<Clause>& out) {
  if (reuseReps_) {
    auto it = repMap_.find(c);
    if (it != repMap_.end()) return it->second;
  }
  Var r = alloc_.allocate();
  // r_c <-> c. For an empty clause this pins r_c false via the unit ~r_c.
  std::vector<Lit> def{neg(r)};
  def.insert(def.end(), c.lits().begin(), c.lits().end());
  out.push_back(*Clause::make(std::move(def)));
  for (Lit l : c.lits()) out.push_back(*Clause::make({~l, pos(r)}));
  if (reuseReps_) repMap_.emplace(c, r);
  return r;
}

std::vector<Clause> FfnOmegaEncoder::initialClauses() {
  if (initialized_) throw std::logic_error("initialClauses called twice");
  initialized_ = true;
  history_.push_back({x_});

  std::vector<Clause> out(phi_.clauses().begin(), phi_.clauses().end());
  out.push_back(Clause::unit(pos(x_)));
  std::vector<Lit> falsity;
  for (const Clause& c : phi0_.clauses()) {
    Var r = representative(c, out);
    phi0Reps_.push_back(r);
    falsity.push_back(neg(r));
  }
  // Some clause of phi[x -> 0] is false; empty when phi0 is constant-true,
  // making omega unsatisfiable outright.
  out.push_back(*Clause::make(std::move(falsity)));
  return out;
}

std::vector<Clause> FfnOmegaEncoder::refineClauses(const std::vector<Var>& s) {
  if (!initialized_) throw std::logic_error("refineClauses before initialClauses");
  if (std::find(s.begin(), s.end(), x_) == s.end())
    throw std::invalid_argument("refinement set must contain the queried variable");
  std::vector<Var> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(history_.begin(), history_.end(), sorted) != history_.end())
    throw std::logic_error("refinement set already used");
  history_.push_back(sorted);

  std::vector<char> inS(phi_.universe() + 1, 0);
  for (Var v : sorted) inS[v] = 1;

  std::vector<Clause> out;
  std::vector<Lit> falsity;

  if (reuseReps_) {
    // C_p: clauses with a positive literal on S (reduced by the substitution);
    // C_n: clauses with a negative literal on S (satisfied, dropped). The
    // falsity disjunction keeps original representatives for untouched
    // clauses and uses (possibly shared) ones for the reductions in C.
    for (std::size_t i = 0; i < phi0_.numClauses(); ++i) {
      const Clause& c = phi0_.clauses()[i];
      bool positiveOnS = false, negativeOnS = false;
      for (Lit l : c.lits()) {
        if (inS[l.var()]) (l.positive() ? positiveOnS : negativeOnS) = true;
      }
      if (negativeOnS) continue;
      if (!positiveOnS) {
        falsity.push_back(neg(phi0Reps_[i]));
        continue;
      }
      std::vector<Lit> keep;
      for (Lit l : c.lits())
        if (!inS[l.var()]) keep.push_back(l);
      Clause reduced = *Clause::make(std::move(keep));
      falsity.push_back(neg(representative(reduced, out)));
    }
  } else {
    // Naive baseline: encode the whole reduction afresh.
    CnfFormula reduced = substitute(phi0_, sorted, {});
    for (const Clause& c : reduced.clauses())
      falsity.push_back(neg(representative(c, out)));
  }

  // Empty when the substitution satisfies every clause: the reduction is
  // constant-true, its negation unsatisfiable, and omega gets the empty clause.
  out.push_back(*Clause::make(std::move(falsity)));
  return out;
}

FfnResult freeForNegation(const CnfFormula& phi, Var x, const FfnOptions& options) {
  if (x < 1 || x > phi.universe())
    throw std::invalid_argument("queried variable outside formula universe");
  const SolverFactory factory = options.makeSolver ? options.makeSolver : cdclFactory();
  const Var universe = phi.universe();
  const Partition allMin = Partition::allMinimized(universe);

  FfnResult result;
  EngineStats& stats = result.stats;
  Clock::time_point start = Clock::now();
  auto elapsedMs = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };
  auto finish = [&](bool completed, bool free) -> FfnResult& {
    result.completed = completed;
    result.free = free;
    stats.wallMs = elapsedMs();
    return result;
  };
  auto callLimits = [&](std::int64_t conflictsUsed) -> std::optional<SolveLimits> {
    const SearchBudget& b = options.budget;
    SolveLimits limits;
    if (b.totalConflicts) {
      std::int64_t rest = *b.totalConflicts - conflictsUsed;
      if (rest <= 0) return std::nullopt;
      limits.maxConflicts = rest;
    }
    if (b.totalMillis) {
      auto rest = static_cast<std::int64_t>(*b.totalMillis - elapsedMs());
      if (rest <= 0) return std::nullopt;
      limits.maxMillis = rest;
    }
    if (b.conflictsPerCall)
      limits.maxConflicts = limits.maxConflicts
                                ? std::min(*limits.maxConflicts, *b.conflictsPerCall)
                                : *b.conflictsPerCall;
    if (b.millisPerCall)
      limits.maxMillis = limits.maxMillis ? std::min(*limits.maxMillis, *b.millisPerCall)
                                          : *b.millisPerCall;
    return limits;
  };

  FfnOmegaEncoder encoder(phi, x, options.reuseReps);
  auto omega = factory(universe);
  {
    std::vector<Clause> init = encoder.initialClauses();
    omega->reserveVars(encoder.varsUsed() - omega->numVars());
    for (const Clause& c : init) omega->addClause(c);
  }
  std::int64_t witnessConflicts = 0;

  for (;;) {
    if (options.budget.maxIterations && stats.iterations >= *options.budget.maxIterations)
      return finish(false, false);

    auto limits = callLimits(omega->stats().conflicts + witnessConflicts);
    if (!limits) return finish(false, false);
    ++stats.solverCalls;
    SolveResult counter = omega->solve(*limits, options.counterexamplePolarity);
    stats.conflicts = omega->stats().conflicts + witnessConflicts;
    if (counter.unsat()) return finish(true, true);
    if (counter.exhausted()) return finish(false, false);

    Assignment nu = counter.model->project(universe);
    if (!nu.value(x)) verifyFailure("counterexample has x = 0 despite the unit clause");
    if (options.verify && !evaluate(nu, phi))
      verifyFailure("counterexample does not satisfy phi");

    // Witness: a model of phi with x flipped to 0 and nu's zeros kept; such a
    // model is strictly smaller than nu without any strictness clause.
    auto witnessLimits = callLimits(stats.conflicts);
    if (!witnessLimits) return finish(false, false);
    ++stats.solverCalls;
    auto witness = factory(universe);
    witness->addFormula(phi);
    witness->addFormula(smallerModelConstraint(nu, allMin, x));
    SolveResult smaller = witness->solve(*witnessLimits, options.witnessPolarity);
    witnessConflicts += witness->stats().conflicts;
    stats.conflicts = omega->stats().conflicts + witnessConflicts;
    if (smaller.unsat()) return finish(true, false);
    if (smaller.exhausted()) return finish(false, false);

    Assignment nuPrime = smaller.model->project(universe);
    if (nuPrime.value(x)) verifyFailure("witness keeps x = 1");
    if (options.verify) {
      if (nuPrime == nu) verifyFailure("witness equals the counterexample");
      if (!strictlySmaller(nuPrime, nu, allMin))
        verifyFailure("witness is not strictly smaller");
    }

    std::vector<Var> s;
    for (Var v = 1; v <= universe; ++v)
      if (nu.value(v) && !nuPrime.value(v)) s.push_back(v);

    std::vector<Clause> refinement = encoder.refineClauses(s);
    omega->reserveVars(encoder.varsUsed() - omega->numVars());
    for (const Clause& c : refinement) omega->addClause(c);

    if (options.verify) {
      CnfFormula reduced = substitute(encoder.phiZero(), s, {});
      if (reduced.constantFalse())
        verifyFailure("reduction contains an empty clause");
      if (!evaluate(nu, reduced))
        verifyFailure("refinement does not exclude its counterexample");
    }

    ++stats.iterations;
  }
}

}  // namespace mincirc
