#include "mincirc/closure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mincirc {

namespace {

using Clock = std::chrono::steady_clock;

void validate(const ScheduleConfig& cfg) {
  if (cfg.initialBudget <= 0) throw std::invalid_argument("initial budget must be positive");
  if (cfg.multiplier <= 1.0) throw std::invalid_argument("multiplier must exceed 1");
  if (cfg.maxBudget < cfg.initialBudget)
    throw std::invalid_argument("max budget below initial budget");
  if (cfg.workers < 1) throw std::invalid_argument("worker count must be positive");
}

SearchBudget perTestBudget(const ScheduleConfig& cfg, std::int64_t budget) {
  if (cfg.noLimits) return SearchBudget::unlimited();
  return cfg.unit == ScheduleConfig::Unit::Conflicts ? SearchBudget::conflicts(budget)
                                                     : SearchBudget::millis(budget);
}

void accumulate(EngineStats& into, const EngineStats& from) {
  into.iterations += from.iterations;
  into.solverCalls += from.solverCalls;
  into.conflicts += from.conflicts;
  into.decisions += from.decisions;
}

}  // namespace

ClosureResult freeForNegationAll(const CnfFormula& phi, const ScheduleConfig& cfg) {
  validate(cfg);
  const SolverFactory factory = cfg.makeSolver ? cfg.makeSolver : cdclFactory();

  std::vector<Var> candidates = cfg.candidates;
  if (candidates.empty()) {
    candidates.resize(phi.universe());
    std::iota(candidates.begin(), candidates.end(), 1);
  } else {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (!candidates.empty() &&
        (candidates.front() < 1 || candidates.back() > phi.universe()))
      throw std::invalid_argument("candidate variable outside formula universe");
  }

  ClosureResult result;
  Clock::time_point start = Clock::now();
  for (Var v : candidates) result.status[v] = VarStatus::Unresolved;

  FfnOptions ffnBase;
  ffnBase.reuseReps = cfg.reuseReps;
  ffnBase.verify = cfg.verify;
  ffnBase.makeSolver = factory;

  // Unsatisfiable phi has no minimal models: everything is vacuously free.
  {
    auto probe = factory(phi.universe());
    probe->addFormula(phi);
    ++result.stats.solverCalls;
    SolveResult sat = probe->solve(
        cfg.noLimits ? SolveLimits::none()
                     : (cfg.unit == ScheduleConfig::Unit::Conflicts
                            ? SolveLimits{cfg.maxBudget, std::nullopt}
                            : SolveLimits{std::nullopt, cfg.maxBudget}),
        Polarity::Default);
    result.stats.conflicts += probe->stats().conflicts;
    if (sat.unsat()) {
      result.free = candidates;
      result.learnedOrder = candidates;
      for (Var v : candidates) result.status[v] = VarStatus::Free;
      result.exact = true;
      result.vacuous = true;
      result.rounds = 0;
      result.stats.wallMs =
          std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      return result;
    }
  }

  CnfFormula working = phi;
  std::vector<Var> unresolved = candidates;
  std::int64_t budget = cfg.initialBudget;

  while (!unresolved.empty()) {
    ++result.rounds;
    FfnOptions ffnOpt = ffnBase;
    ffnOpt.budget = perTestBudget(cfg, budget);

    std::vector<FfnResult> outcomes(unresolved.size());
    if (cfg.workers > 1) {
      // Every test runs against the round-start formula; units merge below.
      const CnfFormula roundStart = working;
      std::atomic<std::size_t> nextIdx{0};
      auto work = [&] {
        for (;;) {
          std::size_t i = nextIdx.fetch_add(1);
          if (i >= unresolved.size()) return;
          outcomes[i] = freeForNegation(roundStart, unresolved[i], ffnOpt);
        }
      };
      std::vector<std::thread> pool;
      int n = std::min<int>(cfg.workers, static_cast<int>(unresolved.size()));
      pool.reserve(n);
      for (int t = 0; t < n; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    } else if (cfg.applyUnitsImmediately) {
      for (std::size_t i = 0; i < unresolved.size(); ++i) {
        outcomes[i] = freeForNegation(working, unresolved[i], ffnOpt);
        if (outcomes[i].completed && outcomes[i].free) {
          working.addUnit(neg(unresolved[i]));
          result.learnedOrder.push_back(unresolved[i]);
        }
      }
    } else {
      const CnfFormula roundStart = working;
      for (std::size_t i = 0; i < unresolved.size(); ++i)
        outcomes[i] = freeForNegation(roundStart, unresolved[i], ffnOpt);
    }

    std::vector<Var> stillUnresolved;
    bool progress = false;
    for (std::size_t i = 0; i < unresolved.size(); ++i) {
      Var x = unresolved[i];
      accumulate(result.stats, outcomes[i].stats);
      if (!outcomes[i].completed) {
        stillUnresolved.push_back(x);
        continue;
      }
      progress = true;
      if (outcomes[i].free) {
        result.status[x] = VarStatus::Free;
        result.free.push_back(x);
        if (cfg.workers > 1 || !cfg.applyUnitsImmediately) {
          working.addUnit(neg(x));
          result.learnedOrder.push_back(x);
        }
      } else {
        result.status[x] = VarStatus::NotFree;
      }
    }
    unresolved = std::move(stillUnresolved);
    if (unresolved.empty()) break;

    if (cfg.noLimits)
      throw std::logic_error("unbounded free-for-negation test did not complete");
    if (budget < cfg.maxBudget) {
      budget = std::min<std::int64_t>(
          cfg.maxBudget,
          static_cast<std::int64_t>(std::ceil(static_cast<double>(budget) * cfg.multiplier)));
    } else if (!progress) {
      break;  // budget capped and the round resolved nothing
    }
  }

  result.exact = std::all_of(candidates.begin(), candidates.end(), [&](Var v) {
    return result.status[v] != VarStatus::Unresolved;
  });
  result.stats.wallMs =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

GcwaClosure gcwaClosure(const CnfFormula& phi, const ScheduleConfig& cfg) {
  ClosureResult r = freeForNegationAll(phi, cfg);
  GcwaClosure closure{phi, r.exact, r.vacuous};
  for (Var x : r.free) closure.formula.addUnit(neg(x));
  return closure;
}

}  // namespace mincirc
