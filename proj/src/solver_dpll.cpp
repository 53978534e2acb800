#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mincirc/solver.hpp"

namespace mincirc {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int8_t kUndef = -1;

// Chronological backtracking with unit propagation by full clause scan.
// No learning, no heuristics beyond the polarity phase; conflicts count
// failed branches.
class BacktrackingSolver final : public SatSolver {
 public:
  explicit BacktrackingSolver(Var numVars) {
    if (numVars < 0) throw std::invalid_argument("negative variable count");
    reserveVars(numVars);
  }

  Var numVars() const override { return nvars_; }

  Var reserveVars(Var count) override {
    if (count < 0) throw std::invalid_argument("negative reservation");
    Var first = nvars_ + 1;
    nvars_ += count;
    value_.resize(nvars_ + 1, kUndef);
    return first;
  }

  void addClause(const Clause& c) override {
    if (c.maxVar() > nvars_)
      throw std::invalid_argument("clause literal exceeds solver variables");
    clauses_.push_back(std::vector<Lit>(c.lits().begin(), c.lits().end()));
  }

  SolveResult solve(const SolveLimits& limits, Polarity polarity) override {
    ++stats_.solves;
    if ((limits.maxConflicts && *limits.maxConflicts <= 0) ||
        (limits.maxMillis && *limits.maxMillis <= 0))
      return {SolveResult::Kind::BudgetExhausted, std::nullopt};

    limits_ = limits;
    conflictsHere_ = 0;
    exhausted_ = false;
    if (limits.maxMillis)
      deadline_ = Clock::now() + std::chrono::milliseconds(*limits.maxMillis);
    std::fill(value_.begin(), value_.end(), kUndef);
    trail_.clear();

    bool sat = search(polarity);
    if (exhausted_) return {SolveResult::Kind::BudgetExhausted, std::nullopt};
    if (!sat) return {SolveResult::Kind::Unsat, std::nullopt};
    Assignment m(nvars_);
    for (Var v = 1; v <= nvars_; ++v) m.set(v, value_[v] == 1);
    return {SolveResult::Kind::Sat, std::move(m)};
  }

  const SolverStats& stats() const override { return stats_; }

 private:
  std::int8_t litValue(Lit l) const {
    std::int8_t v = value_[l.var()];
    return v == kUndef ? kUndef : static_cast<std::int8_t>(l.positive() ? v : 1 - v);
  }

  void assign(Var v, bool val) {
    value_[v] = val ? 1 : 0;
    trail_.push_back(v);
  }

  void undoTo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUndef;
      trail_.pop_back();
    }
  }

  // Fixpoint unit propagation; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        Lit unit{};
        bool satisfied = false;
        for (Lit l : c) {
          std::int8_t v = litValue(l);
          if (v == 1) {
            satisfied = true;
            break;
          }
          if (v == kUndef) {
            ++unassigned;
            unit = l;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          ++stats_.propagations;
          assign(unit.var(), unit.positive());
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(Polarity polarity) {
    if (exhausted_) return false;
    if (limits_.maxMillis && Clock::now() >= deadline_) {
      exhausted_ = true;
      return false;
    }
    std::size_t mark = trail_.size();
    if (!propagate()) {
      undoTo(mark);
      return false;
    }
    Var v = 0;
    for (Var u = 1; u <= nvars_; ++u)
      if (value_[u] == kUndef) {
        v = u;
        break;
      }
    if (v == 0) return true;

    bool first = polarity == Polarity::PreferTrue;
    for (int attempt = 0; attempt < 2; ++attempt) {
      ++stats_.decisions;
      std::size_t branchMark = trail_.size();
      assign(v, attempt == 0 ? first : !first);
      if (search(polarity)) return true;
      undoTo(branchMark);
      if (exhausted_) {
        undoTo(mark);
        return false;
      }
      ++stats_.conflicts;
      if (++conflictsHere_ >= limits_.maxConflicts.value_or(
                                  std::numeric_limits<std::int64_t>::max())) {
        exhausted_ = true;
        undoTo(mark);
        return false;
      }
    }
    undoTo(mark);
    return false;
  }

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::int8_t> value_;
  std::vector<Var> trail_;
  Var nvars_ = 0;
  SolveLimits limits_;
  Clock::time_point deadline_{};
  std::int64_t conflictsHere_ = 0;
  bool exhausted_ = false;
  SolverStats stats_;
};

}  // namespace

std::unique_ptr<SatSolver> makeBacktrackingSolver(Var numVars) {
  return std::make_unique<BacktrackingSolver>(numVars);
}

}  // namespace mincirc
