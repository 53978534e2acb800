#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "mincirc/solver.hpp"

namespace mincirc {

void SatSolver::addFormula(const CnfFormula& phi) {
  if (phi.universe() > numVars())
    throw std::invalid_argument("formula universe exceeds solver variables");
  for (const Clause& c : phi.clauses()) addClause(c);
}

SolverFactory cdclFactory(std::uint64_t seed) {
  return [seed](Var n) { return makeCdclSolver(n, seed); };
}

SolverFactory backtrackingFactory() {
  return [](Var n) { return makeBacktrackingSolver(n); };
}

namespace {

using Clock = std::chrono::steady_clock;

// Encoded literal: 2*v for x_v, 2*v+1 for ~x_v.
inline int enc(Lit l) { return 2 * l.var() + (l.positive() ? 0 : 1); }
inline Var varOf(int e) { return e >> 1; }
inline bool negative(int e) { return e & 1; }

constexpr std::int8_t kUndef = -1;

// The i-th element (1-based) of 1,1,2,1,1,2,4,1,...
std::int64_t luby(std::int64_t i) {
  for (;;) {
    std::int64_t k = 1;
    while ((std::int64_t(1) << k) - 1 < i) ++k;
    if ((std::int64_t(1) << k) - 1 == i) return std::int64_t(1) << (k - 1);
    i -= (std::int64_t(1) << (k - 1)) - 1;
  }
}

class CdclSolver final : public SatSolver {
 public:
  CdclSolver(Var numVars, std::uint64_t seed) : seed_(seed) {
    if (numVars < 0) throw std::invalid_argument("negative variable count");
    reserveVars(numVars);
  }

  Var numVars() const override { return nvars_; }

  Var reserveVars(Var count) override {
    if (count < 0) throw std::invalid_argument("negative reservation");
    Var first = nvars_ + 1;
    nvars_ += count;
    value_.resize(nvars_ + 1, kUndef);
    level_.resize(nvars_ + 1, 0);
    reason_.resize(nvars_ + 1, -1);
    seen_.resize(nvars_ + 1, 0);
    savedPhase_.resize(nvars_ + 1, 0);
    activity_.resize(nvars_ + 1, 0.0);
    watches_.resize(2 * nvars_ + 2);
    if (seed_ != 0)
      for (Var v = first; v <= nvars_; ++v)
        activity_[v] = 1e-9 * static_cast<double>(mix(seed_, v) % 1024);
    return first;
  }

  void addClause(const Clause& c) override {
    if (c.maxVar() > nvars_)
      throw std::invalid_argument("clause literal exceeds solver variables");
    if (!ok_) return;
    assert(decisionLevel() == 0);
    // Root-level simplification: satisfied clauses vanish, falsified
    // literals are stripped, so stored clauses watch two free literals.
    std::vector<int> lits;
    for (Lit l : c.lits()) {
      int e = enc(l);
      std::int8_t v = litValue(e);
      if (v == 1) return;
      if (v == 0) continue;
      lits.push_back(e);
    }
    if (lits.empty()) {
      ok_ = false;
    } else if (lits.size() == 1) {
      enqueue(lits[0], -1);
    } else {
      attach(std::move(lits));
    }
  }

  SolveResult solve(const SolveLimits& limits, Polarity polarity) override {
    ++stats_.solves;
    if ((limits.maxConflicts && *limits.maxConflicts <= 0) ||
        (limits.maxMillis && *limits.maxMillis <= 0))
      return {SolveResult::Kind::BudgetExhausted, std::nullopt};
    if (!ok_) return {SolveResult::Kind::Unsat, std::nullopt};

    Clock::time_point deadline{};
    if (limits.maxMillis)
      deadline = Clock::now() + std::chrono::milliseconds(*limits.maxMillis);

    std::int64_t conflictsHere = 0;
    std::int64_t restartSeq = 1;
    std::int64_t restartLimit = 64 * luby(restartSeq);
    std::int64_t sinceRestart = 0;
    std::int64_t sinceTimeCheck = 0;

    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++stats_.conflicts;
        ++conflictsHere;
        ++sinceRestart;
        if (decisionLevel() == 0) {
          ok_ = false;
          return {SolveResult::Kind::Unsat, std::nullopt};
        }
        analyzeAndBackjump(confl);
        decayActivity();
        if (limits.maxConflicts && conflictsHere >= *limits.maxConflicts) {
          backtrack(0);
          return {SolveResult::Kind::BudgetExhausted, std::nullopt};
        }
        if (limits.maxMillis && (++sinceTimeCheck & 127) == 0 &&
            Clock::now() >= deadline) {
          backtrack(0);
          return {SolveResult::Kind::BudgetExhausted, std::nullopt};
        }
        if (sinceRestart >= restartLimit) {
          backtrack(0);
          sinceRestart = 0;
          restartLimit = 64 * luby(++restartSeq);
        }
      } else {
        Var next = pickBranchVar();
        if (next == 0) {
          SolveResult r{SolveResult::Kind::Sat, extractModel()};
          backtrack(0);
          return r;
        }
        if (limits.maxMillis && (++sinceTimeCheck & 1023) == 0 &&
            Clock::now() >= deadline) {
          backtrack(0);
          return {SolveResult::Kind::BudgetExhausted, std::nullopt};
        }
        ++stats_.decisions;
        trailLim_.push_back(static_cast<int>(trail_.size()));
        bool phase = polarity == Polarity::PreferTrue    ? true
                     : polarity == Polarity::PreferFalse ? false
                                                         : savedPhase_[next] != 0;
        enqueue(2 * next + (phase ? 0 : 1), -1);
      }
    }
  }

  const SolverStats& stats() const override { return stats_; }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t v) {
    std::uint64_t x = seed ^ (v * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
  }

  int decisionLevel() const { return static_cast<int>(trailLim_.size()); }

  std::int8_t litValue(int e) const {
    std::int8_t v = value_[varOf(e)];
    return v == kUndef ? kUndef : static_cast<std::int8_t>(v ^ (e & 1));
  }

  void enqueue(int e, int reason) {
    Var v = varOf(e);
    assert(value_[v] == kUndef);
    value_[v] = negative(e) ? 0 : 1;
    level_[v] = decisionLevel();
    reason_[v] = reason;
    trail_.push_back(e);
  }

  void attach(std::vector<int> lits) {
    int idx = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(idx);
    watches_[lits[1]].push_back(idx);
    clauses_.push_back(std::move(lits));
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];
      int fp = p ^ 1;  // literals of this encoding just became false
      auto& ws = watches_[fp];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        int ci = ws[i++];
        auto& c = clauses_[ci];
        if (c[0] == fp) std::swap(c[0], c[1]);
        assert(c[1] == fp);
        if (litValue(c[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (litValue(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (litValue(c[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        ++stats_.propagations;
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return -1;
  }

  void bump(Var v) {
    if ((activity_[v] += varInc_) > 1e100) {
      for (Var u = 1; u <= nvars_; ++u) activity_[u] *= 1e-100;
      varInc_ *= 1e-100;
    }
  }

  void decayActivity() { varInc_ /= 0.95; }

  // First-UIP learning; backjumps and enqueues the asserting literal.
  void analyzeAndBackjump(int confl) {
    std::vector<int> learnt{0};  // slot 0 is the asserting literal
    int counter = 0;
    int p = -1;
    int index = static_cast<int>(trail_.size()) - 1;

    do {
      assert(confl >= 0);
      const auto& c = clauses_[confl];
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        int q = c[k];
        Var v = varOf(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump(v);
          if (level_[v] >= decisionLevel())
            ++counter;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[varOf(trail_[index])]) --index;
      p = trail_[index--];
      confl = reason_[varOf(p)];
      seen_[varOf(p)] = 0;
      --counter;
    } while (counter > 0);
    learnt[0] = p ^ 1;

    int blevel = 0;
    if (learnt.size() > 1) {
      std::size_t maxAt = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[varOf(learnt[k])] > level_[varOf(learnt[maxAt])]) maxAt = k;
      std::swap(learnt[1], learnt[maxAt]);
      blevel = level_[varOf(learnt[1])];
    }
    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[varOf(learnt[k])] = 0;

    backtrack(blevel);
    if (learnt.size() == 1) {
      enqueue(learnt[0], -1);
    } else {
      int idx = static_cast<int>(clauses_.size());
      attach(std::move(learnt));
      enqueue(clauses_[idx][0], idx);
    }
  }

  void backtrack(int targetLevel) {
    if (decisionLevel() <= targetLevel) return;
    int bound = trailLim_[targetLevel];
    for (int k = static_cast<int>(trail_.size()) - 1; k >= bound; --k) {
      Var v = varOf(trail_[k]);
      savedPhase_[v] = value_[v];
      value_[v] = kUndef;
      reason_[v] = -1;
    }
    trail_.resize(bound);
    trailLim_.resize(targetLevel);
    qhead_ = trail_.size();
  }

  Var pickBranchVar() const {
    Var best = 0;
    for (Var v = 1; v <= nvars_; ++v)
      if (value_[v] == kUndef && (best == 0 || activity_[v] > activity_[best]))
        best = v;
    return best;
  }

  Assignment extractModel() const {
    Assignment m(nvars_);
    for (Var v = 1; v <= nvars_; ++v) {
      assert(value_[v] != kUndef);
      m.set(v, value_[v] == 1);
    }
    return m;
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<char> seen_;
  std::vector<std::int8_t> savedPhase_;
  std::vector<double> activity_;
  std::vector<int> trail_;
  std::vector<int> trailLim_;
  std::size_t qhead_ = 0;
  double varInc_ = 1.0;
  Var nvars_ = 0;
  bool ok_ = true;
  std::uint64_t seed_;
  SolverStats stats_;
};

}  // namespace

std::unique_ptr<SatSolver> makeCdclSolver(Var numVars, std::uint64_t seed) {
  return std::make_unique<CdclSolver>(numVars, seed);
}

}  // namespace mincirc
