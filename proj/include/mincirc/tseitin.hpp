#pragma once

#include <vector>

#include "mincirc/boolexpr.hpp"
#include "mincirc/formula.hpp"

namespace mincirc {

// Monotone fresh-variable counter; starts right above an existing universe.
class FreshVarAllocator {
 public:
  explicit FreshVarAllocator(Var first) : next_(first) {}

  Var allocate(Var count = 1) {
    Var first = next_;
    next_ += count;
    return first;
  }
  Var next() const { return next_; }

 private:
  Var next_;
};

struct TseitinCnf {
  std::vector<Clause> clauses;
  // CNF input only: the representative r_c of each input clause, in order.
  // r_c is defined to be equivalent to its clause.
  std::vector<Var> clauseReps;
};

// CNF encoding whose models, projected to f's variables, are exactly the
// assignments falsifying f.
//
// For a CNF input each clause c gets a representative r_c with {~r_c v c} and
// {~l v r_c : l in c}, plus the disjunction {v_c ~r_c}. For a BoolExpr input
// the negation is encoded structurally, emitting only the clause directions
// required by each subformula's polarity.
TseitinCnf tseitinNegation(const CnfFormula& f, FreshVarAllocator& fresh);
TseitinCnf tseitinNegation(const BoolExpr& f, FreshVarAllocator& fresh);

}  // namespace mincirc
