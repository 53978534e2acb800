#pragma once

#include <vector>

#include "mincirc/boolexpr.hpp"
#include "mincirc/formula.hpp"

namespace mincirc::oracle {

// Hard caps; everything here is exponential by design and exists to
// cross-check the engines on small universes.
inline constexpr Var kMaxEnumUniverse = 16;
inline constexpr Var kMaxMinimalUniverse = 10;
inline constexpr Var kMaxGcwaUniverse = 8;

// Satisfying assignments in lexicographic order of (x1, ..., xn).
// Throws std::invalid_argument when the universe exceeds the limit.
std::vector<Assignment> allModels(const CnfFormula& phi,
                                  Var limit = kMaxEnumUniverse);

// Models with no other model strictly below them in the (P,Z) order.
std::vector<Assignment> minimalModels(const CnfFormula& phi, const Partition& part,
                                      Var limit = kMaxMinimalUniverse);

// psi holds in every (P,Z)-minimal model of phi. The universe is the combined
// one of phi and psi; extension variables are unconstrained and minimized.
bool entailsMinBf(const CnfFormula& phi, const BoolExpr& psi, const Partition& part,
                  Var limit = kMaxMinimalUniverse);

// Variables taking value 0 in every minimal model (plain bitwise order).
std::vector<Var> ffnBf(const CnfFormula& phi, Var limit = kMaxMinimalUniverse);

// Definitional GCWA check: x is free for negation iff for every positive
// clause B with phi not entailing B, phi does not entail B v x either.
// B ranges over all positive clauses including the empty one, whose condition
// degenerates to "phi is satisfiable implies phi does not entail x".
bool gcwaFreeCheckBf(const CnfFormula& phi, Var x, Var limit = kMaxGcwaUniverse);

// nu is a model of phi with nothing strictly below it. Throws
// std::invalid_argument when nu does not satisfy phi.
bool isMinimalModel(const CnfFormula& phi, const Assignment& nu,
                    const Partition& part, Var limit = kMaxMinimalUniverse);

}  // namespace mincirc::oracle
