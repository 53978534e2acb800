#include "mincirc/formula.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mincirc {

Lit::Lit(Var v, bool positive) : code_(2 * v + (positive ? 0 : 1)) {
  assert(v >= 1);
}

Lit Lit::fromDimacs(int code) {
  if (code == 0) throw std::invalid_argument("literal 0 is reserved");
  return code > 0 ? Lit(code, true) : Lit(-code, false);
}

int Lit::toDimacs() const { return positive() ? var() : -var(); }

Lit Lit::operator~() const {
  Lit l;
  l.code_ = code_ ^ 1;
  return l;
}

std::optional<Clause> Clause::make(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i].var() == lits[i + 1].var()) return std::nullopt;  // tautology
  Clause c;
  c.lits_ = std::move(lits);
  return c;
}

Clause Clause::unit(Lit l) {
  Clause c;
  c.lits_ = {l};
  return c;
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

Var Clause::maxVar() const {
  return lits_.empty() ? 0 : lits_.back().var();
}

bool Clause::isPositive() const {
  return !lits_.empty() &&
         std::all_of(lits_.begin(), lits_.end(), [](Lit l) { return l.positive(); });
}

CnfFormula::CnfFormula(Var universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

CnfFormula CnfFormula::fromClauses(Var universe, std::vector<Clause> clauses) {
  CnfFormula f(universe);
  for (auto& c : clauses) f.addClause(std::move(c));
  return f;
}

void CnfFormula::addClause(Clause c) {
  if (c.maxVar() > universe_)
    throw std::invalid_argument("clause literal exceeds formula universe");
  clauses_.push_back(std::move(c));
}

void CnfFormula::addUnit(Lit l) { addClause(Clause::unit(l)); }

void CnfFormula::extendUniverse(Var universe) {
  if (universe > universe_) universe_ = universe;
}

bool CnfFormula::constantFalse() const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [](const Clause& c) { return c.empty(); });
}

Assignment::Assignment(Var universe) : values_(universe, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

bool Assignment::value(Var v) const {
  if (v < 1 || v > universe())
    throw std::out_of_range("variable outside assignment universe");
  return values_[v - 1] != 0;
}

void Assignment::set(Var v, bool value) {
  if (v < 1 || v > universe())
    throw std::out_of_range("variable outside assignment universe");
  values_[v - 1] = value ? 1 : 0;
}

Assignment Assignment::project(Var universe) const {
  if (universe > this->universe())
    throw std::out_of_range("projection beyond assignment universe");
  Assignment r(universe);
  for (Var v = 1; v <= universe; ++v) r.set(v, value(v));
  return r;
}

std::string Assignment::toString() const {
  std::ostringstream os;
  os << '{';
  for (Var v = 1; v <= universe(); ++v) {
    if (v > 1) os << ' ';
    os << 'x' << v << '^' << (value(v) ? 1 : 0);
  }
  os << '}';
  return os.str();
}

Partition Partition::allMinimized(Var universe) {
  Partition p;
  p.groups_.assign(universe, VarGroup::Minimized);
  return p;
}

Partition Partition::make(Var universe, std::span<const Var> minimized,
                          std::span<const Var> fixed, std::span<const Var> varying) {
  Partition p = allMinimized(universe);
  std::vector<bool> listed(universe + 1, false);
  auto place = [&](std::span<const Var> vars, VarGroup g) {
    for (Var v : vars) {
      if (v < 1 || v > universe)
        throw std::invalid_argument("partition variable outside universe");
      if (listed[v]) throw std::invalid_argument("partition groups overlap");
      listed[v] = true;
      p.groups_[v - 1] = g;
    }
  };
  place(minimized, VarGroup::Minimized);
  place(fixed, VarGroup::Fixed);
  place(varying, VarGroup::Varying);
  return p;
}

VarGroup Partition::group(Var v) const {
  if (v < 1 || v > universe())
    throw std::out_of_range("variable outside partition universe");
  return groups_[v - 1];
}

void Partition::extendTo(Var universe) {
  while (static_cast<Var>(groups_.size()) < universe)
    groups_.push_back(VarGroup::Minimized);
}

std::vector<Var> Partition::vars(VarGroup g) const {
  std::vector<Var> r;
  for (Var v = 1; v <= universe(); ++v)
    if (groups_[v - 1] == g) r.push_back(v);
  return r;
}

bool Partition::allMin() const {
  return std::all_of(groups_.begin(), groups_.end(),
                     [](VarGroup g) { return g == VarGroup::Minimized; });
}

bool smallerEq(const Assignment& nu, const Assignment& mu, const Partition& part) {
  for (Var v = 1; v <= part.universe(); ++v) {
    switch (part.group(v)) {
      case VarGroup::Minimized:
        if (nu.value(v) > mu.value(v)) return false;
        break;
      case VarGroup::Fixed:
        if (nu.value(v) != mu.value(v)) return false;
        break;
      case VarGroup::Varying:
        break;
    }
  }
  return true;
}

bool strictlySmaller(const Assignment& nu, const Assignment& mu, const Partition& part) {
  return smallerEq(nu, mu, part) && !smallerEq(mu, nu, part);
}

CnfFormula substitute(const CnfFormula& phi, std::span<const Var> s0,
                      std::span<const Var> s1) {
  Var top = phi.universe();
  for (Var v : s0) top = std::max(top, v);
  for (Var v : s1) top = std::max(top, v);

  // 0 untouched, 1 -> substitute 0, 2 -> substitute 1
  std::vector<std::uint8_t> sub(top + 1, 0);
  for (Var v : s0) {
    if (v < 1) throw std::invalid_argument("substitution variable must be positive");
    sub[v] = 1;
  }
  for (Var v : s1) {
    if (v < 1) throw std::invalid_argument("substitution variable must be positive");
    if (sub[v] == 1) throw std::invalid_argument("substitution sets overlap");
    sub[v] = 2;
  }

  CnfFormula result(phi.universe());
  for (const Clause& c : phi.clauses()) {
    std::vector<Lit> kept;
    bool satisfied = false;
    for (Lit l : c.lits()) {
      std::uint8_t s = sub[l.var()];
      if (s == 0) {
        kept.push_back(l);
      } else if ((s == 2) == l.positive()) {
        satisfied = true;
        break;
      }
      // falsified literal: dropped
    }
    if (satisfied) continue;
    auto reduced = Clause::make(std::move(kept));
    assert(reduced.has_value());  // deleting literals cannot create a tautology
    result.addClause(std::move(*reduced));
  }
  return result;
}

bool evaluate(const Assignment& nu, const Clause& c) {
  for (Lit l : c.lits())
    if (nu.value(l.var()) == l.positive()) return true;
  return false;
}

bool evaluate(const Assignment& nu, const CnfFormula& phi) {
  if (nu.universe() < phi.universe())
    throw std::out_of_range("assignment does not cover the formula universe");
  for (const Clause& c : phi.clauses())
    if (!evaluate(nu, c)) return false;
  return true;
}

CnfFormula smallerModelConstraint(const Assignment& nu, const Partition& part,
                                  std::optional<Var> forceZero) {
  if (nu.universe() != part.universe())
    throw std::invalid_argument("assignment and partition universes differ");
  if (forceZero) {
    if (part.group(*forceZero) != VarGroup::Minimized || !nu.value(*forceZero))
      throw std::invalid_argument("forceZero must be a P-variable at value 1");
  }

  CnfFormula constraint(nu.universe());
  std::vector<Lit> strictness;
  for (Var v = 1; v <= nu.universe(); ++v) {
    switch (part.group(v)) {
      case VarGroup::Minimized:
        if (!nu.value(v))
          constraint.addUnit(neg(v));
        else if (!forceZero)
          strictness.push_back(neg(v));
        break;
      case VarGroup::Fixed:
        constraint.addUnit(nu.value(v) ? pos(v) : neg(v));
        break;
      case VarGroup::Varying:
        break;
    }
  }
  if (forceZero) {
    constraint.addUnit(neg(*forceZero));
  } else {
    // Possibly the empty clause: nothing lies below an all-zero P.
    constraint.addClause(*Clause::make(std::move(strictness)));
  }
  return constraint;
}

}  // namespace mincirc
