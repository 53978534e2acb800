#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mincirc {

// Variables are 1-based. Indices above a formula's original universe denote
// solver-allocated fresh variables (Tseitin representatives, selectors).
using Var = std::int32_t;

// A possibly negated variable. Encoded as 2*v for x_v and 2*v+1 for ~x_v, so
// sorting groups the two phases of a variable next to each other.
class Lit {
 public:
  Lit() = default;
  Lit(Var v, bool positive);

  // DIMACS convention: +v is the positive literal, -v the negative one.
  static Lit fromDimacs(int code);
  int toDimacs() const;

  Var var() const { return static_cast<Var>(code_ >> 1); }
  bool positive() const { return (code_ & 1) == 0; }
  Lit operator~() const;

  bool operator==(const Lit&) const = default;
  auto operator<=>(const Lit&) const = default;

 private:
  std::int32_t code_ = 0;
};

inline Lit pos(Var v) { return Lit(v, true); }
inline Lit neg(Var v) { return Lit(v, false); }

// A disjunction of literals, kept sorted and duplicate-free. Clauses holding a
// complementary pair (tautologies) are not representable; make() rejects them.
class Clause {
 public:
  Clause() = default;

  // Returns nullopt for tautological input; duplicates are merged.
  static std::optional<Clause> make(std::vector<Lit> lits);
  static Clause unit(Lit l);

  std::span<const Lit> lits() const { return lits_; }
  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  bool contains(Lit l) const;
  Var maxVar() const;

  // Only positive literals; the shape quantified over by the GCWA rule.
  bool isPositive() const;

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;

 private:
  std::vector<Lit> lits_;
};

// A CNF formula over variables 1..universe. The empty clause set is the
// constant-true formula; a formula containing the empty clause is
// constant-false, so substitution stays total.
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(Var universe);
  static CnfFormula fromClauses(Var universe, std::vector<Clause> clauses);

  // Throws std::invalid_argument if a literal exceeds the universe.
  void addClause(Clause c);
  void addUnit(Lit l);

  Var universe() const { return universe_; }
  // Grows the universe; new variables are unconstrained. Never shrinks.
  void extendUniverse(Var universe);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t numClauses() const { return clauses_.size(); }
  bool constantTrue() const { return clauses_.empty(); }
  bool constantFalse() const;

  bool operator==(const CnfFormula&) const = default;

 private:
  std::vector<Clause> clauses_;
  Var universe_ = 0;
};

// A total map from variables 1..universe to {0,1}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(Var universe);  // all-zero

  Var universe() const { return static_cast<Var>(values_.size()); }
  // Throws std::out_of_range for variables outside the universe.
  bool value(Var v) const;
  void set(Var v, bool value);

  // Restriction to 1..universe (universe must not exceed this one's).
  Assignment project(Var universe) const;

  // Notation {x1^v1, ..., xn^vn}; debugging aid.
  std::string toString() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

enum class VarGroup : std::uint8_t {
  Minimized,  // P
  Fixed,      // Q
  Varying,    // Z
};

// A disjoint (P, Q, Z) cover of 1..universe driving the generalized
// minimality order. Q = Z = empty gives the plain bitwise order.
class Partition {
 public:
  Partition() = default;

  static Partition allMinimized(Var universe);
  // Variables not listed in any group default to Minimized. Throws
  // std::invalid_argument on overlap or out-of-range indices.
  static Partition make(Var universe, std::span<const Var> minimized,
                        std::span<const Var> fixed, std::span<const Var> varying);

  Var universe() const { return static_cast<Var>(groups_.size()); }
  VarGroup group(Var v) const;
  // New variables join the Minimized set.
  void extendTo(Var universe);

  std::vector<Var> vars(VarGroup g) const;
  bool allMin() const;

 private:
  std::vector<VarGroup> groups_;
};

// nu <=_(P,Z) mu: equal on Q, pointwise <= on P; Z does not participate.
bool smallerEq(const Assignment& nu, const Assignment& mu, const Partition& part);
// Strict version: smallerEq both ways fails for mu.
bool strictlySmaller(const Assignment& nu, const Assignment& mu, const Partition& part);

// phi[S0 -> 0, S1 -> 1]: satisfied clauses are dropped, falsified literals are
// deleted. Throws std::invalid_argument if S0 and S1 overlap.
CnfFormula substitute(const CnfFormula& phi, std::span<const Var> s0,
                      std::span<const Var> s1);

bool evaluate(const Assignment& nu, const CnfFormula& phi);
bool evaluate(const Assignment& nu, const Clause& c);

// The constraint whose models (conjoined with phi) are exactly the models of
// phi strictly below nu in the (P,Z) order: units keeping nu's P-zeros at
// zero, a clause flipping at least one P-one, and units pinning Q to nu.
//
// With forceZero (a P-variable with nu(forceZero) = 1) the strictness clause
// is replaced by the unit ~forceZero, which already guarantees strictness.
CnfFormula smallerModelConstraint(const Assignment& nu, const Partition& part,
                                  std::optional<Var> forceZero = std::nullopt);

}  // namespace mincirc
