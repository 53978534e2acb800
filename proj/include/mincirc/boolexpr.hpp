#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincirc/formula.hpp"

namespace mincirc {

// An arbitrary propositional query. Unlike CnfFormula this is a free-form
// operator tree; variable indices may exceed the universe of the formula it
// is queried against (the universe is extended at query time).
class BoolExpr {
 public:
  enum class Kind { Var, Const, Not, And, Or, Implies, Iff };

  static BoolExpr var(Var v);
  static BoolExpr constant(bool value);
  static BoolExpr negation(BoolExpr e);
  static BoolExpr conjunction(std::vector<BoolExpr> children);
  static BoolExpr disjunction(std::vector<BoolExpr> children);
  static BoolExpr implication(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr equivalence(BoolExpr lhs, BoolExpr rhs);

  Kind kind() const { return kind_; }
  Var variable() const;
  bool constValue() const;
  std::span<const BoolExpr> children() const { return children_; }

  Var maxVar() const;
  std::string toString() const;

 private:
  explicit BoolExpr(Kind k) : kind_(k) {}

  Kind kind_;
  Var var_ = 0;
  bool const_ = false;
  std::vector<BoolExpr> children_;
};

bool evaluate(const Assignment& nu, const BoolExpr& e);

class QueryParseError : public std::runtime_error {
 public:
  QueryParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, low to high precedence: `<->`, `->` (right-assoc), `|`, `&`, `!`.
// Atoms are positive integers, `T`, `F`, and parenthesized expressions;
// `-n` is sugar for `!n`. Throws QueryParseError with a character position.
BoolExpr parseQuery(std::string_view text);

}  // namespace mincirc
