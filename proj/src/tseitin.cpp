#include "mincirc/tseitin.hpp"

namespace mincirc {

TseitinCnf tseitinNegation(const CnfFormula& f, FreshVarAllocator& fresh) {
  TseitinCnf out;
  std::vector<Lit> falsity;
  for (const Clause& c : f.clauses()) {
    Var r = fresh.allocate();
    out.clauseReps.push_back(r);
    // r_c -> c; for an empty clause this degenerates to the unit ~r_c.
    std::vector<Lit> def{neg(r)};
    def.insert(def.end(), c.lits().begin(), c.lits().end());
    out.clauses.push_back(*Clause::make(std::move(def)));
    // c -> r_c
    for (Lit l : c.lits()) out.clauses.push_back(*Clause::make({~l, pos(r)}));
    falsity.push_back(neg(r));
  }
  // At least one clause is false. Empty for a constant-true input: the
  // negation is unsatisfiable and the encoding is the empty clause.
  out.clauses.push_back(*Clause::make(std::move(falsity)));
  return out;
}

namespace {

// Constant folding so the structural encoder never meets Const nodes.
// Implies/Iff survive; only constants are propagated.
BoolExpr fold(const BoolExpr& e) {
  using K = BoolExpr::Kind;
  switch (e.kind()) {
    case K::Var:
    case K::Const:
      return e;
    case K::Not: {
      BoolExpr c = fold(e.children()[0]);
      if (c.kind() == K::Const) return BoolExpr::constant(!c.constValue());
      return BoolExpr::negation(std::move(c));
    }
    case K::And:
    case K::Or: {
      bool isAnd = e.kind() == K::And;
      std::vector<BoolExpr> kept;
      for (const BoolExpr& child : e.children()) {
        BoolExpr c = fold(child);
        if (c.kind() == K::Const) {
          if (c.constValue() != isAnd) return c;  // absorbing element
          continue;                               // neutral element
        }
        kept.push_back(std::move(c));
      }
      if (kept.empty()) return BoolExpr::constant(isAnd);
      if (kept.size() == 1) return std::move(kept[0]);
      return isAnd ? BoolExpr::conjunction(std::move(kept))
                   : BoolExpr::disjunction(std::move(kept));
    }
    case K::Implies: {
      BoolExpr a = fold(e.children()[0]);
      BoolExpr b = fold(e.children()[1]);
      if (a.kind() == K::Const)
        return a.constValue() ? b : BoolExpr::constant(true);
      if (b.kind() == K::Const)
        return b.constValue() ? b : fold(BoolExpr::negation(std::move(a)));
      return BoolExpr::implication(std::move(a), std::move(b));
    }
    case K::Iff: {
      BoolExpr a = fold(e.children()[0]);
      BoolExpr b = fold(e.children()[1]);
      if (a.kind() == K::Const)
        return a.constValue() ? b : fold(BoolExpr::negation(std::move(b)));
      if (b.kind() == K::Const)
        return b.constValue() ? a : fold(BoolExpr::negation(std::move(a)));
      return BoolExpr::equivalence(std::move(a), std::move(b));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

class StructuralEncoder {
 public:
  StructuralEncoder(FreshVarAllocator& fresh, std::vector<Clause>& out)
      : fresh_(fresh), out_(out) {}

  // Returns a literal equivalent to e in the needed polarity direction(s).
  // positive > 0: clauses for lit -> e; negative < 0: clauses for ~lit -> ~e;
  // 0: both. Input is constant-free (see fold()).
  Lit encode(const BoolExpr& e, int polarity) {
    using K = BoolExpr::Kind;
    switch (e.kind()) {
      case K::Var:
        return pos(e.variable());
      case K::Not:
        return ~encode(e.children()[0], -polarity);
      case K::And:
      case K::Or: {
        bool isAnd = e.kind() == K::And;
        std::vector<Lit> children;
        for (const BoolExpr& c : e.children())
          children.push_back(encode(c, polarity));
        Lit t = pos(fresh_.allocate());
        if (polarity >= 0) {
          // t -> And(c): each child; t -> Or(c): one long clause
          if (isAnd) {
            for (Lit c : children) emit({~t, c});
          } else {
            std::vector<Lit> cl{~t};
            cl.insert(cl.end(), children.begin(), children.end());
            emit(std::move(cl));
          }
        }
        if (polarity <= 0) {
          if (isAnd) {
            std::vector<Lit> cl{t};
            for (Lit c : children) cl.push_back(~c);
            emit(std::move(cl));
          } else {
            for (Lit c : children) emit({t, ~c});
          }
        }
        return t;
      }
      case K::Implies: {
        Lit a = encode(e.children()[0], -polarity);
        Lit b = encode(e.children()[1], polarity);
        Lit t = pos(fresh_.allocate());
        if (polarity >= 0) emit({~t, ~a, b});
        if (polarity <= 0) {
          emit({t, a});
          emit({t, ~b});
        }
        return t;
      }
      case K::Iff: {
        Lit a = encode(e.children()[0], 0);
        Lit b = encode(e.children()[1], 0);
        Lit t = pos(fresh_.allocate());
        if (polarity >= 0) {
          emit({~t, ~a, b});
          emit({~t, a, ~b});
        }
        if (polarity <= 0) {
          emit({t, a, b});
          emit({t, ~a, ~b});
        }
        return t;
      }
      case K::Const:
        break;
    }
    throw std::logic_error("constant met in structural encoder");
  }

 private:
  void emit(std::vector<Lit> lits) {
    // Tautological definition clauses (e.g. from Or(x, !x)) are vacuous.
    if (auto c = Clause::make(std::move(lits))) out_.push_back(std::move(*c));
  }

  FreshVarAllocator& fresh_;
  std::vector<Clause>& out_;
};

}  // namespace

TseitinCnf tseitinNegation(const BoolExpr& f, FreshVarAllocator& fresh) {
  TseitinCnf out;
  BoolExpr g = fold(BoolExpr::negation(f));
  if (g.kind() == BoolExpr::Kind::Const) {
    if (!g.constValue()) out.clauses.push_back(Clause());  // no non-model exists
    return out;
  }
  StructuralEncoder enc(fresh, out.clauses);
  Lit root = enc.encode(g, +1);
  out.clauses.push_back(Clause::unit(root));
  return out;
}

}  // namespace mincirc
