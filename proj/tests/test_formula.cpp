#include <doctest.h>

#include <random>

#include "mincirc/formula.hpp"
#include "mincirc/oracle.hpp"
#include "support/gen.hpp"

using namespace mincirc;

namespace {

CnfFormula cnf(Var universe, std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f(universe);
  for (const auto& raw : clauses) {
    std::vector<Lit> lits;
    for (int code : raw) lits.push_back(Lit::fromDimacs(code));
    f.addClause(*Clause::make(std::move(lits)));
  }
  return f;
}

Assignment assign(std::initializer_list<int> bits) {
  Assignment a(static_cast<Var>(bits.size()));
  Var v = 1;
  for (int b : bits) a.set(v++, b != 0);
  return a;
}

}  // namespace

TEST_CASE("literals round-trip the DIMACS encoding") {
  Lit a = Lit::fromDimacs(3);
  CHECK(a.var() == 3);
  CHECK(a.positive());
  CHECK((~a).toDimacs() == -3);
  CHECK(Lit::fromDimacs(-7) == neg(7));
  CHECK_THROWS_AS(Lit::fromDimacs(0), std::invalid_argument);
}

TEST_CASE("clause construction merges duplicates and rejects tautologies") {
  auto c = Clause::make({pos(2), pos(1), pos(2)});
  REQUIRE(c.has_value());
  CHECK(c->size() == 2);
  CHECK(c->contains(pos(1)));
  CHECK_FALSE(Clause::make({pos(1), neg(1)}).has_value());
  CHECK(Clause::make({pos(1), pos(2)})->isPositive());
  CHECK_FALSE(Clause::make({pos(1), neg(2)})->isPositive());
  CHECK_FALSE(Clause::make(std::vector<Lit>{})->isPositive());
}

TEST_CASE("constant formulas") {
  CnfFormula t(3);
  CHECK(t.constantTrue());
  CHECK_FALSE(t.constantFalse());
  t.addClause(*Clause::make(std::vector<Lit>{}));
  CHECK(t.constantFalse());
  CHECK_THROWS_AS(CnfFormula(2).addUnit(pos(3)), std::invalid_argument);
}

TEST_CASE("substitution drops satisfied clauses and strips falsified literals") {
  // phi = (~x v y), S0 = {x, y}: constant-true
  CnfFormula phi = cnf(2, {{-1, 2}});
  std::vector<Var> s0{1, 2};
  CHECK(substitute(phi, s0, {}).constantTrue());

  // phi = (x v y)(~x v z), x -> 0: (y)
  CnfFormula phi2 = cnf(3, {{1, 2}, {-1, 3}});
  std::vector<Var> just1{1};
  CnfFormula r = substitute(phi2, just1, {});
  CHECK(r == cnf(3, {{2}}));

  // phi = (x), x -> 0: constant-false
  CnfFormula phi3 = cnf(1, {{1}});
  CHECK(substitute(phi3, just1, {}).constantFalse());

  std::vector<Var> overlap{1};
  CHECK_THROWS_AS(substitute(phi2, overlap, overlap), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CnfFormula phi = cnf(2, {{-1, 2}});
  CHECK(evaluate(assign({0, 1}), phi));
  CHECK_FALSE(evaluate(assign({1, 0}), phi));
  CHECK_THROWS_AS(evaluate(Assignment(1), phi), std::out_of_range);
}

TEST_CASE("substitution is semantic: evaluate after overriding") {
  std::mt19937 rng(42);
  for (int round = 0; round < 60; ++round) {
    Var n = std::uniform_int_distribution<Var>(1, 6)(rng);
    CnfFormula phi = gen::randomCnf(rng, n, std::uniform_int_distribution<int>(1, 12)(rng));
    std::vector<Var> s0, s1;
    for (Var v = 1; v <= n; ++v) {
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: s0.push_back(v); break;
        case 1: s1.push_back(v); break;
        default: break;
      }
    }
    CnfFormula reduced = substitute(phi, s0, s1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Assignment nu(n);
      for (Var v = 1; v <= n; ++v) nu.set(v, (mask >> (v - 1)) & 1);
      Assignment overridden = nu;
      for (Var v : s0) overridden.set(v, false);
      for (Var v : s1) overridden.set(v, true);
      CHECK(evaluate(nu, reduced) == evaluate(overridden, phi));
    }
  }
}

TEST_CASE("partition construction and defaulting") {
  std::vector<Var> q{2}, z{3};
  Partition p = Partition::make(4, {}, q, z);
  CHECK(p.group(1) == VarGroup::Minimized);
  CHECK(p.group(2) == VarGroup::Fixed);
  CHECK(p.group(3) == VarGroup::Varying);
  CHECK(p.group(4) == VarGroup::Minimized);
  CHECK(p.vars(VarGroup::Minimized) == std::vector<Var>{1, 4});
  CHECK_FALSE(p.allMin());

  std::vector<Var> both{2};
  CHECK_THROWS_AS(Partition::make(4, both, both, {}), std::invalid_argument);
  std::vector<Var> outside{5};
  CHECK_THROWS_AS(Partition::make(4, outside, {}, {}), std::invalid_argument);

  p.extendTo(6);
  CHECK(p.group(6) == VarGroup::Minimized);
}

TEST_CASE("the (P,Z) order ignores Z and pins Q") {
  std::vector<Var> pv{1}, qv{2}, zv{3};
  Partition part = Partition::make(3, pv, qv, zv);
  // nu = {p0 q1 z1}, mu = {p1 q1 z0}: nu < mu despite z rising
  CHECK(strictlySmaller(assign({0, 1, 1}), assign({1, 1, 0}), part));
  // differing q blocks comparison
  CHECK_FALSE(smallerEq(assign({0, 0, 0}), assign({1, 1, 0}), part));
  // equal on P and Q: not strict in either direction
  CHECK_FALSE(strictlySmaller(assign({1, 1, 0}), assign({1, 1, 1}), part));
  CHECK(smallerEq(assign({1, 1, 0}), assign({1, 1, 1}), part));
}

TEST_CASE("smaller-model constraint, plain ordering") {
  Partition all2 = Partition::allMinimized(2);
  // nu = {x1 y1}: single clause (~x v ~y)
  CnfFormula c = smallerModelConstraint(assign({1, 1}), all2);
  CHECK(c == cnf(2, {{-1, -2}}));

  // nu = {x0 y0}: nothing below the bottom element
  CnfFormula bottom = smallerModelConstraint(assign({0, 0}), all2);
  CHECK(bottom.constantFalse());
}

TEST_CASE("smaller-model constraint models are exactly the strictly-smaller ones") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    Var n = std::uniform_int_distribution<Var>(1, 5)(rng);
    Partition part = gen::randomPqzPartition(rng, n);
    Assignment nu = gen::randomAssignment(rng, n);
    CnfFormula constraint = smallerModelConstraint(nu, part);
    for (const Assignment& mu : oracle::allModels(CnfFormula(n))) {
      CHECK(evaluate(mu, constraint) == strictlySmaller(mu, nu, part));
    }
  }
}

TEST_CASE("smaller-model constraint with a forced variable") {
  // nu = {p1 q1 z0}, P={p}, Q={q}, Z={z}: units q and ~p, z free
  std::vector<Var> pv{1}, qv{2}, zv{3};
  Partition part = Partition::make(3, pv, qv, zv);
  CnfFormula c = smallerModelConstraint(assign({1, 1, 0}), part);
  int models = 0;
  for (const Assignment& mu : oracle::allModels(CnfFormula(3))) {
    bool expect = !mu.value(1) && mu.value(2);
    CHECK(evaluate(mu, c) == expect);
    models += evaluate(mu, c);
  }
  CHECK(models == 2);

  // forceZero drops the strictness clause: zeros stay zero, x pinned to 0
  Partition all3 = Partition::allMinimized(3);
  Assignment nu = assign({1, 0, 1});
  CnfFormula forced = smallerModelConstraint(nu, all3, 1);
  for (const Assignment& mu : oracle::allModels(CnfFormula(3))) {
    bool expect = !mu.value(1) && !mu.value(2);  // x -> 0, nu's zero kept, z3 free
    CHECK(evaluate(mu, forced) == expect);
  }
  CHECK_THROWS_AS(smallerModelConstraint(nu, all3, 2), std::invalid_argument);
}

TEST_CASE("assignments print the paper notation") {
  CHECK(assign({1, 0}).toString() == "{x1^1 x2^0}");
}
