#include <doctest.h>

#include "mincirc/boolexpr.hpp"

using namespace mincirc;

namespace {

Assignment assign(std::initializer_list<int> bits) {
  Assignment a(static_cast<Var>(bits.size()));
  Var v = 1;
  for (int b : bits) a.set(v++, b != 0);
  return a;
}

}  // namespace

TEST_CASE("query parsing basics") {
  BoolExpr e = parseQuery("!2");
  CHECK(e.kind() == BoolExpr::Kind::Not);
  CHECK(e.children()[0].variable() == 2);
  CHECK(e.maxVar() == 2);

  BoolExpr sugar = parseQuery("-2");
  CHECK(sugar.kind() == BoolExpr::Kind::Not);
  CHECK(sugar.children()[0].variable() == 2);

  CHECK(parseQuery("T").constValue());
  CHECK_FALSE(parseQuery("F").constValue());
}

TEST_CASE("pairwise at-most-one query from the running example") {
  BoolExpr e = parseQuery("(-1|-2)&(-1|-3)&(-3|-2)");
  REQUIRE(e.kind() == BoolExpr::Kind::And);
  REQUIRE(e.children().size() == 3);
  for (const BoolExpr& c : e.children()) {
    CHECK(c.kind() == BoolExpr::Kind::Or);
    CHECK(c.children().size() == 2);
  }
  // exactly the models with at most one of x1..x3 set
  CHECK(evaluate(assign({0, 0, 1}), e));
  CHECK_FALSE(evaluate(assign({1, 0, 1}), e));
}

TEST_CASE("implication is right-associative") {
  BoolExpr e = parseQuery("1 -> 2 -> 3");
  REQUIRE(e.kind() == BoolExpr::Kind::Implies);
  CHECK(e.children()[0].variable() == 1);
  CHECK(e.children()[1].kind() == BoolExpr::Kind::Implies);
  // 1 -> (2 -> 3): true when x1 = 0
  CHECK(evaluate(assign({0, 1, 0}), e));
  CHECK_FALSE(evaluate(assign({1, 1, 0}), e));
}

TEST_CASE("precedence: iff below implies below or below and below not") {
  BoolExpr e = parseQuery("1 | 2 & 3");
  REQUIRE(e.kind() == BoolExpr::Kind::Or);
  CHECK(e.children()[1].kind() == BoolExpr::Kind::And);

  BoolExpr iff = parseQuery("1 <-> 2 -> 3");
  REQUIRE(iff.kind() == BoolExpr::Kind::Iff);
  CHECK(iff.children()[1].kind() == BoolExpr::Kind::Implies);

  BoolExpr bang = parseQuery("!1 & 2");
  REQUIRE(bang.kind() == BoolExpr::Kind::And);
  CHECK(bang.children()[0].kind() == BoolExpr::Kind::Not);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parseQuery("1 &"), QueryParseError);
  CHECK_THROWS_AS(parseQuery("(1 | 2"), QueryParseError);
  CHECK_THROWS_AS(parseQuery("0"), QueryParseError);
  CHECK_THROWS_AS(parseQuery("1 2"), QueryParseError);
  try {
    parseQuery("1 & 0");
    FAIL("expected error");
  } catch (const QueryParseError& e) {
    CHECK(e.position() >= 4);
  }
}

TEST_CASE("evaluation of query kinds") {
  CHECK(evaluate(assign({0, 0}), parseQuery("!2")));
  CHECK(evaluate(assign({1, 1}), parseQuery("1 <-> 2")));
  CHECK_FALSE(evaluate(assign({1, 0}), parseQuery("1 <-> 2")));
  CHECK(evaluate(assign({0}), parseQuery("1 -> F")));
}
