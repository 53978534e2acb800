#include <doctest.h>

#include <random>
#include <set>

#include "mincirc/entails.hpp"
#include "mincirc/io.hpp"
#include "mincirc/oracle.hpp"
#include "support/gen.hpp"

using namespace mincirc;

namespace {

Assignment assign(std::initializer_list<int> bits) {
  Assignment a(static_cast<Var>(bits.size()));
  Var v = 1;
  for (int b : bits) a.set(v++, b != 0);
  return a;
}

EntailsOptions verified() {
  EntailsOptions opt;
  opt.verify = true;
  return opt;
}

}  // namespace

TEST_CASE("running example: ~x v y entails-min ~y") {
  CnfFormula phi = parseDimacs("p cnf 2 1\n-1 2 0").formula;
  Verdict v = entailsMin(phi, parseQuery("!2"), Partition::allMinimized(2), verified());
  CHECK(v.entailed());
  CHECK_FALSE(v.vacuous);
  CHECK(v.certificate.size() <= 4);
}

TEST_CASE("running example: at-most-one under a negative 3-clause") {
  CnfFormula phi = parseDimacs("p cnf 3 1\n-1 -2 -3 0").formula;
  BoolExpr psi = parseQuery("(-1|-2)&(-1|-3)&(-3|-2)");
  Verdict v = entailsMin(phi, psi, Partition::allMinimized(3), verified());
  CHECK(v.entailed());
}

TEST_CASE("non-entailment yields the minimal counterexample model") {
  CnfFormula phi = parseDimacs("p cnf 2 1\n1 2 0").formula;
  Verdict v = entailsMin(phi, parseQuery("!2"), Partition::allMinimized(2), verified());
  REQUIRE(v.notEntailed());
  // the only minimal model violating ~y is {x0, y1}
  CHECK(*v.witness == assign({0, 1}));
}

TEST_CASE("varying variable absorbs the disjunction") {
  // phi = (p v z), psi = ~p, P = {p}, Z = {z}
  CnfFormula phi = parseDimacs("p cnf 2 1\n1 2 0").formula;
  std::vector<Var> z{2};
  Partition part = Partition::make(2, {}, {}, z);
  Verdict v = entailsMin(phi, parseQuery("!1"), part, verified());
  CHECK(v.entailed());
}

TEST_CASE("fixed variable blocks the flip") {
  // phi = (p v q), psi = ~p, P = {p}, Q = {q}
  CnfFormula phi = parseDimacs("p cnf 2 1\n1 2 0").formula;
  std::vector<Var> q{2};
  Partition part = Partition::make(2, {}, q, {});
  Verdict v = entailsMin(phi, parseQuery("!1"), part, verified());
  REQUIRE(v.notEntailed());
  CHECK(*v.witness == assign({1, 0}));
}

TEST_CASE("constant-true query is entailed with an empty certificate") {
  CnfFormula phi = parseDimacs("p cnf 2 1\n1 2 0").formula;
  Verdict v = entailsMin(phi, BoolExpr::constant(true), Partition::allMinimized(2));
  CHECK(v.entailed());
  CHECK(v.certificate.empty());
}

TEST_CASE("unsatisfiable premise is vacuously entailed and flagged") {
  CnfFormula phi = parseDimacs("p cnf 1 2\n1 0\n-1 0").formula;
  Verdict v = entailsMin(phi, parseQuery("1"), Partition::allMinimized(1));
  CHECK(v.entailed());
  CHECK(v.vacuous);
}

TEST_CASE("zero budget reports exhaustion") {
  CnfFormula phi = parseDimacs("p cnf 2 1\n-1 2 0").formula;
  EntailsOptions opt;
  opt.budget = SearchBudget::conflicts(0);
  Verdict v = entailsMin(phi, parseQuery("!2"), Partition::allMinimized(2), opt);
  CHECK(v.exhausted());

  opt.budget = SearchBudget::unlimited();
  opt.budget.maxIterations = 0;
  v = entailsMin(phi, parseQuery("!2"), Partition::allMinimized(2), opt);
  CHECK(v.exhausted());
}

TEST_CASE("descriptor derivation") {
  // all-minimized: S is the set of dropped ones
  Partition all2 = Partition::allMinimized(2);
  FlipDescriptor d = deriveDescriptor(assign({1, 1}), assign({0, 0}), all2);
  CHECK(d.s == std::vector<Var>{1, 2});
  CHECK(d.z0.empty());
  CHECK(d.z1.empty());

  // P = {p}, Z = {z}: a raised varying variable lands in Z1
  std::vector<Var> z{2};
  Partition pz = Partition::make(2, {}, {}, z);
  FlipDescriptor d2 = deriveDescriptor(assign({1, 0}), assign({0, 1}), pz);
  CHECK(d2.s == std::vector<Var>{1});
  CHECK(d2.z0.empty());
  CHECK(d2.z1 == std::vector<Var>{2});

  // identity flip violates strictness
  CHECK_THROWS_AS(deriveDescriptor(assign({1, 1}), assign({1, 1}), all2),
                  std::logic_error);
}

TEST_CASE("finding a strictly smaller model") {
  CnfFormula phi = parseDimacs("p cnf 2 1\n-1 2 0").formula;
  Partition all2 = Partition::allMinimized(2);
  Assignment nu = assign({1, 1});
  SolveResult r = findSmallerModel(phi, nu, all2);
  REQUIRE(r.sat());
  CHECK(evaluate(*r.model, phi));
  CHECK(strictlySmaller(*r.model, nu, all2));

  CnfFormula unit = parseDimacs("p cnf 1 1\n1 0").formula;
  CHECK(findSmallerModel(unit, assign({1}), Partition::allMinimized(1)).unsat());

  // fixing q leaves {p0 q1} as the only candidate below {p1 q1}
  CnfFormula disj = parseDimacs("p cnf 2 1\n1 2 0").formula;
  std::vector<Var> q{2};
  Partition pq = Partition::make(2, {}, q, {});
  SolveResult rq = findSmallerModel(disj, assign({1, 1}), pq);
  REQUIRE(rq.sat());
  CHECK(*rq.model == assign({0, 1}));
}

TEST_CASE("oracle equivalence across partition shapes") {
  std::mt19937 rng(31);
  int witnesses = 0;
  for (int round = 0; round < 150; ++round) {
    Var n = std::uniform_int_distribution<Var>(2, 8)(rng);
    int m = std::uniform_int_distribution<int>(1, 3 * n)(rng);
    CnfFormula phi = gen::randomCnf(rng, n, m);
    BoolExpr psi = gen::randomExpr(rng, n, 3);
    Partition part = gen::randomPartition(rng, n, round % 3);

    Verdict v = entailsMin(phi, psi, part, verified());
    bool expected = oracle::entailsMinBf(phi, psi, part);
    REQUIRE(v.kind != Verdict::Kind::Exhausted);
    CHECK(v.entailed() == expected);

    if (v.notEntailed()) {
      ++witnesses;
      CHECK(evaluate(*v.witness, phi));
      CHECK_FALSE(evaluate(*v.witness, psi));
      CHECK(oracle::isMinimalModel(phi, *v.witness, part));
    }
    // descriptors are unique and the loop is bounded by the descriptor space
    std::set<FlipDescriptor> uniq(v.certificate.begin(), v.certificate.end());
    CHECK(uniq.size() == v.certificate.size());
    CHECK(v.stats.iterations <= (std::int64_t(1) << n));
  }
  CHECK(witnesses > 10);  // the sample exercises both verdicts
}

TEST_CASE("verdicts are polarity-independent") {
  std::mt19937 rng(32);
  for (int round = 0; round < 40; ++round) {
    Var n = std::uniform_int_distribution<Var>(2, 7)(rng);
    CnfFormula phi = gen::randomCnf(rng, n, std::uniform_int_distribution<int>(1, 18)(rng));
    BoolExpr psi = gen::randomExpr(rng, n, 2);
    Partition part = Partition::allMinimized(n);

    Verdict::Kind kinds[3];
    int i = 0;
    for (auto [cx, wit] : {std::pair{Polarity::PreferFalse, Polarity::PreferTrue},
                           std::pair{Polarity::PreferTrue, Polarity::PreferFalse},
                           std::pair{Polarity::Default, Polarity::Default}}) {
      EntailsOptions opt;
      opt.counterexamplePolarity = cx;
      opt.witnessPolarity = wit;
      kinds[i++] = entailsMin(phi, psi, part, opt).kind;
    }
    CHECK(kinds[0] == kinds[1]);
    CHECK(kinds[1] == kinds[2]);
  }
}

TEST_CASE("representative reuse and naive re-encoding agree") {
  std::mt19937 rng(33);
  for (int round = 0; round < 40; ++round) {
    Var n = std::uniform_int_distribution<Var>(2, 7)(rng);
    CnfFormula phi = gen::randomCnf(rng, n, std::uniform_int_distribution<int>(1, 18)(rng));
    BoolExpr psi = gen::randomExpr(rng, n, 2);
    Partition part = gen::randomPartition(rng, n, round % 3);

    EntailsOptions naive = verified();
    naive.reuseReps = false;
    CHECK(entailsMin(phi, psi, part, naive).kind ==
          entailsMin(phi, psi, part, verified()).kind);
  }
}

TEST_CASE("backtracking backend agrees with the cdcl backend") {
  std::mt19937 rng(34);
  for (int round = 0; round < 25; ++round) {
    Var n = std::uniform_int_distribution<Var>(2, 6)(rng);
    CnfFormula phi = gen::randomCnf(rng, n, std::uniform_int_distribution<int>(1, 12)(rng));
    BoolExpr psi = gen::randomExpr(rng, n, 2);
    EntailsOptions alt = verified();
    alt.makeSolver = backtrackingFactory();
    CHECK(entailsMin(phi, psi, Partition::allMinimized(n), alt).kind ==
          entailsMin(phi, psi, Partition::allMinimized(n), verified()).kind);
  }
}
