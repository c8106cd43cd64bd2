#include <doctest.h>

#include <random>

#include "pittslab/selftest.hpp"
#include "pittslab/syntax.hpp"

using namespace pittslab;

namespace {
Formula F(const char* s) { return parseFormula(s); }
}  // namespace

TEST_CASE("abbreviations are not constructors") {
  Formula x = Formula::var("X");
  CHECK(Formula::neg(x).kind() == Kind::Implies);
  CHECK(Formula::neg(x).rhs().isBottom());
  CHECK(Formula::top() == Formula::implies(Formula::bottom(), Formula::bottom()));
  Formula iff = Formula::iff(x, Formula::var("Y"));
  CHECK(iff.kind() == Kind::And);
  CHECK(iff.lhs() == Formula::implies(x, Formula::var("Y")));
}

TEST_CASE("parse") {
  Formula r = F("(~Y -> X1) /\\ (~~Y -> X2)");
  REQUIRE(r.kind() == Kind::And);
  CHECK(r.lhs() == Formula::implies(Formula::neg(Formula::var("Y")), Formula::var("X1")));
  CHECK(F("bot").isBottom());
  Formula k = F("exists Y. P <-> (~Y \\/ ~~Y)");
  REQUIRE(k.kind() == Kind::Exists);
  CHECK(k.name() == "Y");
  CHECK(k.body() == Formula::iff(F("P"), F("~Y \\/ ~~Y")));
  CHECK(F("A -> B -> C") == Formula::implies(F("A"), Formula::implies(F("B"), F("C"))));
  CHECK(F("A /\\ B \\/ C") == Formula::disj(F("A /\\ B"), F("C")));
  CHECK(F("top") == Formula::top());
}

TEST_CASE("parse errors carry offset and expected tokens") {
  try {
    F("P /\\ ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(e.expected().count("identifier") == 1);
  }
  CHECK_THROWS_AS(F("P Q"), ParseError);
  CHECK_THROWS_AS(F("t(P)"), ParseError);
}

TEST_CASE("applications need a declared symbol of matching arity") {
  Signature sig;
  sig.addConnective({"t", 2});
  Formula f = parseFormula("t(P, Q -> R)", sig);
  CHECK(f.kind() == Kind::App);
  CHECK(f.args().size() == 2);
  CHECK_THROWS(parseFormula("t(P)", sig));
}

TEST_CASE("print") {
  CHECK(print(Formula::conj(F("A"), F("B"))) == "A /\\ B");
  CHECK(print(Formula::implies(Formula::implies(F("P"), Formula::bottom()), Formula::bottom())) == "~~P");
  CHECK(print(F("(~X1 -> X2) /\\ (~X2 -> X1)")) == "(~X1 -> X2) /\\ (~X2 -> X1)");
  CHECK(print(F("(A -> B) -> C")) == "(A -> B) -> C");
}

TEST_CASE("substitution") {
  CHECK(substitute(F("X"), "X", F("T")) == F("T"));
  Formula s = substitute(F("exists X. X /\\ Y"), "Y", F("X"));
  REQUIRE(s.kind() == Kind::Exists);
  CHECK(s.name() == "X'");
  CHECK(s.body() == F("X' /\\ X"));
  CHECK(print(s) == "exists X'. X' /\\ X");
  // simultaneous
  CHECK(substitute(F("P -> Q"), Bindings{{"P", F("Q")}, {"Q", F("P")}}) == F("Q -> P"));
  // expansion of C(phi1, phi2)
  Formula c = F("exists Y. (~Y -> X1) /\\ (~~Y -> X2)");
  CHECK(alphaEqual(substitute(c, Bindings{{"X1", F("A \\/ B")}, {"X2", F("bot")}}),
                   F("exists Z. (~Z -> A \\/ B) /\\ (~~Z -> bot)")));
  // bound occurrences are untouched
  CHECK(substitute(F("forall X. X"), "X", F("P")) == F("forall X. X"));
}

TEST_CASE("alpha equivalence") {
  CHECK(alphaEqual(F("exists Y. Y -> P"), F("exists Z. Z -> P")));
  CHECK_FALSE(alphaEqual(F("exists Y. Y -> P"), F("exists P. P -> P")));
  CHECK_FALSE(F("exists Y. Y") == F("exists Z. Z"));
}

TEST_CASE("random round trip, substitution laws") {
  std::mt19937_64 rng(7);
  std::vector<std::string> atoms{"X", "Y", "P"};
  for (int i = 0; i < 300; ++i) {
    Formula f = randomFormula(rng, atoms, 12);
    if (i % 3 == 0) f = Formula::exists("Y", f);
    CHECK(alphaEqual(parseFormula(print(f)), f));

    Formula g = randomFormula(rng, atoms, 5), h = randomFormula(rng, {"P", "Q"}, 5);
    if (occursFree(h, "X")) continue;
    Formula lhs = substitute(substitute(f, "X", g), "Y", h);
    Formula rhs = substitute(f, Bindings{{"X", substitute(g, "Y", h)}, {"Y", h}});
    CHECK(alphaEqual(lhs, rhs));

    VarSet expect = freeVars(f);
    bool had = expect.erase("X") > 0;
    if (had)
      for (const auto& v : freeVars(g)) expect.insert(v);
    CHECK(freeVars(substitute(f, "X", g)) == expect);
  }
}
