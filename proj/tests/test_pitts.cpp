#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pittslab/ipc.hpp"
#include "pittslab/pitts.hpp"
#include "pittslab/selftest.hpp"

using namespace pittslab;

namespace {
Formula F(const char* s) { return parseFormula(s); }

struct PaperBody {
  const char* body;
  const char* expected;
};
const PaperBody kBodies[] = {
    {"(~Y -> X1) /\\ (~~Y -> X2)", "(~X1 -> X2) /\\ (~X2 -> X1)"},
    {"(Y \\/ ~Y) -> (P /\\ Q)", "~~(P /\\ Q)"},
    {"P <-> (~Y \\/ ~~Y)", "~~P"},
    {"(P -> (Y \\/ ~Y)) -> P", "~~P"},
    {"(X -> (~Y \\/ ~~Y)) -> X", "~~X"},
};
}  // namespace

TEST_CASE("paper interpolants up to equivalence") {
  for (const auto& b : kBodies) {
    CAPTURE(b.body);
    Formula e = piteExists(F(b.body), "Y");
    CHECK_FALSE(occursFree(e, "Y"));
    CHECK(equivalent(e, F(b.expected)));
    CHECK(equivalent(simplify(e), F(b.expected)));
  }
}

TEST_CASE("piteExists and pitaForall examples") {
  CHECK(equivalent(piteExists(F("X"), "Y"), F("X")));
  CHECK(equivalent(pitaForall(F("Y"), "Y"), F("bot")));
  CHECK(equivalent(pitaForall(F("X"), "Y"), F("X")));
  Formula a = pitaForall(F("X \\/ Y"), "Y");
  CHECK(equivalent(a, F("X")));
  for (const char* t : {"bot", "top", "X"}) CHECK(derivable(a, substitute(F("X \\/ Y"), "Y", F(t))));
  CHECK_THROWS_AS(piteExists(F("exists Z. Z"), "Y"), UnsupportedFormula);
}

TEST_CASE("simplify") {
  CHECK(simplify(F("top /\\ X")) == F("X"));
  CHECK(simplify(F("~~~P")) == F("~P"));
  Formula raw = piteExists(F("(P -> (Y \\/ ~Y)) -> P"), "Y");
  CHECK(simplify(raw) == F("~~P"));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Formula f = randomFormula(rng, {"P", "Q", "R"}, 12);
    Formula g = simplify(f);
    CHECK(g.size() <= f.size());
    CHECK(equivalent(f, g));
  }
}

TEST_CASE("validateInterpolant") {
  Formula body = F(kBodies[0].body);
  auto probes = probeCorpus({"X1", "X2"}, 5);
  ValidationReport r = validateInterpolant(body, "Y", F(kBodies[0].expected), probes);
  CHECK(r.passed());
  CHECK(r.checks.size() == probes.size());

  std::vector<Formula> withKey = probes;
  withKey.push_back(F("~X1 -> X2"));
  ValidationReport bad = validateInterpolant(body, "Y", F("top"), withKey);
  CHECK_FALSE(bad.passed());
  bool found = false;
  for (const auto& c : bad.checks)
    if (c.probe == F("~X1 -> X2")) found = !c.candidateSide && c.bodySide;
  CHECK(found);

  CHECK(validateInterpolant(F("X"), "Y", F("X"), probeCorpus({"X"}, 6)).passed());
  CHECK_FALSE(validateInterpolant(F("X"), "Y", F("Y"), {}).variableCondition);
}

TEST_CASE("serial and parallel validation agree") {
  for (const auto& b : kBodies) {
    Formula body = F(b.body), cand = simplify(piteExists(body, "Y"));
    VarSet atoms = freeVars(body);
    atoms.erase("Y");
    auto probes = probeCorpus(atoms, 6);
    ValidationReport p = validateInterpolant(body, "Y", cand, probes);
    ValidationReport s = validateInterpolantSerial(body, "Y", cand, probes);
    CHECK(p.violations == s.violations);
    REQUIRE(p.checks.size() == s.checks.size());
    for (std::size_t i = 0; i < p.checks.size(); ++i) {
      CHECK(p.checks[i].candidateSide == s.checks[i].candidateSide);
      CHECK(p.checks[i].bodySide == s.checks[i].bodySide);
    }
  }
}

TEST_CASE("probe corpus") {
  auto c = probeCorpus({"X"}, 3);
  CHECK(std::find(c.begin(), c.end(), F("X")) != c.end());
  CHECK(std::find(c.begin(), c.end(), F("bot")) != c.end());
  CHECK(std::find(c.begin(), c.end(), F("X -> bot")) != c.end());
  std::size_t mixed = 0;  // X /\ bot and bot /\ X collapse to one
  for (const auto& f : c)
    if (f.kind() == Kind::And && (alphaEqual(f, F("X /\\ bot")) || alphaEqual(f, F("bot /\\ X")))) ++mixed;
  CHECK(mixed == 1);
  for (const auto& f : probeCorpus({"A", "B"}, 5)) CHECK(f.size() <= 5);
}

TEST_CASE("interpolant properties on random input") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    Formula phi = randomFormula(rng, {"Y", "X1", "X2"}, 9);
    Formula e = piteExists(phi, "Y"), a = pitaForall(phi, "Y");
    CHECK_FALSE(occursFree(e, "Y"));
    CHECK_FALSE(occursFree(a, "Y"));
    CHECK(derivable(phi, e));
    Formula probe = randomFormula(rng, {"X1", "X2"}, 4);
    for (const Formula& t : {F("bot"), F("top"), F("X1"), F("X2"), probe})
      CHECK(derivable(a, substitute(phi, "Y", t)));
    // the interpolant is the strongest consequence: no weaker than phi with Y := anything
    for (const Formula& t : {F("bot"), F("top"), F("X1"), probe}) CHECK(derivable(substitute(phi, "Y", t), e));
  }
}

TEST_CASE("probe biconditional on a small corpus") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 8; ++i) {
    Formula phi = randomFormula(rng, {"Y", "X1", "X2"}, 8);
    VarSet atoms = freeVars(phi);
    atoms.erase("Y");
    CHECK(validateInterpolant(phi, "Y", piteExists(phi, "Y"), probeCorpus(atoms, 6)).passed());
  }
}
