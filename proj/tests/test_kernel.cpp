#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pittslab/kernel.hpp"
#include "pittslab/replay.hpp"
#include "pittslab/script.hpp"
#include "pittslab/selftest.hpp"

using namespace pittslab;
namespace fs = std::filesystem;

namespace {
Formula F(const char* s) { return parseFormula(s); }
Sequent S(const char* s, const Signature& sig = {}) { return parseSequent(s, sig); }
fs::path scriptDir(const char* d) { return defaultScriptRoot() / d; }
}  // namespace

TEST_CASE("empty right-hand side is bot") { CHECK(S("P, ~P |-").conclusion.isBottom()); }

TEST_CASE("checkTree: small trees") {
  CHECK(checkTree(build::ax(F("P /\\ Q"))));
  CHECK(checkTree(build::botL(F("P \\/ ~P"))));
  CHECK(checkTree(build::botL(F("P \\/ ~P"))).nodesChecked == 1);

  ProofTree bad;
  bad.rule = Rule::ForallR;
  bad.conclusion = S("X |- forall X. X");
  bad.premises.push_back(build::ax(F("X")));
  CheckReport r = checkTree(bad);
  REQUIRE_FALSE(r.accepted);
  CHECK(r.failure->kind == CheckFailureKind::SideConditionViolated);
  CHECK(r.failure->detail.find('X') != std::string::npos);

  ProofTree wrong = build::ax(F("P"));
  wrong.conclusion = S("P |- Q");
  r = checkTree(wrong);
  REQUIRE_FALSE(r.accepted);
  CHECK(r.failure->kind == CheckFailureKind::MalformedRule);
  CHECK(r.failure->path.empty());

  // the failure path points into the tree
  ProofTree outer = build::impR(build::ax(F("P")), F("P"));
  outer.premises[0].rule = Rule::BotL;
  r = checkTree(outer);
  REQUIRE_FALSE(r.accepted);
  CHECK(r.failure->path == std::vector<std::size_t>{0});
}

TEST_CASE("schema nodes need the theory") {
  SchemaTheory th = parseTheory("connective t 1\nschema d : P |- t(P)\n");
  ProofTree node;
  node.rule = Rule::Schema;
  node.schemaName = "d";
  node.instantiation = {{"P", F("Q -> Q")}};
  node.conclusion = parseSequent("Q -> Q |- t(Q -> Q)", th.signature);
  CHECK(checkTree(node, th));
  CHECK_FALSE(checkTree(node));
}

TEST_CASE("deriveExtensionality") {
  auto check = [](const char* ctx, const char* p, const char* q) {
    ProofTree t = deriveExtensionality(parseFormula(ctx, {}, {true}), "_", F(p), F(q));
    CHECK(checkTree(t));
    return t.conclusion;
  };
  CHECK(sameSequent(check("Z", "A", "B"), S("A -> B, B -> A, Z |- Z")));
  ProofTree hole = deriveExtensionality(parseFormula("_", {}, {true}), "_", F("A"), F("B"));
  CHECK(checkTree(hole));
  CHECK(sameSequent(check("~_", "A", "B"), S("A -> B, B -> A, ~A |- ~B")));
  CHECK_THROWS_AS(deriveExtensionality(parseFormula("exists A. _ /\\ A", {}, {true}), "_", F("A"), F("B")),
                  VariableClash);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    Formula ctx = randomFormula(rng, {"_", "Z", "W"}, 9);
    Formula p = randomFormula(rng, {"A", "B"}, 5), q = randomFormula(rng, {"A", "C"}, 5);
    if (i % 4 == 0) ctx = Formula::exists("W", ctx);
    ProofTree t = deriveExtensionality(ctx, "_", p, q);
    CHECK(checkTree(t));
    CHECK(alphaEqual(t.conclusion.conclusion, substitute(ctx, "_", q)));
  }
}

TEST_CASE("ipc after atomization") {
  Signature sig;
  sig.addConnective({"t", 1});
  CHECK(ipcAfterAtomization(S("t(P) |- t(P) \\/ Q", sig)));
  CHECK(ipcAfterAtomization(S("t(P -> P) |- t(P -> P)", sig)));
  CHECK_FALSE(ipcAfterAtomization(S("t(P) |- t(Q)", sig)));
  CHECK_FALSE(ipcAfterAtomization(S("t(P) |- P", sig)));
  // alpha-equal quantified subterms share an atom
  CHECK(ipcAfterAtomization(S("exists Y. Y /\\ P |- exists Z. Z /\\ P")));
}

TEST_CASE("script parsing") {
  SchemaTheory th = parseTheory("connective t 1\nschema d : P |- t(P)\n");
  ProofScript s = parseScript("export 2\n1 | Q |- t(Q) | ax-schema d {P:=Q}\n2 | |- Q -> t(Q) | rule ->R 1\n", th);
  REQUIRE(s.lines.size() == 2);
  CHECK(s.lines[1].justification.kind == JustKind::Rule);
  CHECK(s.lines[1].justification.name == "->R");
  CHECK(s.exports == std::vector<std::string>{"2"});

  auto malformed = [&](const char* text) { CHECK_THROWS_AS(parseScript(text, th), ScriptError); };
  malformed("1 | Q |- Q\n");
  malformed("1 | Q |- Q | frobnicate\n");
  malformed("2 | Q |- Q | ipc\n1 | Q |- Q | ipc\n");
  malformed("1 | Q |- Q | cut 2\n");
  malformed("1 | Q |- t(Q, Q) | ipc\n");
  malformed("1 | Q |- Q | ipc\nexport 3\n");
  malformed("1 | Q |- Q | ipc extra\n");
  CHECK_THROWS_AS(parseTheory("schema bad : exists Y. Y |- P\n"), ScriptError);
  CHECK_THROWS_AS(parseTheory("connective t\n"), ScriptError);

  // helper labels sort before the next number
  ProofScript h = parseScript("0a | Q |- Q | ipc\n0b | Q |- Q | ipc\n1 | Q |- Q | cut 0a 0b\n", th);
  CHECK(checkScript(h).accepted);
}

TEST_CASE("checkScript reports the first failing line") {
  SchemaTheory th = parseTheory("connective t 1\nschema d : P |- t(P)\n");
  ScriptReport r = checkScript(parseScript("1 | Q |- t(Q) | ax-schema d {P:=Q}\n2 | |- t(Q) | ax-schema d {P:=Q}\n"
                                           "3 | Q |- Q | ipc\n",
                                           th));
  CHECK_FALSE(r.accepted);
  CHECK(r.linesChecked == 1);
  REQUIRE(r.failure);
  CHECK(r.failure->label == "2");
}

TEST_CASE("implication table") {
  ScriptLibrary lib(scriptDir("tara"));
  const ScriptReport& r = lib.check("implication");
  CHECK(r.accepted);
  CHECK(r.linesChecked == 4);
  REQUIRE_FALSE(r.derived.empty());
  SchemaTheory th = parseTheory(readFile(scriptDir("tara") / "tara.thy"));
  CHECK(sameSequent(r.derived.back(), S("t(P,Q), P |- Q", th.signature)));
}

TEST_CASE("double-negation table and its corruption") {
  ScriptLibrary lib(scriptDir("tara"));
  const ScriptReport& r = lib.check("dnegelim");
  REQUIRE(r.accepted);
  SchemaTheory th = parseTheory(readFile(scriptDir("tara") / "tara.thy"));
  CHECK(sameSequent(r.proved.at("11"), S("t(P, P -> ~t(P,top)) |- ~P", th.signature)));
  CHECK(sameSequent(r.derived.back(), S("~~P |- P")));

  ProofScript s = lib.load("dnegelim");
  RefResolver refs = [&](const std::string& script, const std::string& label) -> std::optional<Sequent> {
    const ScriptReport& other = lib.check(script);
    auto it = other.proved.find(label);
    if (it == other.proved.end()) return std::nullopt;
    return it->second;
  };
  auto setCites = [&](std::vector<std::string> cites) {
    ProofScript copy = s;
    for (auto& l : copy.lines)
      if (l.label == "10") l.justification.cites = cites;
    return checkScript(copy, refs);
  };
  ScriptReport corrupted = setCites({"7", "8"});
  CHECK_FALSE(corrupted.accepted);
  REQUIRE(corrupted.failure);
  CHECK(corrupted.failure->label == "10");
  // orientation of the cuts does not matter
  CHECK(setCites({"9", "6"}).accepted);
}

TEST_CASE("checkScript is monotone in the theory and admits weakening") {
  for (const char* name : {"implication", "fulcrum", "dnegelim"}) {
    ScriptLibrary lib(scriptDir("tara"));
    ProofScript s = lib.load(name);
    RefResolver refs = [&](const std::string& script, const std::string& label) -> std::optional<Sequent> {
      const ScriptReport& other = lib.check(script);
      auto it = other.proved.find(label);
      if (it == other.proved.end()) return std::nullopt;
      return it->second;
    };
    REQUIRE(checkScript(s, refs).accepted);

    ProofScript bigger = s;
    bigger.theory.signature.addConnective({"extra", 1});
    bigger.theory.axioms.push_back({"unused", S("|- P \\/ ~P")});
    CHECK(checkScript(bigger, refs).accepted);

    ProofScript weak = s;
    for (auto& l : weak.lines) l.sequent.hypotheses.push_back(F("W"));
    CHECK(checkScript(weak, refs).accepted);
  }
}

TEST_CASE("atomization soundness spot check") {
  // an accepted ipc line stays provable once its atoms are expanded
  Signature sig;
  sig.addConnective({"t", 1});
  Sequent atomized = S("A, A -> B |- B");
  Bindings expansion{{"A", F("P \\/ Q")}, {"B", F("exists Y. Y")}};
  CHECK(ipcAfterAtomization(substitute(atomized, expansion)));
  CHECK_FALSE(oracle::refutable(atomized));
}
