#include <doctest.h>

#include <fstream>

#include "pittslab/replay.hpp"

using namespace pittslab;

namespace {
Sequent S(const char* s) { return parseSequent(s); }
}  // namespace

TEST_CASE("every suite replays") {
  for (const auto& name : replayNames()) {
    CAPTURE(name);
    ReplayReport r = replay(name);
    CHECK(r.success);
    for (const auto& s : r.scripts) CHECK(s.status == "accepted");
    REQUIRE_FALSE(r.derived.empty());
  }
}

TEST_CASE("final derived sequents") {
  for (const char* name : {"tara", "polacik", "polacik-wlem"})
    CHECK(sameSequent(replay(name).derived.back(), S("~~P |- P")));

  ReplayReport k = replay("kreisel");
  std::size_t dne = 0;
  for (const auto& d : k.derived) dne += sameSequent(d, S("~~P |- P"));
  CHECK(dne == 3);
  CHECK(k.scripts.size() == 27);

  Signature t;
  t.addConnective({"t", 1});
  ReplayReport p = replay("polacik");
  CHECK(sameSequent(p.derived.front(), parseSequent("|- t(P) \\/ ~t(P)", t)));

  CHECK(sameSequent(replay("polacik-disjunction").derived.back(), S("|- ~~X \\/ (~~X -> X)")));
}

TEST_CASE("tara-props states the six propositions") {
  ReplayReport r = replay("tara-props");
  REQUIRE(r.derived.size() == 6);
  Signature sig;
  sig.addDefinition({"tara", {"P", "Q"}, parseFormula("exists Y. (~Y -> P) /\\ (~~Y -> Q)")});
  sig.addConnective({"plus", 2});
  const char* expected[] = {
      "tara(P, Q) |- tara(Q, P)",
      "Q -> Q', tara(P, Q) |- tara(P, Q')",
      "|- tara(bot, P) <-> P",
      "|- tara(~P, ~~P)",
      "tara(P, Q) |- plus(P, Q)",
      "|- tara(P, Q) -> ~P -> Q",
  };
  for (std::size_t i = 0; i < 6; ++i) CHECK(sameSequent(r.derived[i], parseSequent(expected[i], sig)));
}

TEST_CASE("replay reports failures with the script and line") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "pittslab-replay-test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  fs::copy(defaultScriptRoot() / "polacik", tmp / "polacik");
  std::string three2 = readFile(tmp / "polacik" / "three2.pf");
  three2.replace(three2.find("cut 1 2"), 7, "cut 2");
  std::ofstream(tmp / "polacik" / "three2.pf") << three2;
  try {
    replay("polacik", tmp);
    FAIL("replay accepted a broken script");
  } catch (const ScriptFailed& e) {
    CHECK(e.script() == "polacik/three2.pf");
    CHECK(e.label() == "3");
    CHECK_FALSE(e.report().success);
    REQUIRE(e.report().scripts.size() == 4);
    CHECK(e.report().scripts[3].status == "not run");
  }
  fs::remove_all(tmp);
  CHECK_THROWS_AS(replay("nope"), Error);
}

TEST_CASE("report json") {
  Json j = toJson(replay("polacik-disjunction"));
  CHECK(j["name"] == "polacik-disjunction");
  CHECK(j["success"] == true);
  CHECK(j["scripts"][0]["file"] == "polacik-disjunction/disjunction.pf");
  CHECK(j["scripts"][0]["lines"] == 8);
  CHECK(j["derived"].back() == "|- ~~X \\/ (~~X -> X)");
}
