// Command-line front end. Exit status: 0 success / provable, 1 negative
// outcome (refuted, rejected, gate failure), 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pittslab/connective.hpp"
#include "pittslab/ipc.hpp"
#include "pittslab/json_io.hpp"
#include "pittslab/kernel.hpp"
#include "pittslab/pitts.hpp"
#include "pittslab/replay.hpp"
#include "pittslab/script.hpp"
#include "pittslab/selftest.hpp"

using namespace pittslab;

namespace {

struct Config {
  bool json = false;
  std::uint64_t seed = 0;
  int bound = 6;
  int rnLevel = 12;
  int probeBudget = 8;
};

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void renderTree(const ProofTree& t, std::ostringstream& os, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << ruleName(t.rule);
  if (t.rule == Rule::Schema) os << " " << t.schemaName;
  os << "  " << print(t.conclusion) << "\n";
  for (const auto& p : t.premises) renderTree(p, os, depth + 1);
}

int cmdProve(const Config& cfg, const std::string& text) {
  Sequent s = parseSequent(text);
  Verdict v = prove(s, {true, cfg.bound});
  Json j;
  j["sequent"] = print(s);
  j["provable"] = v.provable;
  std::ostringstream os;
  if (v.provable) {
    os << "provable\n";
    if (v.proof) {
      j["tree"] = toJson(*v.proof);
      renderTree(*v.proof, os, 1);
    }
  } else if (v.countermodel) {
    j["countermodel"] = {{"model", toJson(v.countermodel->model)}, {"world", v.countermodel->world}};
    os << "refuted\n" << v.countermodel->model.describe() << "\nroot world " << v.countermodel->world << "\n";
  } else {
    j["unknownBound"] = v.unknownBound.value_or(cfg.bound);
    os << "refuted (no countermodel within " << v.unknownBound.value_or(cfg.bound) << " worlds)\n";
  }
  emit(cfg, j, os.str());
  return v.provable ? 0 : 1;
}

int cmdInterpolate(const Config& cfg, bool exists, const std::string& var, const std::string& text, bool validate) {
  Formula phi = parseFormula(text);
  requirePropositional(phi, "interpolate");
  Formula result = simplify(exists ? piteExists(phi, var) : pitaForall(phi, var));
  Json j;
  j["input"] = print(phi);
  j["var"] = var;
  j["quantifier"] = exists ? "exists" : "forall";
  j["interpolant"] = print(result);
  std::ostringstream os;
  os << print(result) << "\n";
  bool ok = true;
  if (validate) {
    VarSet atoms = freeVars(phi);
    atoms.erase(var);
    auto probes = probeCorpus(atoms, cfg.probeBudget);
    ValidationReport r = validateInterpolant(phi, var, result, probes, exists ? Quantifier::Exists : Quantifier::Forall);
    ok = r.passed();
    j["validation"] = {{"probes", probes.size()},
                       {"variableCondition", r.variableCondition},
                       {"boundCondition", r.boundCondition},
                       {"violations", r.violations}};
    os << "probe gate: " << (ok ? "passed" : "FAILED") << " (" << probes.size() << " probes)\n";
    for (const auto& v : r.violations) os << "  " << v << "\n";
  }
  emit(cfg, j, os.str());
  return ok ? 0 : 1;
}

Json scriptJson(const ScriptReport& r) {
  Json j;
  j["name"] = r.name;
  j["accepted"] = r.accepted;
  j["lines"] = r.linesChecked;
  if (r.failure) j["failure"] = {{"label", r.failure->label}, {"reason", r.failure->reason}};
  Json d = Json::array();
  for (const auto& s : r.derived) d.push_back(print(s));
  j["derived"] = d;
  return j;
}

int cmdCheck(const Config& cfg, const std::string& file, const std::string& theory) {
  std::optional<std::filesystem::path> override;
  if (!theory.empty()) override = theory;
  ScriptReport r = checkScriptFile(file, override);
  std::ostringstream os;
  if (r.accepted) {
    os << "accepted (" << r.linesChecked << " lines)\n";
    for (const auto& d : r.derived) os << print(d) << "\n";
  } else {
    os << "rejected at line " << r.failure->label << ": " << r.failure->reason << "\n";
  }
  emit(cfg, scriptJson(r), os.str());
  return r.accepted ? 0 : 1;
}

int cmdExtract(const Config& cfg, const std::string& file, const std::string& bodyText, const std::string& var) {
  Json doc;
  try {
    doc = Json::parse(readFile(file));
  } catch (const nlohmann::json::exception& e) {
    throw Error(file + ": " + e.what());
  }
  ProofTree tree = treeFromJson(doc.contains("tree") ? doc["tree"] : doc);
  RegularConnective c = RegularConnective::fromBody(parseFormula(bodyText), var);
  Formula aux = extractAuxiliary(tree, c);
  AuxiliaryReport rep = isAuxiliary(c, aux);
  Json j;
  j["body"] = print(c.body);
  j["var"] = var;
  j["auxiliary"] = print(aux);
  j["interpolant"] = print(rep.interpolant);
  j["holds"] = rep.holds;
  std::ostringstream os;
  os << print(aux) << "\n"
     << "auxiliary: " << (rep.holds ? "yes" : "no") << " (interpolant " << print(rep.interpolant) << ")\n";
  emit(cfg, j, os.str());
  return rep.holds ? 0 : 1;
}

int cmdClassify(const Config& cfg, const std::string& text) {
  Formula f = parseFormula(text);
  RNClass k = rnClassify(f, cfg.rnLevel);
  Json j;
  j["formula"] = print(f);
  j["class"] = k.label();
  if (k.level)
    j["level"] = *k.level;
  else
    j["level"] = nullptr;
  j["representative"] = print(k.representative);
  emit(cfg, j, k.label() + "  " + print(k.representative) + "\n");
  return 0;
}

std::string replayText(const ReplayReport& r) {
  std::ostringstream os;
  os << "replay " << r.name << "\n";
  for (const auto& s : r.scripts)
    os << "  " << s.file << " [" << s.theory << "]  " << s.lines << " lines  " << s.status << "\n";
  if (r.success) {
    os << "derived:\n";
    for (const auto& d : r.derived) os << print(d) << "\n";
  }
  return os.str();
}

int cmdReplay(const Config& cfg, const std::string& name) {
  try {
    ReplayReport r = replay(name);
    emit(cfg, toJson(r), replayText(r));
    return 0;
  } catch (const ScriptFailed& e) {
    Json j = toJson(e.report());
    j["failure"] = {{"script", e.script()}, {"label", e.label()}, {"reason", e.what()}};
    emit(cfg, j, replayText(e.report()));
    std::cerr << "replay " << name << " failed: " << e.what() << "\n";
    return 1;
  }
}

int cmdSelftest(const Config& cfg) {
  std::vector<SuiteResult> results;
  ProverSuiteOptions po;
  po.seed = cfg.seed;
  po.bound = cfg.bound;
  results.push_back(proverOracleSuite(po));
  results.push_back(glivenkoSuite(cfg.seed));
  results.push_back(interpolationInvariantSuite(cfg.seed));
  for (const auto& name : replayNames()) {
    SuiteResult r{"replay " + name, 1, {}, 0};
    try {
      replay(name);
    } catch (const ScriptFailed& e) {
      r.violations.push_back(e.what());
    }
    results.push_back(r);
  }
  bool ok = true;
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    ok = ok && r.passed();
    j.push_back({{"suite", r.name}, {"cases", r.cases}, {"violations", r.violations}});
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    for (const auto& v : r.violations) os << "  " << v << "\n";
  }
  emit(cfg, Json{{"seed", cfg.seed}, {"passed", ok}, {"suites", j}}, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intuitionistic propositional logic workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--bound", cfg.bound, "Countermodel search bound (worlds)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rn-level", cfg.rnLevel, "Highest Rieger-Nishimura index searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--probe-budget", cfg.probeBudget, "Probe corpus node bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string text, var = "Y", file, theory, body, name;
  bool exists = false, forall = false, validate = false;

  auto* prove = app.add_subcommand("prove", "Decide a sequent");
  prove->add_option("sequent", text)->required();

  auto* interp = app.add_subcommand("interpolate", "Uniform interpolant");
  auto* ex = interp->add_flag("--exists", exists);
  auto* fa = interp->add_flag("--forall", forall);
  ex->excludes(fa);
  interp->add_option("--var", var)->required();
  interp->add_flag("--validate", validate, "Run the probe gate");
  interp->add_option("formula", text)->required();

  auto* check = app.add_subcommand("check", "Check a proof script");
  check->add_option("script", file)->required()->check(CLI::ExistingFile);
  check->add_option("--theory", theory, "Theory file replacing the script's header")->check(CLI::ExistingFile);

  auto* extract = app.add_subcommand("extract-aux", "Auxiliary formula from a cut-free tree");
  extract->add_option("tree", file)->required()->check(CLI::ExistingFile);
  extract->add_option("--body", body)->required();
  extract->add_option("--var", var)->required();

  auto* classify = app.add_subcommand("rn-classify", "Rieger-Nishimura class");
  classify->add_option("formula", text)->required();

  auto* rep = app.add_subcommand("replay", "Bundled nondefinability replays");
  rep->add_option("name", name)->required()->check(CLI::IsMember(replayNames()));

  auto* self = app.add_subcommand("selftest", "Property suites and all replays");

  try {
    app.parse(argc, argv);
    if (*interp && exists == forall) throw CLI::ValidationError("interpolate needs --exists or --forall");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*prove) return cmdProve(cfg, text);
    if (*interp) return cmdInterpolate(cfg, exists, var, text, validate);
    if (*check) return cmdCheck(cfg, file, theory);
    if (*extract) return cmdExtract(cfg, file, body, var);
    if (*classify) return cmdClassify(cfg, text);
    if (*rep) return cmdReplay(cfg, name);
    if (*self) return cmdSelftest(cfg);
  } catch (const LevelExceeded& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const NotCutFree& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const NoEligibleRule& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
