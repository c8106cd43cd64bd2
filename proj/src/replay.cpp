#include "pittslab/replay.hpp"

#include <cstdlib>

#include "pittslab/syntax.hpp"

#ifndef PITTSLAB_SOURCE_DIR
#define PITTSLAB_SOURCE_DIR "."
#endif

namespace pittslab {

namespace {

struct Suite {
  std::string name;
  std::string dir;
  /// Each theory runs the whole script list; empty means the scripts' own headers.
  std::vector<std::string> theories;
  std::vector<std::string> scripts;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"tara", "tara", {}, {"topreducts", "negtopreducts", "implication", "topswitch", "fulcrum", "dnegelim"}},
      {"kreisel",
       "kreisel",
       {"psi-star.thy", "psi-f7.thy", "psi-f8.thy"},
       {"trivium1", "trivium2", "trivium3", "quadrivium0", "quadrivium1", "quadrivium2", "quadrivium3",
        "quadrivium4", "main"}},
      {"polacik", "polacik", {"polacik.thy"}, {"three1", "three2", "three3", "main"}},
      {"polacik-wlem", "polacik", {"polacik-wlem.thy"}, {"three1", "three2", "three3", "main"}},
      {"tara-props", "tara-props", {}, {"props"}},
      {"polacik-disjunction", "polacik-disjunction", {}, {"disjunction"}},
  };
  return all;
}

}  // namespace

ScriptFailed::ScriptFailed(std::string script, std::string label, const std::string& reason, ReplayReport partial)
    : Error(script + " line " + label + ": " + reason),
      script_(std::move(script)),
      label_(std::move(label)),
      report_(std::move(partial)) {}

std::vector<std::string> replayNames() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

std::filesystem::path defaultScriptRoot() {
  if (const char* env = std::getenv("PITTSLAB_SCRIPT_DIR"); env && *env) return env;
  return std::filesystem::path(PITTSLAB_SOURCE_DIR) / "scripts";
}

ReplayReport replay(const std::string& name, const std::filesystem::path& root) {
  const Suite* suite = nullptr;
  for (const auto& s : suites())
    if (s.name == name) suite = &s;
  if (!suite) throw Error("unknown replay suite '" + name + "'");

  ReplayReport report;
  report.name = name;
  std::filesystem::path dir = root / suite->dir;
  std::vector<std::string> theories = suite->theories;
  if (theories.empty()) theories.push_back("");

  for (const auto& theory : theories) {
    std::optional<std::filesystem::path> override;
    if (!theory.empty()) override = dir / theory;
    ScriptLibrary lib(dir, override);
    for (std::size_t i = 0; i < suite->scripts.size(); ++i) {
      const std::string& script = suite->scripts[i];
      ReplayScript entry;
      entry.file = suite->dir + "/" + script + ".pf";
      if (theory.empty()) {
        auto header = scriptTheoryFile(readFile(dir / (script + ".pf")));
        entry.theory = header ? suite->dir + "/" + *header : "";
      } else {
        entry.theory = suite->dir + "/" + theory;
      }
      const ScriptReport& r = lib.check(script);
      entry.lines = r.linesChecked;
      if (!r.accepted) {
        entry.status = "rejected at " + r.failure->label + ": " + r.failure->reason;
        report.scripts.push_back(entry);
        for (std::size_t k = i + 1; k < suite->scripts.size(); ++k)
          report.scripts.push_back({suite->dir + "/" + suite->scripts[k] + ".pf", entry.theory, 0, "not run"});
        throw ScriptFailed(entry.file, r.failure->label, r.failure->reason, report);
      }
      entry.status = "accepted";
      report.scripts.push_back(entry);
      if (i + 1 == suite->scripts.size())
        report.derived.insert(report.derived.end(), r.derived.begin(), r.derived.end());
    }
  }
  report.success = true;
  return report;
}

Json toJson(const ReplayReport& r) {
  Json j;
  j["name"] = r.name;
  j["success"] = r.success;
  Json scripts = Json::array();
  for (const auto& s : r.scripts)
    scripts.push_back({{"file", s.file}, {"theory", s.theory}, {"lines", s.lines}, {"status", s.status}});
  j["scripts"] = scripts;
  Json derived = Json::array();
  for (const auto& d : r.derived) derived.push_back(print(d));
  j["derived"] = derived;
  return j;
}

}  // namespace pittslab
