#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pittslab/json_io.hpp"
#include "pittslab/script.hpp"

namespace pittslab {

struct ReplayScript {
  /// Path relative to the script root, e.g. "kreisel/main.pf".
  std::string file;
  /// Theory the script was checked under, relative to the script root.
  std::string theory;
  std::size_t lines = 0;
  /// "accepted", "rejected at <label>: <reason>", or "not run".
  std::string status;
};

struct ReplayReport {
  std::string name;
  std::vector<ReplayScript> scripts;
  /// Exported lines of each suite's final script, in order.
  std::vector<Sequent> derived;
  bool success = false;
};

class ScriptFailed : public Error {
 public:
  ScriptFailed(std::string script, std::string label, const std::string& reason, ReplayReport partial);
  const std::string& script() const { return script_; }
  const std::string& label() const { return label_; }
  const ReplayReport& report() const { return report_; }

 private:
  std::string script_, label_;
  ReplayReport report_;
};

/// tara, kreisel, polacik, polacik-wlem, tara-props, polacik-disjunction.
std::vector<std::string> replayNames();

/// $PITTSLAB_SCRIPT_DIR, else the scripts/ directory of the source tree.
std::filesystem::path defaultScriptRoot();

/// Checks every script of the suite in order; throws ScriptFailed on the first
/// rejected line and ScriptError on malformed files. Unknown names are an Error.
ReplayReport replay(const std::string& name, const std::filesystem::path& root = defaultScriptRoot());

Json toJson(const ReplayReport& r);

}  // namespace pittslab
