#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pittslab/proof_tree.hpp"

namespace pittslab {

/// Malformed script or theory text (exit status 2 at the command line).
class ScriptError : public Error {
 public:
  using Error::Error;
};

enum class JustKind { AxSchema, Ipc, Cut, Rule, Ext, Subst, Ref };

struct Justification {
  JustKind kind = JustKind::Ipc;
  /// Schema name, rule name, or referenced script.
  std::string name;
  /// Cited line labels (or the referenced label for Ref).
  std::vector<std::string> cites;
  Bindings bindings;
  /// Ext: context with hole `_`, and the two formulas.
  Formula context, p, pPrime;
  std::string text;
};

struct ScriptLine {
  std::string label;
  Sequent sequent;
  Justification justification;
  std::size_t sourceLine = 0;
};

struct ProofScript {
  std::string name;
  SchemaTheory theory;
  std::vector<ScriptLine> lines;
  /// Labels of the lines reported as derived; the last line when empty.
  std::vector<std::string> exports;
};

struct LineFailure {
  std::string label;
  std::string reason;
};

struct ScriptReport {
  std::string name;
  bool accepted = false;
  std::size_t linesChecked = 0;
  std::optional<LineFailure> failure;
  std::vector<Sequent> derived;
  /// Every accepted line, by label.
  std::map<std::string, Sequent> proved;
};

/// Statement of `label` in another script, or nullopt if that script or line
/// is not accepted.
using RefResolver = std::function<std::optional<Sequent>(const std::string& script, const std::string& label)>;

/// Theory file: `connective NAME ARITY`, `define NAME(P,..) := FORMULA`,
/// `schema NAME : SEQUENT`, `#` comments.
SchemaTheory parseTheory(std::string_view text);

/// Value of the `theory FILE` header directive, if any.
std::optional<std::string> scriptTheoryFile(std::string_view text);

/// `<label> | <sequent> | <justification>` lines plus `theory` and `export`
/// directives; formulas are parsed under the theory's signature.
ProofScript parseScript(std::string_view text, const SchemaTheory& theory, std::string name = "script");

/// Checks lines in order and stops at the first failure.
ScriptReport checkScript(const ProofScript& script, const RefResolver& refs = {});

/// IPC check of a sequent after replacing every maximal application or
/// quantified subformula by a fresh atom (alpha-equal ones share an atom).
bool ipcAfterAtomization(const Sequent& s);

/// Scripts in one directory sharing a theory; `ref` lines resolve to other
/// scripts of the same directory, each checked once.
class ScriptLibrary {
 public:
  /// `theoryOverride` replaces each script's `theory` header when set.
  explicit ScriptLibrary(std::filesystem::path dir, std::optional<std::filesystem::path> theoryOverride = {});

  /// Script `name` is read from `<dir>/<name>.pf`.
  const ScriptReport& check(const std::string& name);
  ProofScript load(const std::string& name);

 private:
  std::filesystem::path dir_;
  std::optional<std::filesystem::path> theoryOverride_;
  std::map<std::string, ScriptReport> done_;
  std::vector<std::string> inProgress_;
};

/// Checks a single script file; refs resolve within its directory.
ScriptReport checkScriptFile(const std::filesystem::path& file,
                             const std::optional<std::filesystem::path>& theoryOverride = {});

std::string readFile(const std::filesystem::path& p);

}  // namespace pittslab
