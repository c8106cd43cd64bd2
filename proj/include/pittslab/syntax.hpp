#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pittslab/formula.hpp"
#include "pittslab/sequent.hpp"

namespace pittslab {

struct ConnectiveSymbol {
  std::string name;
  int arity = 0;
};

/// A named abbreviation `name(p1,...,pn) := body`, expanded at parse time.
struct Definition {
  std::string name;
  std::vector<std::string> params;
  Formula body;
};

/// Uninterpreted connective symbols and macro definitions in force while
/// parsing. The default signature is pure IPC.
class Signature {
 public:
  void addConnective(ConnectiveSymbol c);
  void addDefinition(Definition d);

  const ConnectiveSymbol* connective(std::string_view name) const;
  const Definition* definition(std::string_view name) const;
  const std::vector<ConnectiveSymbol>& connectives() const { return connectives_; }
  const std::vector<Definition>& definitions() const { return definitions_; }

 private:
  std::vector<ConnectiveSymbol> connectives_;
  std::vector<Definition> definitions_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, std::string found);
  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
  std::string found_;
};

struct ParseOptions {
  /// Accept `_` as a variable (hole marker in extensionality contexts).
  bool allowHole = false;
};

Formula parseFormula(std::string_view text, const Signature& sig = {}, ParseOptions opts = {});
/// Parses the longest formula starting at byte `pos` and advances `pos` past
/// it (and any following blanks). Stops at characters outside the grammar.
Formula parseFormulaPrefix(std::string_view text, std::size_t& pos, const Signature& sig = {},
                           ParseOptions opts = {});
/// `phi1, phi2 |- psi`; an empty right-hand side means bot.
Sequent parseSequent(std::string_view text, const Signature& sig = {}, ParseOptions opts = {});

/// Minimal-parenthesis rendering; re-folds ~, <-> and top.
std::string print(const Formula& f);
std::string print(const Sequent& s);

}  // namespace pittslab
