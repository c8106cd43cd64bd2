#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pittslab/script.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string stripComment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

[[noreturn]] void malformed(std::size_t lineNo, const std::string& what) {
  throw ScriptError("line " + std::to_string(lineNo) + ": " + what);
}

bool startsWith(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

void skipSpace(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::string word(std::string_view s, std::size_t& pos) {
  skipSpace(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '{') ++pos;
  return std::string(s.substr(start, pos - start));
}

std::string identifier(std::string_view s, std::size_t& pos) {
  skipSpace(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
    ++pos;
  return std::string(s.substr(start, pos - start));
}

// {X:=A, Y:=B}
Bindings bindings(std::string_view s, std::size_t& pos, const Signature& sig, std::size_t lineNo) {
  Bindings b;
  skipSpace(s, pos);
  if (pos >= s.size() || s[pos] != '{') return b;
  ++pos;
  skipSpace(s, pos);
  if (pos < s.size() && s[pos] == '}') {
    ++pos;
    return b;
  }
  while (true) {
    std::string var = identifier(s, pos);
    if (var.empty()) malformed(lineNo, "expected a variable in bindings");
    skipSpace(s, pos);
    if (s.substr(pos, 2) != ":=") malformed(lineNo, "expected ':=' after " + var);
    pos += 2;
    if (b.count(var)) malformed(lineNo, "variable " + var + " bound twice");
    b.emplace(var, parseFormulaPrefix(s, pos, sig));
    skipSpace(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      return b;
    }
    malformed(lineNo, "expected ',' or '}' in bindings");
  }
}

bool validLabel(const std::string& l) {
  std::size_t i = 0;
  while (i < l.size() && std::isdigit(static_cast<unsigned char>(l[i]))) ++i;
  if (i == 0) return false;
  while (i < l.size() && std::islower(static_cast<unsigned char>(l[i]))) ++i;
  return i == l.size();
}

// Labels are a number with an optional lowercase suffix; "0a" < "0b" < "1".
std::pair<long, std::string> labelKey(const std::string& l) {
  std::size_t i = 0;
  while (i < l.size() && std::isdigit(static_cast<unsigned char>(l[i]))) ++i;
  return {std::stol(l.substr(0, i)), l.substr(i)};
}

Justification justification(std::string_view s, const Signature& sig, std::size_t lineNo) {
  Justification j;
  j.text = trim(s);
  std::size_t pos = 0;
  std::string kw = word(s, pos);
  auto rest = [&] {
    skipSpace(s, pos);
    if (pos != s.size()) malformed(lineNo, "trailing text in justification: " + std::string(s.substr(pos)));
  };
  auto cites = [&] {
    while (true) {
      std::size_t save = pos;
      std::string w = word(s, pos);
      if (w.empty() || !validLabel(w)) {
        pos = save;
        break;
      }
      j.cites.push_back(w);
    }
  };
  try {
    if (kw == "ipc") {
      j.kind = JustKind::Ipc;
    } else if (kw == "ax-schema") {
      j.kind = JustKind::AxSchema;
      j.name = word(s, pos);
      if (j.name.empty()) malformed(lineNo, "ax-schema needs a schema name");
      j.bindings = bindings(s, pos, sig, lineNo);
    } else if (kw == "cut") {
      j.kind = JustKind::Cut;
      cites();
      if (j.cites.empty()) malformed(lineNo, "cut needs cited lines");
    } else if (kw == "rule") {
      j.kind = JustKind::Rule;
      j.name = word(s, pos);
      if (j.name.empty()) malformed(lineNo, "rule needs a name");
      cites();
      if (j.cites.empty()) malformed(lineNo, "rule needs cited lines");
      j.bindings = bindings(s, pos, sig, lineNo);
    } else if (kw == "subst") {
      j.kind = JustKind::Subst;
      cites();
      if (j.cites.size() != 1) malformed(lineNo, "subst cites exactly one line");
      j.bindings = bindings(s, pos, sig, lineNo);
    } else if (kw == "ref") {
      j.kind = JustKind::Ref;
      std::string target = word(s, pos);
      auto colon = target.find(':');
      if (colon == std::string::npos || colon == 0 || !validLabel(target.substr(colon + 1)))
        malformed(lineNo, "ref target must read script:line");
      j.name = target.substr(0, colon);
      j.cites.push_back(target.substr(colon + 1));
      j.bindings = bindings(s, pos, sig, lineNo);
    } else if (kw == "ext") {
      j.kind = JustKind::Ext;
      ParseOptions hole{true};
      skipSpace(s, pos);
      j.context = parseFormulaPrefix(s, pos, sig, hole);
      j.p = parseFormulaPrefix(s, pos, sig);
      j.pPrime = parseFormulaPrefix(s, pos, sig);
    } else {
      throw ScriptError("line " + std::to_string(lineNo) + ": unknown justification '" + kw + "'");
    }
  } catch (const ParseError& e) {
    malformed(lineNo, std::string("in justification: ") + e.what());
  }
  rest();
  return j;
}

}  // namespace

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ScriptError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SchemaTheory parseTheory(std::string_view text) {
  SchemaTheory t;
  std::size_t no = 0;
  for (const auto& raw : lines(text)) {
    ++no;
    std::string l = stripComment(raw);
    if (l.empty()) continue;
    std::size_t pos = 0;
    std::string kw = word(l, pos);
    try {
      if (kw == "connective") {
        std::string name = identifier(l, pos);
        std::string arity = word(l, pos);
        if (name.empty() || arity.empty() || !std::all_of(arity.begin(), arity.end(), ::isdigit))
          malformed(no, "expected: connective NAME ARITY");
        t.signature.addConnective({name, std::stoi(arity)});
      } else if (kw == "define") {
        std::string name = identifier(l, pos);
        skipSpace(l, pos);
        if (name.empty() || pos >= l.size() || l[pos] != '(') malformed(no, "expected: define NAME(P, ...) := FORMULA");
        ++pos;
        std::vector<std::string> params;
        while (true) {
          std::string p = identifier(l, pos);
          if (p.empty()) malformed(no, "expected a parameter name");
          params.push_back(p);
          skipSpace(l, pos);
          if (pos < l.size() && l[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < l.size() && l[pos] == ')') {
            ++pos;
            break;
          }
          malformed(no, "expected ',' or ')' in parameter list");
        }
        skipSpace(l, pos);
        if (l.substr(pos, 2) != ":=") malformed(no, "expected ':='");
        Formula body = parseFormula(std::string_view(l).substr(pos + 2), t.signature);
        t.signature.addDefinition({name, params, body});
      } else if (kw == "schema") {
        std::string name = word(l, pos);
        skipSpace(l, pos);
        if (name.empty() || pos >= l.size() || l[pos] != ':') malformed(no, "expected: schema NAME : SEQUENT");
        Sequent s = parseSequent(std::string_view(l).substr(pos + 1), t.signature);
        if (!s.quantifierFree()) malformed(no, "axiom schemas must be quantifier-free");
        if (t.axiom(name)) malformed(no, "duplicate schema " + name);
        t.axioms.push_back({name, s});
      } else {
        malformed(no, "unknown theory directive '" + kw + "'");
      }
    } catch (const ParseError& e) {
      malformed(no, e.what());
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      malformed(no, e.what());
    }
  }
  return t;
}

std::optional<std::string> scriptTheoryFile(std::string_view text) {
  for (const auto& raw : lines(text)) {
    std::string l = stripComment(raw);
    if (startsWith(l, "theory ")) return trim(l.substr(7));
  }
  return std::nullopt;
}

ProofScript parseScript(std::string_view text, const SchemaTheory& theory, std::string name) {
  ProofScript s;
  s.name = std::move(name);
  s.theory = theory;
  std::size_t no = 0;
  std::optional<std::pair<long, std::string>> last;
  for (const auto& raw : lines(text)) {
    ++no;
    std::string l = stripComment(raw);
    if (l.empty() || startsWith(l, "theory ")) continue;
    if (startsWith(l, "export ")) {
      std::size_t pos = 7;
      for (std::string w = word(l, pos); !w.empty(); w = word(l, pos)) {
        if (!validLabel(w)) malformed(no, "bad export label " + w);
        s.exports.push_back(w);
      }
      continue;
    }
    auto bar1 = l.find('|');
    std::size_t bar2 = std::string::npos;
    for (std::size_t i = l.size(); i-- > 0;)
      if (l[i] == '|' && (i + 1 >= l.size() || l[i + 1] != '-')) {
        bar2 = i;
        break;
      }
    if (bar1 == std::string::npos || bar2 == std::string::npos || bar2 <= bar1)
      malformed(no, "expected '<n> | <sequent> | <justification>'");
    ScriptLine line;
    line.sourceLine = no;
    line.label = trim(l.substr(0, bar1));
    if (!validLabel(line.label)) malformed(no, "bad line label '" + line.label + "'");
    auto key = labelKey(line.label);
    if (last && !(*last < key)) malformed(no, "line labels must increase");
    last = key;
    try {
      line.sequent = parseSequent(l.substr(bar1 + 1, bar2 - bar1 - 1), theory.signature);
    } catch (const ParseError& e) {
      malformed(no, std::string("in sequent: ") + e.what());
    }
    line.justification = justification(std::string_view(l).substr(bar2 + 1), theory.signature, no);
    for (const auto& c : line.justification.cites) {
      if (line.justification.kind == JustKind::Ref) break;
      bool earlier = false;
      for (const auto& prev : s.lines) earlier |= prev.label == c;
      if (!earlier) malformed(no, "line " + line.label + " cites " + c + ", which is not an earlier line");
    }
    s.lines.push_back(std::move(line));
  }
  for (const auto& e : s.exports) {
    bool found = false;
    for (const auto& l : s.lines) found |= l.label == e;
    if (!found) throw ScriptError("export of unknown line " + e);
  }
  return s;
}

}  // namespace pittslab
