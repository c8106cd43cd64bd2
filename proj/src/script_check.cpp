#include <algorithm>

#include "pittslab/ipc.hpp"
#include "pittslab/kernel.hpp"
#include "pittslab/script.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

namespace {

struct Atomizer {
  std::vector<std::pair<Formula, Formula>> table;
  VarSet avoid;

  Formula operator()(const Formula& f) {
    switch (f.kind()) {
      case Kind::Var:
      case Kind::Bottom: return f;
      case Kind::And: return Formula::conj((*this)(f.lhs()), (*this)(f.rhs()));
      case Kind::Or: return Formula::disj((*this)(f.lhs()), (*this)(f.rhs()));
      case Kind::Implies: return Formula::implies((*this)(f.lhs()), (*this)(f.rhs()));
      default:
        for (const auto& [from, to] : table)
          if (alphaEqual(from, f)) return to;
        Formula atom = Formula::var(freshName("a" + std::to_string(table.size()), avoid));
        avoid.insert(atom.name());
        table.emplace_back(f, atom);
        return atom;
    }
  }
};

class LineFailed : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void fail(const std::string& why) { throw LineFailed(why); }

// The instance may use fewer hypotheses than the line: weakening.
bool fits(const Sequent& instance, const Sequent& line) {
  return subSet(instance.hypotheses, line.hypotheses) && alphaEqual(instance.conclusion, line.conclusion);
}

void requireFits(const Sequent& instance, const Sequent& line, const std::string& what) {
  if (!fits(instance, line)) fail(what + " yields " + print(instance) + ", which does not match the line");
}

std::vector<Formula> plus(std::vector<Formula> xs, const Formula& f) {
  xs.push_back(f);
  return xs;
}

void addConjuncts(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.kind() == Kind::And && !f.isTop()) {
    addConjuncts(f.lhs(), out);
    addConjuncts(f.rhs(), out);
  }
}

class Checker {
 public:
  Checker(const ProofScript& s, const RefResolver& refs, ScriptReport& report)
      : script_(s), refs_(refs), report_(report) {}

  void line(const ScriptLine& l) {
    const Justification& j = l.justification;
    const Sequent& goal = l.sequent;
    switch (j.kind) {
      case JustKind::Ipc:
        if (!ipcAfterAtomization(goal)) fail("not an intuitionistic tautology after atomization");
        return;
      case JustKind::AxSchema: {
        const AxiomSchema* ax = script_.theory.axiom(j.name);
        if (!ax) fail("unknown axiom schema " + j.name);
        requireFits(substitute(ax->pattern, j.bindings), goal, "schema " + j.name);
        return;
      }
      case JustKind::Cut: return cut(j, goal);
      case JustKind::Subst: requireFits(substitute(cited(j.cites[0]), j.bindings), goal, "substitution"); return;
      case JustKind::Ref: {
        if (!refs_) fail("no other scripts available for ref");
        auto s = refs_(j.name, j.cites[0]);
        if (!s) fail("reference " + j.name + ":" + j.cites[0] + " is not an accepted line");
        requireFits(substitute(*s, j.bindings), goal, "reference");
        return;
      }
      case JustKind::Ext: return ext(j, goal);
      case JustKind::Rule: return rule(j, goal);
    }
  }

 private:
  const Sequent& cited(const std::string& label) const {
    auto it = report_.proved.find(label);
    if (it == report_.proved.end()) fail("cited line " + label + " was not accepted");
    return it->second;
  }

  // Cuts against the cited lines, in any order, starting from the line's own
  // hypotheses; implications and conjunctions already obtained may be used.
  void cut(const Justification& j, const Sequent& goal) {
    std::vector<Formula> known;
    for (const auto& h : goal.hypotheses) addConjuncts(h, known);
    std::vector<bool> used(j.cites.size(), false);
    for (bool grew = true; grew;) {
      grew = false;
      auto learn = [&](const Formula& f) {
        if (containsAlpha(known, f)) return;
        addConjuncts(f, known);
        grew = true;
      };
      for (std::size_t i = 0; i < j.cites.size(); ++i) {
        const Sequent& s = cited(j.cites[i]);
        if (!used[i] && subSet(s.hypotheses, known)) {
          used[i] = true;
          learn(s.conclusion);
        }
      }
      for (std::size_t i = 0; i < known.size(); ++i) {
        Formula k = known[i];
        if (k.kind() == Kind::Implies && !k.isTop() && containsAlpha(known, k.lhs())) learn(k.rhs());
      }
    }
    if (containsAlpha(known, goal.conclusion) || containsAlpha(known, Formula::bottom())) return;
    fail("cuts on the cited lines do not reach " + print(goal.conclusion));
  }

  void ext(const Justification& j, const Sequent& goal) {
    ProofTree t;
    try {
      t = deriveExtensionality(j.context, "_", j.p, j.pPrime);
    } catch (const VariableClash& e) {
      fail(e.what());
    }
    CheckReport r = checkTree(t, script_.theory);
    if (!r) fail("extensionality tree rejected: " + r.describe());
    requireFits(t.conclusion, goal, "extensionality");
  }

  void rule(const Justification& j, const Sequent& goal) {
    const std::string& n = j.name;
    auto arity = [&](std::size_t k) {
      if (j.cites.size() != k) fail("rule " + n + " takes " + std::to_string(k) + " premise(s)");
    };
    const auto& hyps = goal.hypotheses;
    const Formula& c = goal.conclusion;
    if (n == "->R" || n == "neg-R") {
      arity(1);
      const Sequent& p = cited(j.cites[0]);
      if (c.kind() != Kind::Implies) fail("conclusion is not an implication");
      if (n == "neg-R" && !c.rhs().isBottom()) fail("conclusion is not a negation");
      if (!alphaEqual(p.conclusion, c.rhs()) || !subSet(p.hypotheses, plus(hyps, c.lhs())))
        fail("premise does not match " + n);
    } else if (n == "/\\R") {
      arity(2);
      if (c.kind() != Kind::And) fail("conclusion is not a conjunction");
      const Sequent &a = cited(j.cites[0]), &b = cited(j.cites[1]);
      auto proves = [&](const Sequent& s, const Formula& f) {
        return alphaEqual(s.conclusion, f) && subSet(s.hypotheses, hyps);
      };
      if (!(proves(a, c.lhs()) && proves(b, c.rhs())) && !(proves(b, c.lhs()) && proves(a, c.rhs())))
        fail("premises do not prove both conjuncts");
    } else if (n == "/\\L") {
      arity(1);
      std::vector<Formula> allowed;
      for (const auto& h : hyps) addConjuncts(h, allowed);
      const Sequent& p = cited(j.cites[0]);
      if (!alphaEqual(p.conclusion, c) || !subSet(p.hypotheses, allowed)) fail("premise does not match /\\L");
    } else if (n == "wL") {
      arity(1);
      requireFits(cited(j.cites[0]), goal, "weakening");
    } else if (n == "\\/R1" || n == "\\/R2") {
      arity(1);
      if (c.kind() != Kind::Or) fail("conclusion is not a disjunction");
      const Sequent& p = cited(j.cites[0]);
      requireFits(Sequent(p.hypotheses, n == "\\/R1" ? c.lhs() : c.rhs()), Sequent(hyps, p.conclusion), n);
    } else if (n == "->L") {
      arity(2);
      const Sequent &a = cited(j.cites[0]), &b = cited(j.cites[1]);
      for (const auto& h : hyps)
        if (h.kind() == Kind::Implies && alphaEqual(a.conclusion, h.lhs()) && subSet(a.hypotheses, hyps) &&
            alphaEqual(b.conclusion, c) && subSet(b.hypotheses, plus(hyps, h.rhs())))
          return;
      fail("no implication hypothesis fits ->L");
    } else if (n == "contrapos" || n == "mono") {
      // contrapos: from G, A |- B infer G, B -> C |- A -> C
      // mono:      from G, A |- B infer G, C -> A |- C -> B
      arity(1);
      const Sequent& p = cited(j.cites[0]);
      if (c.kind() != Kind::Implies) fail("conclusion is not an implication");
      for (std::size_t i = 0; i < hyps.size(); ++i) {
        const Formula& h = hyps[i];
        if (h.kind() != Kind::Implies) continue;
        std::vector<Formula> rest = hyps;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        bool shape = n == "contrapos"
                         ? alphaEqual(h.lhs(), p.conclusion) && alphaEqual(h.rhs(), c.rhs()) &&
                               subSet(p.hypotheses, plus(rest, c.lhs()))
                         : alphaEqual(h.lhs(), c.lhs()) && alphaEqual(c.rhs(), p.conclusion) &&
                               subSet(p.hypotheses, plus(rest, h.rhs()));
        if (shape) return;
      }
      fail("premise does not match " + n);
    } else if (n == "exR") {
      arity(1);
      if (c.kind() != Kind::Exists) fail("conclusion is not existential");
      if (j.bindings.size() != 1) fail("exR needs exactly one witness binding");
      const auto& [var, witness] = *j.bindings.begin();
      if (var != c.name()) fail("witness must be bound to " + c.name());
      requireFits(Sequent(cited(j.cites[0]).hypotheses, substitute(c.body(), var, witness)),
                  Sequent(hyps, cited(j.cites[0]).conclusion), "exR");
    } else if (n == "exL") {
      arity(1);
      const Sequent& p = cited(j.cites[0]);
      if (!alphaEqual(p.conclusion, c)) fail("premise conclusion differs");
      for (std::size_t i = 0; i < hyps.size(); ++i) {
        const Formula& h = hyps[i];
        if (h.kind() != Kind::Exists) continue;
        std::vector<Formula> rest = hyps;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (!subSet(p.hypotheses, plus(rest, h.body()))) continue;
        bool clash = occursFree(c, h.name());
        for (const auto& r : rest) clash = clash || occursFree(r, h.name());
        if (clash) fail("eigenvariable " + h.name() + " occurs free in the context");
        return;
      }
      fail("no existential hypothesis fits exL");
    } else {
      fail("unknown rule " + n);
    }
  }

  const ProofScript& script_;
  const RefResolver& refs_;
  ScriptReport& report_;
};

}  // namespace

bool ipcAfterAtomization(const Sequent& s) {
  Atomizer a;
  a.avoid = s.freeVars();
  for (const auto& h : s.hypotheses) {
    VarSet all = allNames(h);
    a.avoid.insert(all.begin(), all.end());
  }
  VarSet all = allNames(s.conclusion);
  a.avoid.insert(all.begin(), all.end());
  Sequent t;
  for (const auto& h : s.hypotheses) t.hypotheses.push_back(a(h));
  t.conclusion = a(s.conclusion);
  return derivable(t);
}

ScriptReport checkScript(const ProofScript& script, const RefResolver& refs) {
  ScriptReport report;
  report.name = script.name;
  Checker checker(script, refs, report);
  for (const auto& l : script.lines) {
    try {
      checker.line(l);
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      report.failure = LineFailure{l.label, e.what()};
      return report;
    }
    ++report.linesChecked;
    report.proved.emplace(l.label, l.sequent);
  }
  report.accepted = true;
  if (script.exports.empty()) {
    if (!script.lines.empty()) report.derived.push_back(script.lines.back().sequent);
  } else {
    for (const auto& e : script.exports) report.derived.push_back(report.proved.at(e));
  }
  return report;
}

ScriptLibrary::ScriptLibrary(std::filesystem::path dir, std::optional<std::filesystem::path> theoryOverride)
    : dir_(std::move(dir)), theoryOverride_(std::move(theoryOverride)) {}

ProofScript ScriptLibrary::load(const std::string& name) {
  std::string text = readFile(dir_ / (name + ".pf"));
  SchemaTheory theory;
  if (theoryOverride_) {
    theory = parseTheory(readFile(*theoryOverride_));
  } else if (auto file = scriptTheoryFile(text)) {
    theory = parseTheory(readFile(dir_ / *file));
  }
  return parseScript(text, theory, name);
}

const ScriptReport& ScriptLibrary::check(const std::string& name) {
  if (auto it = done_.find(name); it != done_.end()) return it->second;
  if (std::find(inProgress_.begin(), inProgress_.end(), name) != inProgress_.end())
    throw ScriptError("circular ref through script " + name);
  inProgress_.push_back(name);
  ProofScript s = load(name);
  RefResolver refs = [this](const std::string& script, const std::string& label) -> std::optional<Sequent> {
    const ScriptReport& r = check(script);
    if (!r.accepted) return std::nullopt;
    auto it = r.proved.find(label);
    if (it == r.proved.end()) return std::nullopt;
    return it->second;
  };
  ScriptReport r = checkScript(s, refs);
  inProgress_.pop_back();
  return done_.emplace(name, std::move(r)).first->second;
}

ScriptReport checkScriptFile(const std::filesystem::path& file,
                             const std::optional<std::filesystem::path>& theoryOverride) {
  if (file.extension() != ".pf") throw ScriptError("script files end in .pf: " + file.string());
  ScriptLibrary lib(file.parent_path().empty() ? "." : file.parent_path(), theoryOverride);
  return lib.check(file.stem().string());
}

}  // namespace pittslab
