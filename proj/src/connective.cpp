#include "pittslab/connective.hpp"

#include <algorithm>

#include "pittslab/ipc.hpp"
#include "pittslab/kernel.hpp"
#include "pittslab/pitts.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

RegularConnective RegularConnective::fromBody(const Formula& body, const std::string& y) {
  RegularConnective c{body, y, {}};
  for (const auto& v : freeVars(body))
    if (v != y) c.params.push_back(v);
  return c;
}

void RegularConnective::validate() const {
  if (!body.quantifierFree()) throw Error("regular connective: body must be quantifier-free");
  if (std::find(params.begin(), params.end(), boundVar) != params.end())
    throw Error("regular connective: bound variable " + boundVar + " listed as a parameter");
  for (const auto& v : freeVars(body))
    if (v != boundVar && std::find(params.begin(), params.end(), v) == params.end())
      throw Error("regular connective: free variable " + v + " is not a parameter");
}

Formula RegularConnective::apply(const std::vector<Formula>& args) const {
  if (args.size() != params.size()) throw Error("regular connective: arity mismatch");
  Bindings b;
  for (std::size_t i = 0; i < args.size(); ++i) b[params[i]] = args[i];
  return substitute(quantified(), b);
}

AuxiliaryReport isAuxiliary(const RegularConnective& c, const Formula& candidate) {
  c.validate();
  requirePropositional(c.body, "isAuxiliary");
  requirePropositional(candidate, "isAuxiliary");
  for (const auto& v : freeVars(candidate))
    if (std::find(c.params.begin(), c.params.end(), v) == c.params.end())
      throw Error("isAuxiliary: candidate mentions " + v + ", which is not a parameter");

  AuxiliaryReport r;
  r.connective = c;
  r.interpolant = simplify(piteExists(c.body, c.boundVar));
  r.candidate = candidate;
  Formula instance = substitute(c.body, c.boundVar, candidate);
  r.holds = derivable(Sequent({r.interpolant}, instance));
  if (!r.holds) return r;

  ProveOptions quiet{true, 0};
  Verdict intro = prove(Sequent({r.interpolant}, instance), quiet);
  Verdict elim = prove(Sequent({c.body}, r.interpolant), quiet);
  if (!intro.proof || !elim.proof) throw Error("isAuxiliary: interpolant does not follow from the body");
  r.introduces = build::existsR(*intro.proof, c.quantified(), candidate);
  r.eliminates = build::existsL(*elim.proof, c.quantified());
  for (const auto* t : {&*r.introduces, &*r.eliminates}) {
    CheckReport rep = checkTree(*t);
    if (!rep) throw Error("isAuxiliary: certificate rejected: " + rep.describe());
  }
  r.definition = r.interpolant;
  return r;
}

namespace {

bool hasOr(const Formula& f) {
  if (f.kind() == Kind::Or) return true;
  if (f.isBinary()) return hasOr(f.lhs()) || hasOr(f.rhs());
  return false;
}

Formula climb(const ProofTree& t, const Formula& goal) {
  if (!alphaEqual(t.conclusion.conclusion, goal))
    throw NoEligibleRule("extractAuxiliary: right-hand side changed at a " + ruleName(t.rule) + " step");
  switch (t.rule) {
    case Rule::WeakenR: return Formula::bottom();
    case Rule::ExistsR: return *t.witness;
    case Rule::ImpL: return climb(t.premises.at(1), goal);
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::WeakenL:
    case Rule::ContractL: return climb(t.premises.at(0), goal);
    default:
      throw NoEligibleRule("extractAuxiliary: " + ruleName(t.rule) + " before any wR, existsR or impL");
  }
}

}  // namespace

Formula extractAuxiliary(const ProofTree& proof, const RegularConnective& c) {
  c.validate();
  if (!proof.cutFree()) throw NotCutFree("extractAuxiliary: proof uses cut");
  CheckReport rep = checkTree(proof);
  if (!rep) throw Error("extractAuxiliary: proof rejected: " + rep.describe());
  const Sequent& root = proof.conclusion;
  Formula goal = c.quantified();
  if (root.hypotheses.size() != 1 || !alphaEqual(root.conclusion, goal))
    throw Error("extractAuxiliary: proof must conclude E |- " + print(goal));
  const Formula& e = root.hypotheses[0];
  if (hasOr(e)) throw Error("extractAuxiliary: interpolant must be disjunction-free");
  if (!equivalent(e, piteExists(c.body, c.boundVar)))
    throw Error("extractAuxiliary: hypothesis is not the uniform interpolant");
  return climb(proof, goal);
}

std::vector<ExtractionExample> extractionExamples() {
  using namespace build;
  std::vector<ExtractionExample> out;
  auto f = [](const char* text) { return parseFormula(text); };

  {
    // X /\ ~X |- bot, then wR
    auto c = RegularConnective::fromBody(f("(X /\\ ~X) /\\ Y"), "Y");
    Formula x = f("X"), nx = f("~X"), both = f("X /\\ ~X");
    ProofTree t = impL(ax(x), botL(Formula::bottom()), nx);
    t = contractL(andL2(andL1(std::move(t), both), both), both);
    out.push_back({"wr-first", c, weakenR(std::move(t), c.quantified())});
  }
  {
    auto c = RegularConnective::fromBody(f("(Y \\/ ~Y) -> (P /\\ Q)"), "Y");
    Formula pq = f("P /\\ Q"), npq = f("~(P /\\ Q)"), nnpq = f("~~(P /\\ Q)");
    ProofTree left = weakenL(ax(pq), nnpq);
    ProofTree right = impL(ax(npq), botL(pq), nnpq);
    ProofTree t = impR(orL(std::move(left), std::move(right), Formula::disj(pq, npq)), Formula::disj(pq, npq));
    out.push_back({"exr-first", c, existsR(std::move(t), c.quantified(), pq)});
  }
  {
    auto c = RegularConnective::fromBody(f("(X /\\ (X -> Z)) /\\ (Y <-> Z)"), "Y");
    Formula x = f("X"), z = f("Z"), xz = f("X -> Z"), e = f("X /\\ (X -> Z)");
    Verdict inner = prove(Sequent({x, z}, substitute(c.body, "Y", z)), {true, 0});
    if (!inner.proof || !inner.proof->cutFree()) throw Error("extractionExamples: inner proof unavailable");
    ProofTree t = impL(ax(x), existsR(*inner.proof, c.quantified(), z), xz);
    t = contractL(andL2(andL1(contractL(std::move(t), x), e), e), e);
    out.push_back({"impl-then-exr", c, std::move(t)});
  }
  return out;
}

std::string RNClass::label() const { return level ? "F" + std::to_string(*level) : "top"; }

Formula rnFormula(int n, const std::string& x) {
  if (n < 0) throw Error("rnFormula: negative index");
  std::vector<Formula> f{Formula::bottom(), Formula::var(x), Formula::neg(Formula::var(x))};
  for (int k = 3; k <= n; ++k)
    f.push_back(k % 2 ? Formula::disj(f[k - 2], f[k - 1]) : Formula::implies(f[k - 1], f[k - 3]));
  return f[n];
}

RNClass rnClassify(const Formula& f, int maxLevel) {
  requirePropositional(f, "rnClassify");
  VarSet vars = freeVars(f);
  if (vars.size() > 1) throw Error("rnClassify: more than one variable in " + print(f));
  std::string x = vars.empty() ? "X" : *vars.begin();
  if (derivable(Sequent({}, f))) return {std::nullopt, Formula::top()};
  for (int n = 0; n <= maxLevel; ++n) {
    Formula r = rnFormula(n, x);
    if (classicalTautology(Formula::iff(f, r)) && equivalent(f, r)) return {n, r};
  }
  throw LevelExceeded("rnClassify: " + print(f) + " lies above F" + std::to_string(maxLevel));
}

bool rnBelow(const RNClass& a, const RNClass& b) {
  Formula ra = a.representative, rb = b.representative;
  VarSet va = freeVars(ra), vb = freeVars(rb);
  if (!va.empty() && !vb.empty() && *va.begin() != *vb.begin())
    rb = substitute(rb, *vb.begin(), Formula::var(*va.begin()));
  return derivable(ra, rb);
}

bool RiegerReport::allHold() const {
  return std::all_of(facts.begin(), facts.end(), [](const RiegerFact& f) { return f.holds; });
}

RiegerReport checkRiegerLowerFacts(const Formula& psi, const std::string& y) {
  requirePropositional(psi, "checkRiegerLowerFacts");
  Formula Y = Formula::var(y);
  Formula wlem = Formula::disj(Formula::neg(Y), Formula::neg(Formula::neg(Y)));
  if (!derivable(wlem, psi)) throw HypothesisFails("~" + y + " \\/ ~~" + y + " |- " + print(psi) + " is not derivable");
  RiegerReport r{psi, {}};
  auto add = [&](Sequent s) {
    bool ok = derivable(s);
    r.facts.push_back({print(s), ok});
  };
  add(Sequent({}, Formula::neg(Formula::neg(psi))));
  add(Sequent({Y}, psi));
  add(Sequent({}, substitute(psi, y, psi)));
  add(Sequent({Formula::implies(psi, Y)}, Y));
  return r;
}

}  // namespace pittslab
