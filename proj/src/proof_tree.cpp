#include "pittslab/proof_tree.hpp"

#include <array>
#include <utility>

namespace pittslab {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 20> kRuleNames{{
    {Rule::Ax, "ax"},
    {Rule::Cut, "cut"},
    {Rule::WeakenL, "wL"},
    {Rule::ContractL, "cL"},
    {Rule::WeakenR, "wR"},
    {Rule::OrL, "orL"},
    {Rule::OrR1, "orR1"},
    {Rule::OrR2, "orR2"},
    {Rule::AndR, "andR"},
    {Rule::AndL1, "andL1"},
    {Rule::AndL2, "andL2"},
    {Rule::ImpL, "impL"},
    {Rule::ImpR, "impR"},
    {Rule::BotL, "botL"},
    {Rule::ForallL, "forallL"},
    {Rule::ForallR, "forallR"},
    {Rule::ExistsR, "existsR"},
    {Rule::ExistsL, "existsL"},
    {Rule::Schema, "schema"},
    {Rule::Congruence, "congruence"},
}};

[[noreturn]] void misuse(const std::string& what) { throw Error("proof construction: " + what); }

ProofTree node(Rule r, Sequent concl, std::vector<ProofTree> premises) {
  ProofTree t;
  t.rule = r;
  t.conclusion = std::move(concl);
  t.premises = std::move(premises);
  return t;
}

std::vector<Formula> replaced(std::vector<Formula> hyps, const Formula& from, const Formula& to) {
  if (!removeOne(hyps, from)) misuse("hypothesis " + print(from) + " not present");
  hyps.push_back(to);
  return hyps;
}

}  // namespace

std::string ruleName(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return std::string(name);
  return "?";
}

std::optional<Rule> ruleFromName(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames)
    if (n == name) return rule;
  return std::nullopt;
}

std::size_t ProofTree::nodeCount() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.nodeCount();
  return n;
}

bool ProofTree::cutFree() const {
  if (rule == Rule::Cut) return false;
  for (const auto& p : premises)
    if (!p.cutFree()) return false;
  return true;
}

const AxiomSchema* SchemaTheory::axiom(std::string_view name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

namespace build {

ProofTree ax(const Formula& f) { return node(Rule::Ax, Sequent({f}, f), {}); }

ProofTree botL(const Formula& goal) { return node(Rule::BotL, Sequent({Formula::bottom()}, goal), {}); }

ProofTree weakenL(ProofTree p, const Formula& extra) {
  Sequent s = p.conclusion;
  s.hypotheses.push_back(extra);
  return node(Rule::WeakenL, std::move(s), {std::move(p)});
}

ProofTree weakenTo(ProofTree p, const std::vector<Formula>& target) {
  std::vector<Formula> missing = target;
  for (const auto& h : p.conclusion.hypotheses)
    if (!removeOne(missing, h)) misuse("weakenTo: premise has extra hypothesis " + print(h));
  for (const auto& m : missing) p = weakenL(std::move(p), m);
  return p;
}

ProofTree contractL(ProofTree p, const Formula& duplicated) {
  Sequent s = p.conclusion;
  if (!removeOne(s.hypotheses, duplicated) || !containsAlpha(s.hypotheses, duplicated))
    misuse("contractL: " + print(duplicated) + " is not duplicated");
  return node(Rule::ContractL, std::move(s), {std::move(p)});
}

ProofTree contractTo(ProofTree p, const std::vector<Formula>& target) {
  std::vector<Formula> extra = p.conclusion.hypotheses;
  for (const auto& t : target)
    if (!removeOne(extra, t)) misuse("contractTo: target hypothesis " + print(t) + " absent");
  for (const auto& e : extra) p = contractL(std::move(p), e);
  return p;
}

ProofTree adjustTo(ProofTree p, const std::vector<Formula>& target) {
  if (!subSet(p.conclusion.hypotheses, target)) misuse("adjustTo: hypotheses not included in target");
  // Contract every duplicate not required by the target, then weaken.
  std::vector<Formula> keep;
  for (const auto& h : p.conclusion.hypotheses) {
    std::size_t want = 0, have = 0;
    for (const auto& t : target) want += alphaEqual(t, h);
    for (const auto& k : keep) have += alphaEqual(k, h);
    if (have < std::max<std::size_t>(want, 1)) keep.push_back(h);
  }
  p = contractTo(std::move(p), keep);
  return weakenTo(std::move(p), target);
}

ProofTree weakenR(ProofTree p, const Formula& goal) {
  if (!p.conclusion.conclusion.isBottom()) misuse("wR: premise must conclude bot");
  Sequent s(p.conclusion.hypotheses, goal);
  return node(Rule::WeakenR, std::move(s), {std::move(p)});
}

ProofTree andR(ProofTree l, ProofTree r) {
  if (!sameMultiset(l.conclusion.hypotheses, r.conclusion.hypotheses)) misuse("andR: contexts differ");
  Sequent s(l.conclusion.hypotheses, Formula::conj(l.conclusion.conclusion, r.conclusion.conclusion));
  return node(Rule::AndR, std::move(s), {std::move(l), std::move(r)});
}

ProofTree andL1(ProofTree p, const Formula& conj) {
  Sequent s(replaced(p.conclusion.hypotheses, conj.lhs(), conj), p.conclusion.conclusion);
  return node(Rule::AndL1, std::move(s), {std::move(p)});
}

ProofTree andL2(ProofTree p, const Formula& conj) {
  Sequent s(replaced(p.conclusion.hypotheses, conj.rhs(), conj), p.conclusion.conclusion);
  return node(Rule::AndL2, std::move(s), {std::move(p)});
}

ProofTree orR1(ProofTree p, const Formula& rhs) {
  Sequent s(p.conclusion.hypotheses, Formula::disj(p.conclusion.conclusion, rhs));
  return node(Rule::OrR1, std::move(s), {std::move(p)});
}

ProofTree orR2(ProofTree p, const Formula& lhs) {
  Sequent s(p.conclusion.hypotheses, Formula::disj(lhs, p.conclusion.conclusion));
  return node(Rule::OrR2, std::move(s), {std::move(p)});
}

ProofTree orL(ProofTree l, ProofTree r, const Formula& disj) {
  std::vector<Formula> gamma = l.conclusion.hypotheses;
  if (!removeOne(gamma, disj.lhs())) misuse("orL: left disjunct missing");
  std::vector<Formula> delta = r.conclusion.hypotheses;
  if (!removeOne(delta, disj.rhs())) misuse("orL: right disjunct missing");
  if (!sameMultiset(gamma, delta)) misuse("orL: contexts differ");
  gamma.push_back(disj);
  Sequent s(std::move(gamma), l.conclusion.conclusion);
  return node(Rule::OrL, std::move(s), {std::move(l), std::move(r)});
}

ProofTree impR(ProofTree p, const Formula& antecedent) {
  std::vector<Formula> gamma = p.conclusion.hypotheses;
  if (!removeOne(gamma, antecedent)) misuse("impR: antecedent missing");
  Sequent s(std::move(gamma), Formula::implies(antecedent, p.conclusion.conclusion));
  return node(Rule::ImpR, std::move(s), {std::move(p)});
}

ProofTree impL(ProofTree left, ProofTree right, const Formula& implication) {
  std::vector<Formula> delta = right.conclusion.hypotheses;
  if (!removeOne(delta, implication.rhs())) misuse("impL: consequent missing");
  std::vector<Formula> hyps = left.conclusion.hypotheses;
  hyps.insert(hyps.end(), delta.begin(), delta.end());
  hyps.push_back(implication);
  Sequent s(std::move(hyps), right.conclusion.conclusion);
  return node(Rule::ImpL, std::move(s), {std::move(left), std::move(right)});
}

ProofTree cut(ProofTree left, ProofTree right) {
  std::vector<Formula> delta = right.conclusion.hypotheses;
  if (!removeOne(delta, left.conclusion.conclusion)) misuse("cut: cut formula missing");
  std::vector<Formula> hyps = left.conclusion.hypotheses;
  hyps.insert(hyps.end(), delta.begin(), delta.end());
  Sequent s(std::move(hyps), right.conclusion.conclusion);
  return node(Rule::Cut, std::move(s), {std::move(left), std::move(right)});
}

ProofTree existsR(ProofTree p, const Formula& existential, const Formula& witness) {
  Sequent s(p.conclusion.hypotheses, existential);
  ProofTree t = node(Rule::ExistsR, std::move(s), {std::move(p)});
  t.witness = witness;
  return t;
}

ProofTree forallL(ProofTree p, const Formula& universal, const Formula& witness) {
  Formula inst = substitute(universal.body(), universal.name(), witness);
  Sequent s(replaced(p.conclusion.hypotheses, inst, universal), p.conclusion.conclusion);
  ProofTree t = node(Rule::ForallL, std::move(s), {std::move(p)});
  t.witness = witness;
  return t;
}

ProofTree forallR(ProofTree p, const Formula& universal) {
  Sequent s(p.conclusion.hypotheses, universal);
  return node(Rule::ForallR, std::move(s), {std::move(p)});
}

ProofTree existsL(ProofTree p, const Formula& existential) {
  Sequent s(replaced(p.conclusion.hypotheses, existential.body(), existential), p.conclusion.conclusion);
  return node(Rule::ExistsL, std::move(s), {std::move(p)});
}

}  // namespace build

}  // namespace pittslab
