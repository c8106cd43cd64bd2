#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pittslab/sequent.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

enum class Rule {
  Ax, Cut, WeakenL, ContractL, WeakenR,
  OrL, OrR1, OrR2, AndR, AndL1, AndL2, ImpL, ImpR, BotL,
  ForallL, ForallR, ExistsR, ExistsL,
  Schema, Congruence
};

std::string ruleName(Rule r);
std::optional<Rule> ruleFromName(std::string_view name);

/// A derivation node. Premises are stored by value; trees are immutable
/// once built.
struct ProofTree {
  Rule rule = Rule::Ax;
  Sequent conclusion;
  std::vector<ProofTree> premises;
  /// Witness T for forallL / existsR.
  std::optional<Formula> witness;
  /// Eigenvariable for forallR / existsL when it differs from the bound name.
  std::optional<std::string> eigenvariable;
  /// Axiom schema name and metavariable instantiation for `schema` nodes.
  std::string schemaName;
  Bindings instantiation;

  std::size_t nodeCount() const;
  bool cutFree() const;
};

/// IPC extended with uninterpreted connectives and quantifier-free axiom
/// schemas. Free variables of an axiom schema are its metavariables.
struct AxiomSchema {
  std::string name;
  Sequent pattern;
};

struct SchemaTheory {
  Signature signature;
  std::vector<AxiomSchema> axioms;

  const AxiomSchema* axiom(std::string_view name) const;
  bool empty() const { return signature.connectives().empty() && axioms.empty(); }
};

// Constructors used by proof producers. They compute the conclusion from the
// premises where it is determined by the rule.
namespace build {
ProofTree ax(const Formula& f);
ProofTree botL(const Formula& goal);
ProofTree weakenL(ProofTree p, const Formula& extra);
/// Weakens `p` until its hypotheses equal `target` (a super-multiset).
ProofTree weakenTo(ProofTree p, const std::vector<Formula>& target);
ProofTree contractL(ProofTree p, const Formula& duplicated);
/// Contracts duplicates until the hypotheses equal `target` as a multiset.
ProofTree contractTo(ProofTree p, const std::vector<Formula>& target);
/// Weakening and contraction until the hypotheses equal `target`; requires
/// set inclusion of the premise hypotheses in `target`.
ProofTree adjustTo(ProofTree p, const std::vector<Formula>& target);
ProofTree weakenR(ProofTree p, const Formula& goal);
ProofTree andR(ProofTree l, ProofTree r);
ProofTree andL1(ProofTree p, const Formula& conj);
ProofTree andL2(ProofTree p, const Formula& conj);
ProofTree orR1(ProofTree p, const Formula& rhs);
ProofTree orR2(ProofTree p, const Formula& lhs);
ProofTree orL(ProofTree l, ProofTree r, const Formula& disj);
ProofTree impR(ProofTree p, const Formula& antecedent);
ProofTree impL(ProofTree left, ProofTree right, const Formula& implication);
ProofTree cut(ProofTree left, ProofTree right);
ProofTree existsR(ProofTree p, const Formula& existential, const Formula& witness);
ProofTree forallL(ProofTree p, const Formula& universal, const Formula& witness);
ProofTree forallR(ProofTree p, const Formula& universal);
ProofTree existsL(ProofTree p, const Formula& existential);
}  // namespace build

}  // namespace pittslab
