#pragma once

#include <string>
#include <vector>

#include "pittslab/formula.hpp"

namespace pittslab {

/// Strongest y-free consequence of phi (propositional exists y. phi).
Formula piteExists(const Formula& phi, const std::string& y);
/// Weakest y-free antecedent of phi (propositional forall y. phi).
Formula pitaForall(const Formula& phi, const std::string& y);

struct ProbeCheck {
  Formula probe;
  bool candidateSide = false;  // candidate |- probe  (exists)  /  probe |- candidate  (forall)
  bool bodySide = false;       // phi |- probe        (exists)  /  probe |- phi        (forall)
  bool agrees() const { return candidateSide == bodySide; }
};

struct ValidationReport {
  bool variableCondition = true;
  /// phi |- candidate for exists; candidate |- phi for forall.
  bool boundCondition = true;
  std::vector<ProbeCheck> checks;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

enum class Quantifier { Exists, Forall };

/// Probe gate: bound condition, variable condition and, for every probe, the
/// biconditional of the defining universal property. Probes run in parallel.
ValidationReport validateInterpolant(const Formula& phi, const std::string& y, const Formula& candidate,
                                     const std::vector<Formula>& probes, Quantifier q = Quantifier::Exists);
/// Single-threaded reference; identical report.
ValidationReport validateInterpolantSerial(const Formula& phi, const std::string& y, const Formula& candidate,
                                           const std::vector<Formula>& probes,
                                           Quantifier q = Quantifier::Exists);

/// All formulas over `atoms` and bot with at most maxNodes nodes, one per
/// commutativity class of /\ and \/, ordered by size then structure.
std::vector<Formula> probeCorpus(const VarSet& atoms, int maxNodes);

struct InterpolationResult {
  Formula input;
  std::string boundVar;
  Formula existential;
  Formula universal;
  std::vector<ProbeCheck> certificateChecks;
};

/// Both interpolants, simplified; probes given are checked for both.
InterpolationResult interpolate(const Formula& phi, const std::string& y, const std::vector<Formula>& probes = {});

/// Equivalent formula of no greater size: unit laws, idempotence, absorption,
/// triple negation, prover-guided pruning of redundant conjuncts and
/// disjuncts, and replacement by the smallest equivalent formula for inputs
/// over at most two atoms.
Formula simplify(const Formula& f);

}  // namespace pittslab
