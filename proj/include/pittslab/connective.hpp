#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pittslab/formula.hpp"
#include "pittslab/proof_tree.hpp"

namespace pittslab {

/// The connective C(X1..Xn) := exists Y. body, body quantifier-free.
struct RegularConnective {
  Formula body;
  std::string boundVar = "Y";
  std::vector<std::string> params;

  /// Parameters default to the free variables of the body other than Y.
  static RegularConnective fromBody(const Formula& body, const std::string& y);
  /// Throws Error unless freeVars(body) is within params + {Y} and Y is not a parameter.
  void validate() const;
  Formula quantified() const { return Formula::exists(boundVar, body); }
  /// body[args/params] under the existential.
  Formula apply(const std::vector<Formula>& args) const;
};

struct AuxiliaryReport {
  RegularConnective connective;
  Formula interpolant;
  Formula candidate;
  bool holds = false;
  /// The interpolant, when holds.
  std::optional<Formula> definition;
  /// Kernel-checked trees for  exists Y.body |- E  and  E |- exists Y.body.
  std::optional<ProofTree> eliminates;
  std::optional<ProofTree> introduces;
};

AuxiliaryReport isAuxiliary(const RegularConnective& c, const Formula& candidate);

class NotCutFree : public Error {
 public:
  using Error::Error;
};
class NoEligibleRule : public Error {
 public:
  using Error::Error;
};

/// Reads an auxiliary formula off a cut-free proof of E |- exists Y.body,
/// walking through invertible left steps up to the first wR, existsR or impL.
Formula extractAuxiliary(const ProofTree& proof, const RegularConnective& c);

/// Hand-built cut-free proofs of E |- exists Y.body, one per case of the
/// extraction recursion. The files under data/trees are generated from these.
struct ExtractionExample {
  std::string name;
  RegularConnective connective;
  ProofTree proof;
};
std::vector<ExtractionExample> extractionExamples();

class LevelExceeded : public Error {
 public:
  using Error::Error;
};

/// Position in the Rieger-Nishimura sequence F0 = bot, F1 = X, F2 = ~X,
/// F(2n+1) = F(2n-1) \/ F(2n), F(2n+2) = F(2n+1) -> F(2n-1); top sits above all.
struct RNClass {
  /// Index n of F(n); empty for top.
  std::optional<int> level;
  Formula representative;
  bool isTop() const { return !level; }
  std::string label() const;
};

/// F(n) in variable x.
Formula rnFormula(int n, const std::string& x = "X");

/// Class of a formula with at most one free variable, searching F(0..maxLevel).
RNClass rnClassify(const Formula& f, int maxLevel = 12);

/// Lattice order certified by the prover.
bool rnBelow(const RNClass& a, const RNClass& b);

class HypothesisFails : public Error {
 public:
  using Error::Error;
};

struct RiegerFact {
  std::string claim;
  bool holds = false;
};

struct RiegerReport {
  Formula psi;
  std::vector<RiegerFact> facts;
  bool allHold() const;
};

/// Given ~Y \/ ~~Y |- psi, checks |- ~~psi, Y |- psi, |- psi[psi/Y], psi -> Y |- Y.
RiegerReport checkRiegerLowerFacts(const Formula& psi, const std::string& y = "Y");

}  // namespace pittslab
