#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pittslab/proof_tree.hpp"
#include "pittslab/sequent.hpp"

namespace pittslab {

/// Finite rooted Kripke model. World 0 is the root; `above[w]` is the bitmask
/// of worlds v with w <= v (reflexive, transitive, antisymmetric).
struct KripkeModel {
  std::vector<std::uint64_t> above;
  std::vector<std::string> atoms;
  /// valuation[a] is the (upward closed) set of worlds forcing atoms[a].
  std::vector<std::uint64_t> valuation;

  std::size_t worldCount() const { return above.size(); }
  /// Bitmask of worlds forcing f. Atoms not listed are forced nowhere.
  std::uint64_t forcing(const Formula& f) const;
  bool forces(std::size_t world, const Formula& f) const { return (forcing(f) >> world) & 1u; }
  bool isPartialOrder() const;
  bool isMonotone() const;
  std::string describe() const;
};

struct Countermodel {
  KripkeModel model;
  std::size_t world = 0;
};

struct Verdict {
  bool provable = false;
  std::optional<ProofTree> proof;
  std::optional<Countermodel> countermodel;
  /// Set when unprovable but no countermodel exists within this many worlds.
  std::optional<int> unknownBound;
};

struct ProveOptions {
  bool emitTree = true;
  /// Countermodel search bound for unprovable sequents; 0 disables search.
  int countermodelBound = 6;
};

/// Decides IPC derivability with a contraction-free calculus. Throws
/// UnsupportedFormula on quantifiers or applications.
Verdict prove(const Sequent& s, const ProveOptions& opts = {});

/// Decision only; no tree, no countermodel.
bool derivable(const Sequent& s);
bool derivable(const Formula& hypothesis, const Formula& goal);

/// Mutual derivability.
bool equivalent(const Formula& a, const Formula& b);

/// Truth-table check over every valuation of the free atoms.
bool classicalTautology(const Formula& f);

/// Smallest countermodel with at most maxWorlds worlds, searching rooted
/// posets up to isomorphism and all monotone valuations.
std::optional<Countermodel> findCountermodel(const Sequent& s, int maxWorlds);
/// Single-threaded reference for findCountermodel; same result.
std::optional<Countermodel> findCountermodelSerial(const Sequent& s, int maxWorlds);

/// Rooted posets on n worlds up to isomorphism, as `above` masks.
const std::vector<std::vector<std::uint64_t>>& rootedPosets(int n);

}  // namespace pittslab
