#pragma once

#include <vector>

#include "pittslab/formula.hpp"

namespace pittslab {

/// Multiset of hypotheses and a single conclusion. An empty right-hand side
/// is represented by bot.
struct Sequent {
  std::vector<Formula> hypotheses;
  Formula conclusion = Formula::bottom();

  Sequent() = default;
  Sequent(std::vector<Formula> hyps, Formula concl)
      : hypotheses(std::move(hyps)), conclusion(std::move(concl)) {}

  bool quantifierFree() const;
  bool appFree() const;
  VarSet freeVars() const;
};

/// Multiset equality of hypotheses (alpha-equivalence on members) and alpha
/// equality of conclusions.
bool sameSequent(const Sequent& a, const Sequent& b);

/// True when `sub` is a sub-multiset of `super` up to alpha-equivalence.
bool subMultiset(const std::vector<Formula>& sub, const std::vector<Formula>& super);
bool sameMultiset(const std::vector<Formula>& a, const std::vector<Formula>& b);
/// Set inclusion (multiplicities ignored) up to alpha-equivalence.
bool subSet(const std::vector<Formula>& sub, const std::vector<Formula>& super);
bool containsAlpha(const std::vector<Formula>& xs, const Formula& f);

/// Removes one alpha-equal copy of `f`; returns false when absent.
bool removeOne(std::vector<Formula>& xs, const Formula& f);

Sequent substitute(const Sequent& s, const Bindings& b);

}  // namespace pittslab
