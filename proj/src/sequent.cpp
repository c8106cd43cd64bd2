#include "pittslab/sequent.hpp"

#include <algorithm>

namespace pittslab {

bool Sequent::quantifierFree() const {
  return conclusion.quantifierFree() &&
         std::all_of(hypotheses.begin(), hypotheses.end(), [](const Formula& f) { return f.quantifierFree(); });
}

bool Sequent::appFree() const {
  return conclusion.appFree() &&
         std::all_of(hypotheses.begin(), hypotheses.end(), [](const Formula& f) { return f.appFree(); });
}

VarSet Sequent::freeVars() const {
  VarSet out = pittslab::freeVars(conclusion);
  for (const auto& h : hypotheses) {
    auto fv = pittslab::freeVars(h);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

bool containsAlpha(const std::vector<Formula>& xs, const Formula& f) {
  return std::any_of(xs.begin(), xs.end(), [&](const Formula& x) { return alphaEqual(x, f); });
}

bool removeOne(std::vector<Formula>& xs, const Formula& f) {
  auto it = std::find_if(xs.begin(), xs.end(), [&](const Formula& x) { return x == f; });
  if (it == xs.end()) it = std::find_if(xs.begin(), xs.end(), [&](const Formula& x) { return alphaEqual(x, f); });
  if (it == xs.end()) return false;
  xs.erase(it);
  return true;
}

bool subMultiset(const std::vector<Formula>& sub, const std::vector<Formula>& super) {
  std::vector<Formula> pool = super;
  for (const auto& f : sub)
    if (!removeOne(pool, f)) return false;
  return true;
}

bool sameMultiset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return a.size() == b.size() && subMultiset(a, b);
}

bool subSet(const std::vector<Formula>& sub, const std::vector<Formula>& super) {
  return std::all_of(sub.begin(), sub.end(), [&](const Formula& f) { return containsAlpha(super, f); });
}

bool sameSequent(const Sequent& a, const Sequent& b) {
  return alphaEqual(a.conclusion, b.conclusion) && sameMultiset(a.hypotheses, b.hypotheses);
}

Sequent substitute(const Sequent& s, const Bindings& b) {
  Sequent out;
  out.hypotheses.reserve(s.hypotheses.size());
  for (const auto& h : s.hypotheses) out.hypotheses.push_back(substitute(h, b));
  out.conclusion = substitute(s.conclusion, b);
  return out;
}

}  // namespace pittslab
