#include <algorithm>
#include <optional>
#include <tuple>

#include "pittslab/ipc.hpp"
#include "pittslab/pitts.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

namespace {

bool isNegNegNeg(const Formula& f) { return f.isNeg() && f.lhs().isNeg() && f.lhs().lhs().isNeg(); }

Formula rewriteNode(const Formula& f) {
  switch (f.kind()) {
    case Kind::And: {
      const Formula &a = f.lhs(), &b = f.rhs();
      if (a.isBottom() || b.isBottom()) return Formula::bottom();
      if (a.isTop()) return b;
      if (b.isTop() || a == b) return a;
      // absorption
      if (b.kind() == Kind::Or && (b.lhs() == a || b.rhs() == a)) return a;
      if (a.kind() == Kind::Or && (a.lhs() == b || a.rhs() == b)) return b;
      // A /\ ~A
      if ((b.isNeg() && b.lhs() == a) || (a.isNeg() && a.lhs() == b)) return Formula::bottom();
      // A /\ (A -> B)  ==  A /\ B
      if (b.kind() == Kind::Implies && b.lhs() == a) return Formula::conj(a, b.rhs());
      if (a.kind() == Kind::Implies && a.lhs() == b) return Formula::conj(a.rhs(), b);
      return f;
    }
    case Kind::Or: {
      const Formula &a = f.lhs(), &b = f.rhs();
      if (a.isTop() || b.isTop()) return Formula::top();
      if (a.isBottom()) return b;
      if (b.isBottom() || a == b) return a;
      if (b.kind() == Kind::And && (b.lhs() == a || b.rhs() == a)) return a;
      if (a.kind() == Kind::And && (a.lhs() == b || a.rhs() == b)) return b;
      return f;
    }
    case Kind::Implies: {
      const Formula &a = f.lhs(), &b = f.rhs();
      if (f.isTop()) return f;
      if (a.isBottom() || b.isTop() || a == b) return Formula::top();
      if (a.isTop()) return b;
      if (isNegNegNeg(f)) return f.lhs().lhs();
      // A -> (A -> B)  ==  A -> B
      if (b.kind() == Kind::Implies && b.lhs() == a) return b;
      // (A /\ B) -> A  ==  top
      if (a.kind() == Kind::And && (a.lhs() == b || a.rhs() == b)) return Formula::top();
      // A -> (A /\ B)  ==  A -> B
      if (b.kind() == Kind::And && b.lhs() == a) return Formula::implies(a, b.rhs());
      if (b.kind() == Kind::And && b.rhs() == a) return Formula::implies(a, b.lhs());
      return f;
    }
    default: return f;
  }
}

Formula rebuild(Kind k, const Formula& a, const Formula& b) {
  switch (k) {
    case Kind::And: return Formula::conj(a, b);
    case Kind::Or: return Formula::disj(a, b);
    default: return Formula::implies(a, b);
  }
}

// Local rewriting, children first, to a fixpoint.
Formula rewrite(const Formula& f) {
  if (!f.isBinary()) return f;
  Formula cur = rewriteNode(rebuild(f.kind(), rewrite(f.lhs()), rewrite(f.rhs())));
  return cur == f ? cur : rewrite(cur);
}

void flatten(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f.kind() == k && !f.isTop()) {
    flatten(f.lhs(), k, out);
    flatten(f.rhs(), k, out);
  } else {
    out.push_back(f);
  }
}

Formula fold(Kind k, const std::vector<Formula>& xs) {
  if (xs.empty()) return k == Kind::And ? Formula::top() : Formula::bottom();
  Formula r = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) r = rebuild(k, r, xs[i]);
  return r;
}

// Drops conjuncts entailed by the others and disjuncts entailing the others,
// bottom-up; collapses subformulas equivalent to top or bot.
Formula prune(const Formula& f) {
  if (!f.isBinary() || f.isTop()) return f;
  Formula g;
  if (f.kind() == Kind::Implies) {
    g = Formula::implies(prune(f.lhs()), prune(f.rhs()));
  } else {
    std::vector<Formula> parts;
    flatten(f, f.kind(), parts);
    for (auto& p : parts) p = prune(p);
    std::vector<Formula> uniq;
    for (const auto& p : parts)
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    for (std::size_t i = 0; i < uniq.size() && uniq.size() > 1;) {
      std::vector<Formula> others = uniq;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      bool redundant = f.kind() == Kind::And ? derivable(Sequent(others, uniq[i]))
                                             : derivable(uniq[i], fold(Kind::Or, others));
      if (redundant) uniq = std::move(others);
      else ++i;
    }
    g = fold(f.kind(), uniq);
  }
  if (derivable(Sequent({}, g))) return Formula::top();
  if (derivable(g, Formula::bottom())) return Formula::bottom();
  return rewriteNode(g);
}

int arrows(const std::string& s) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) n += s[i] == '-' && s[i + 1] == '>';
  return n;
}

// Smallest formula over the same (at most two) atoms that is equivalent; ties
// go to the shortest rendering with the fewest arrows.
Formula smallestEquivalent(const Formula& f) {
  VarSet atoms = freeVars(f);
  if (atoms.size() > 2 || f.size() <= 3) return f;
  int bound = std::min<int>(7, static_cast<int>(f.size()));
  std::optional<Formula> best;
  std::tuple<std::size_t, std::size_t, int, std::string> bestKey;
  for (const auto& c : probeCorpus(atoms, bound)) {
    if (best && c.size() > best->size()) break;
    if (!classicalTautology(Formula::iff(c, f)) || !equivalent(c, f)) continue;
    std::string text = print(c);
    auto key = std::make_tuple(c.size(), text.size(), arrows(text), text);
    if (!best || key < bestKey) {
      best = c;
      bestKey = key;
    }
  }
  return best.value_or(f);
}

}  // namespace

Formula simplify(const Formula& f) {
  requirePropositional(f, "simplify");
  Formula g = rewrite(prune(rewrite(f)));
  g = smallestEquivalent(g);
  if (g.size() > f.size() || !equivalent(f, g)) return f;
  return g;
}

}  // namespace pittslab
