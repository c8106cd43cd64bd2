// Contraction-free sequent search (G4ip) with translation of every step into
// the primitive kernel rules.

#include <algorithm>
#include <unordered_map>

#include "pittslab/ipc.hpp"

namespace pittslab {

namespace {

using Ctx = std::vector<Formula>;  // sorted, duplicate-free

Ctx with(Ctx c, const Formula& f) {
  auto it = std::lower_bound(c.begin(), c.end(), f);
  if (it == c.end() || *it != f) c.insert(it, f);
  return c;
}

Ctx without(const Ctx& c, std::size_t idx) {
  Ctx r;
  r.reserve(c.size() - 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != idx) r.push_back(c[i]);
  return r;
}

bool member(const Ctx& c, const Formula& f) { return std::binary_search(c.begin(), c.end(), f); }

Ctx normalize(std::vector<Formula> hs) {
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<Formula> plus(std::vector<Formula> a, std::initializer_list<Formula> more) {
  a.insert(a.end(), more.begin(), more.end());
  return a;
}

struct Key {
  Ctx ctx;
  Formula goal;
  bool operator==(const Key& o) const { return goal == o.goal && ctx == o.ctx; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = k.goal.hash();
    for (const auto& f : k.ctx) h = h * 1000003u ^ f.hash();
    return h;
  }
};

enum class Step { Bot, Ax, AndL, OrL, ImpAtom, ImpBot, ImpAnd, ImpOr, ImpR, AndR, None };

struct Choice {
  Step step = Step::None;
  std::size_t idx = 0;
};

// First applicable invertible rule in a fixed priority order.
Choice invertible(const Ctx& ctx, const Formula& goal) {
  if (member(ctx, Formula::bottom())) return {Step::Bot, 0};
  if (member(ctx, goal)) return {Step::Ax, 0};
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Formula& h = ctx[i];
    if (h.kind() == Kind::And) return {Step::AndL, i};
    if (h.kind() == Kind::Or) return {Step::OrL, i};
    if (h.kind() != Kind::Implies) continue;
    switch (h.lhs().kind()) {
      case Kind::Bottom: return {Step::ImpBot, i};
      case Kind::Var:
        if (member(ctx, h.lhs())) return {Step::ImpAtom, i};
        break;
      case Kind::And: return {Step::ImpAnd, i};
      case Kind::Or: return {Step::ImpOr, i};
      default: break;
    }
  }
  if (goal.kind() == Kind::Implies) return {Step::ImpR, 0};
  if (goal.kind() == Kind::And) return {Step::AndR, 0};
  return {};
}

// (C /\ D) -> B |- C -> (D -> B)
ProofTree lemmaImpAnd(const Formula& h) {
  const Formula &c = h.lhs().lhs(), &d = h.lhs().rhs();
  ProofTree cd = build::andR(build::weakenL(build::ax(c), d), build::weakenL(build::ax(d), c));
  ProofTree t = build::impL(std::move(cd), build::ax(h.rhs()), h);
  return build::impR(build::impR(std::move(t), d), c);
}

// (C \/ D) -> B |- C -> B  (left) or  |- D -> B
ProofTree lemmaImpOr(const Formula& h, bool left) {
  const Formula &c = h.lhs().lhs(), &d = h.lhs().rhs();
  ProofTree in = left ? build::orR1(build::ax(c), d) : build::orR2(build::ax(d), c);
  ProofTree t = build::impL(std::move(in), build::ax(h.rhs()), h);
  return build::impR(std::move(t), left ? c : d);
}

// (C -> D) -> B |- D -> B
ProofTree lemmaImpImp(const Formula& h) {
  const Formula &c = h.lhs().lhs(), &d = h.lhs().rhs();
  ProofTree cd = build::impR(build::weakenL(build::ax(d), c), c);
  ProofTree t = build::impL(std::move(cd), build::ax(h.rhs()), h);
  return build::impR(std::move(t), d);
}

class G4 {
 public:
  bool derivable(const Ctx& ctx, const Formula& goal) {
    Key key{ctx, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = search(ctx, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

  // Tree whose hypotheses are exactly ctx. Requires derivable(ctx, goal).
  ProofTree emit(const Ctx& ctx, const Formula& goal) {
    Choice ch = invertible(ctx, goal);
    switch (ch.step) {
      case Step::Bot: return build::weakenTo(build::botL(goal), ctx);
      case Step::Ax: return build::weakenTo(build::ax(goal), ctx);
      case Step::None: break;
      default: return emitInvertible(ctx, goal, ch);
    }
    if (goal.kind() == Kind::Or) {
      if (derivable(ctx, goal.lhs())) return build::orR1(emit(ctx, goal.lhs()), goal.rhs());
      if (derivable(ctx, goal.rhs())) return build::orR2(emit(ctx, goal.rhs()), goal.lhs());
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& h = ctx[i];
      if (!isImpImp(h)) continue;
      Ctx rest = without(ctx, i);
      Formula db = Formula::implies(h.lhs().rhs(), h.rhs());
      if (!derivable(with(rest, db), h.lhs()) || !derivable(with(rest, h.rhs()), goal)) continue;
      ProofTree p1 = fit(emit(with(rest, db), h.lhs()), plus(rest, {db}));
      ProofTree left = build::cut(lemmaImpImp(h), std::move(p1));
      ProofTree p2 = fit(emit(with(rest, h.rhs()), goal), plus(rest, {h.rhs()}));
      return fit(build::impL(std::move(left), std::move(p2), h), ctx);
    }
    throw Error("prover: emit called on an underivable sequent");
  }

 private:
  static bool isImpImp(const Formula& h) { return h.kind() == Kind::Implies && h.lhs().kind() == Kind::Implies; }

  static ProofTree fit(ProofTree t, const std::vector<Formula>& target) { return build::adjustTo(std::move(t), target); }

  bool search(const Ctx& ctx, const Formula& goal) {
    Choice ch = invertible(ctx, goal);
    const Formula* h = ch.step == Step::None || ch.step == Step::Bot || ch.step == Step::Ax ? nullptr : &ctx[ch.idx];
    switch (ch.step) {
      case Step::Bot:
      case Step::Ax: return true;
      case Step::AndL: return derivable(with(with(without(ctx, ch.idx), h->lhs()), h->rhs()), goal);
      case Step::OrL: {
        Ctx rest = without(ctx, ch.idx);
        return derivable(with(rest, h->lhs()), goal) && derivable(with(rest, h->rhs()), goal);
      }
      case Step::ImpAtom: return derivable(with(without(ctx, ch.idx), h->rhs()), goal);
      case Step::ImpBot: return derivable(without(ctx, ch.idx), goal);
      case Step::ImpAnd: {
        const Formula &c = h->lhs().lhs(), &d = h->lhs().rhs();
        return derivable(with(without(ctx, ch.idx), Formula::implies(c, Formula::implies(d, h->rhs()))), goal);
      }
      case Step::ImpOr: {
        Ctx rest = without(ctx, ch.idx);
        rest = with(rest, Formula::implies(h->lhs().lhs(), h->rhs()));
        rest = with(rest, Formula::implies(h->lhs().rhs(), h->rhs()));
        return derivable(rest, goal);
      }
      case Step::ImpR: return derivable(with(ctx, goal.lhs()), goal.rhs());
      case Step::AndR: return derivable(ctx, goal.lhs()) && derivable(ctx, goal.rhs());
      case Step::None: break;
    }
    if (goal.kind() == Kind::Or && (derivable(ctx, goal.lhs()) || derivable(ctx, goal.rhs()))) return true;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& imp = ctx[i];
      if (!isImpImp(imp)) continue;
      Ctx rest = without(ctx, i);
      Formula db = Formula::implies(imp.lhs().rhs(), imp.rhs());
      if (derivable(with(rest, db), imp.lhs()) && derivable(with(rest, imp.rhs()), goal)) return true;
    }
    return false;
  }

  ProofTree emitInvertible(const Ctx& ctx, const Formula& goal, Choice ch) {
    if (ch.step == Step::ImpR) {
      const Formula& a = goal.lhs();
      return build::impR(fit(emit(with(ctx, a), goal.rhs()), plus(ctx, {a})), a);
    }
    if (ch.step == Step::AndR) return build::andR(emit(ctx, goal.lhs()), emit(ctx, goal.rhs()));

    const Formula h = ctx[ch.idx];
    const Ctx rest = without(ctx, ch.idx);
    switch (ch.step) {
      case Step::AndL: {
        const Formula &a = h.lhs(), &b = h.rhs();
        ProofTree t = fit(emit(with(with(rest, a), b), goal), plus(rest, {a, b}));
        t = build::andL2(build::andL1(std::move(t), h), h);
        return build::contractL(std::move(t), h);
      }
      case Step::OrL: {
        ProofTree l = fit(emit(with(rest, h.lhs()), goal), plus(rest, {h.lhs()}));
        ProofTree r = fit(emit(with(rest, h.rhs()), goal), plus(rest, {h.rhs()}));
        return build::orL(std::move(l), std::move(r), h);
      }
      case Step::ImpAtom: {
        ProofTree p = fit(emit(with(rest, h.rhs()), goal), plus(rest, {h.rhs()}));
        return build::contractL(build::impL(build::ax(h.lhs()), std::move(p), h), h.lhs());
      }
      case Step::ImpBot: return build::weakenL(emit(rest, goal), h);
      case Step::ImpAnd: {
        Formula n = Formula::implies(h.lhs().lhs(), Formula::implies(h.lhs().rhs(), h.rhs()));
        return build::cut(lemmaImpAnd(h), fit(emit(with(rest, n), goal), plus(rest, {n})));
      }
      case Step::ImpOr: {
        Formula n1 = Formula::implies(h.lhs().lhs(), h.rhs());
        Formula n2 = Formula::implies(h.lhs().rhs(), h.rhs());
        ProofTree p = fit(emit(with(with(rest, n1), n2), goal), plus(rest, {n1, n2}));
        p = build::cut(lemmaImpOr(h, false), std::move(p));
        p = build::cut(lemmaImpOr(h, true), std::move(p));
        return build::contractL(std::move(p), h);
      }
      default: break;
    }
    throw Error("prover: unexpected step");
  }

  std::unordered_map<Key, bool, KeyHash> memo_;
};

void requireSequent(const Sequent& s) {
  for (const auto& h : s.hypotheses) requirePropositional(h, "prove");
  requirePropositional(s.conclusion, "prove");
}

Formula asImplication(const Sequent& s) {
  Formula body = s.conclusion;
  for (auto it = s.hypotheses.rbegin(); it != s.hypotheses.rend(); ++it) body = Formula::implies(*it, body);
  return body;
}

// Every IPC theorem is a classical tautology; refute cheaply when possible.
bool classicallyRefuted(const Sequent& s) {
  Formula f = asImplication(s);
  return freeVars(f).size() <= 16 && !classicalTautology(f);
}

}  // namespace

Verdict prove(const Sequent& s, const ProveOptions& opts) {
  requireSequent(s);
  G4 g;
  Ctx ctx = normalize(s.hypotheses);
  Verdict v;
  v.provable = !classicallyRefuted(s) && g.derivable(ctx, s.conclusion);
  if (v.provable) {
    if (opts.emitTree) v.proof = build::adjustTo(g.emit(ctx, s.conclusion), s.hypotheses);
  } else if (opts.countermodelBound > 0) {
    v.countermodel = findCountermodel(s, opts.countermodelBound);
    if (!v.countermodel) v.unknownBound = opts.countermodelBound;
  }
  return v;
}

bool derivable(const Sequent& s) {
  requireSequent(s);
  if (classicallyRefuted(s)) return false;
  return G4().derivable(normalize(s.hypotheses), s.conclusion);
}

bool derivable(const Formula& hypothesis, const Formula& goal) { return derivable(Sequent({hypothesis}, goal)); }

bool equivalent(const Formula& a, const Formula& b) { return derivable(a, b) && derivable(b, a); }

}  // namespace pittslab
