// Uniform interpolants by the sequent-driven E/A recursion: E(D) is the
// strongest p-free consequence of the multiset D, A(D, phi) the weakest
// p-free formula that together with E(D) yields phi. Each clause mirrors one
// contraction-free sequent rule, so the recursion terminates.

#include "pittslab/pitts.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "pittslab/ipc.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

namespace {

using Ctx = std::vector<Formula>;  // sorted, duplicate-free

Ctx with(Ctx c, const Formula& f) {
  auto it = std::lower_bound(c.begin(), c.end(), f);
  if (it == c.end() || *it != f) c.insert(it, f);
  return c;
}

Ctx without(const Ctx& c, std::size_t idx) {
  Ctx r = c;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
  return r;
}

bool member(const Ctx& c, const Formula& f) { return std::binary_search(c.begin(), c.end(), f); }

// Constructors applying unit and idempotence laws.
Formula mkAnd(const Formula& a, const Formula& b) {
  if (a.isBottom() || b.isBottom()) return Formula::bottom();
  if (a.isTop()) return b;
  if (b.isTop() || a == b) return a;
  return Formula::conj(a, b);
}

Formula mkOr(const Formula& a, const Formula& b) {
  if (a.isTop() || b.isTop()) return Formula::top();
  if (a.isBottom()) return b;
  if (b.isBottom() || a == b) return a;
  return Formula::disj(a, b);
}

Formula mkImp(const Formula& a, const Formula& b) {
  if (a.isBottom() || b.isTop() || a == b) return Formula::top();
  if (a.isTop()) return b;
  return Formula::implies(a, b);
}

Formula bigAnd(std::vector<Formula> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Formula r = Formula::top();
  for (const auto& x : xs) r = mkAnd(r, x);
  return r;
}

Formula bigOr(std::vector<Formula> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Formula r = Formula::bottom();
  for (const auto& x : xs) r = mkOr(r, x);
  return r;
}

struct CtxHash {
  std::size_t operator()(const Ctx& c) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& f : c) h = h * 1000003u ^ f.hash();
    return h;
  }
};

struct GoalKey {
  Ctx ctx;
  Formula goal;
  bool operator==(const GoalKey& o) const { return goal == o.goal && ctx == o.ctx; }
};

struct GoalKeyHash {
  std::size_t operator()(const GoalKey& k) const { return CtxHash{}(k.ctx) ^ (k.goal.hash() * 31u); }
};

class Interpolator {
 public:
  explicit Interpolator(std::string p) : p_(std::move(p)) {}

  Formula E(const Ctx& d) {
    if (auto it = eMemo_.find(d); it != eMemo_.end()) return it->second;
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < d.size(); ++i) parts.push_back(eRule(d, i));
    Formula r = bigAnd(std::move(parts));
    eMemo_.emplace(d, r);
    return r;
  }

  Formula A(const Ctx& d, const Formula& goal) {
    GoalKey key{d, goal};
    if (auto it = aMemo_.find(key); it != aMemo_.end()) return it->second;
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < d.size(); ++i) parts.push_back(aRuleEnv(d, i, goal));
    parts.push_back(aRuleGoal(d, goal));
    Formula r = bigOr(std::move(parts));
    aMemo_.emplace(std::move(key), r);
    return r;
  }

 private:
  bool isP(const Formula& f) const { return f.kind() == Kind::Var && f.name() == p_; }

  Formula eRule(const Ctx& d, std::size_t i) {
    const Formula t = d[i];
    const Ctx rest = without(d, i);
    switch (t.kind()) {
      case Kind::Bottom: return Formula::bottom();
      case Kind::Var: return isP(t) ? Formula::top() : t;
      case Kind::And: return E(with(with(rest, t.lhs()), t.rhs()));
      case Kind::Or: return mkOr(E(with(rest, t.lhs())), E(with(rest, t.rhs())));
      case Kind::Implies: break;
      default: throw UnsupportedFormula("interpolation: quantifier or application");
    }
    const Formula &ante = t.lhs(), &cons = t.rhs();
    switch (ante.kind()) {
      case Kind::Bottom: return Formula::top();
      case Kind::Var:
        if (!isP(ante)) return mkImp(ante, E(with(rest, cons)));
        return member(rest, ante) ? E(with(rest, cons)) : Formula::top();
      case Kind::And:
        return E(with(rest, Formula::implies(ante.lhs(), Formula::implies(ante.rhs(), cons))));
      case Kind::Or:
        return E(with(with(rest, Formula::implies(ante.lhs(), cons)), Formula::implies(ante.rhs(), cons)));
      case Kind::Implies: {
        Ctx side = with(rest, Formula::implies(ante.rhs(), cons));
        return mkImp(mkImp(E(side), A(side, ante)), E(with(rest, cons)));
      }
      default: throw UnsupportedFormula("interpolation: quantifier or application");
    }
  }

  Formula aRuleEnv(const Ctx& d, std::size_t i, const Formula& goal) {
    const Formula t = d[i];
    const Ctx rest = without(d, i);
    switch (t.kind()) {
      case Kind::Bottom: return Formula::top();
      case Kind::Var: return Formula::bottom();
      case Kind::And: return A(with(with(rest, t.lhs()), t.rhs()), goal);
      case Kind::Or: {
        Ctx l = with(rest, t.lhs()), r = with(rest, t.rhs());
        return mkAnd(mkImp(E(l), A(l, goal)), mkImp(E(r), A(r, goal)));
      }
      case Kind::Implies: break;
      default: throw UnsupportedFormula("interpolation: quantifier or application");
    }
    const Formula &ante = t.lhs(), &cons = t.rhs();
    switch (ante.kind()) {
      case Kind::Bottom: return Formula::bottom();
      case Kind::Var:
        if (!isP(ante)) return mkAnd(ante, A(with(rest, cons), goal));
        return member(rest, ante) ? A(with(rest, cons), goal) : Formula::bottom();
      case Kind::And:
        return A(with(rest, Formula::implies(ante.lhs(), Formula::implies(ante.rhs(), cons))), goal);
      case Kind::Or:
        return A(with(with(rest, Formula::implies(ante.lhs(), cons)), Formula::implies(ante.rhs(), cons)), goal);
      case Kind::Implies: {
        Ctx side = with(rest, Formula::implies(ante.rhs(), cons));
        return mkAnd(mkImp(E(side), A(side, ante)), A(with(rest, cons), goal));
      }
      default: throw UnsupportedFormula("interpolation: quantifier or application");
    }
  }

  Formula aRuleGoal(const Ctx& d, const Formula& goal) {
    switch (goal.kind()) {
      case Kind::Bottom: return Formula::bottom();
      case Kind::Var:
        if (!isP(goal)) return goal;
        return member(d, goal) ? Formula::top() : Formula::bottom();
      case Kind::And: return mkAnd(A(d, goal.lhs()), A(d, goal.rhs()));
      case Kind::Or: return mkOr(A(d, goal.lhs()), A(d, goal.rhs()));
      case Kind::Implies: {
        Ctx ext = with(d, goal.lhs());
        return mkImp(E(ext), A(ext, goal.rhs()));
      }
      default: throw UnsupportedFormula("interpolation: quantifier or application");
    }
  }

  std::string p_;
  std::unordered_map<Ctx, Formula, CtxHash> eMemo_;
  std::unordered_map<GoalKey, Formula, GoalKeyHash> aMemo_;
};

}  // namespace

Formula piteExists(const Formula& phi, const std::string& y) {
  requirePropositional(phi, "piteExists");
  return Interpolator(y).E({phi});
}

Formula pitaForall(const Formula& phi, const std::string& y) {
  requirePropositional(phi, "pitaForall");
  return Interpolator(y).A({}, phi);
}

// ---------------------------------------------------------------------------
// Probe gate

namespace {

ProbeCheck runProbe(const Formula& phi, const Formula& candidate, const Formula& probe, Quantifier q) {
  ProbeCheck c;
  c.probe = probe;
  if (q == Quantifier::Exists) {
    c.candidateSide = derivable(candidate, probe);
    c.bodySide = derivable(phi, probe);
  } else {
    c.candidateSide = derivable(probe, candidate);
    c.bodySide = derivable(probe, phi);
  }
  return c;
}

ValidationReport prepare(const Formula& phi, const std::string& y, const Formula& candidate,
                         const std::vector<Formula>& probes, Quantifier q) {
  requirePropositional(phi, "validateInterpolant");
  requirePropositional(candidate, "validateInterpolant");
  ValidationReport r;
  r.variableCondition = !occursFree(candidate, y);
  if (!r.variableCondition) r.violations.push_back("candidate mentions " + y);
  r.boundCondition = q == Quantifier::Exists ? derivable(phi, candidate) : derivable(candidate, phi);
  if (!r.boundCondition)
    r.violations.push_back(q == Quantifier::Exists ? "body does not entail candidate" : "candidate does not entail body");
  for (const auto& p : probes)
    if (occursFree(p, y)) throw Error("probe " + print(p) + " mentions " + y);
  r.checks.resize(probes.size());
  return r;
}

void collect(ValidationReport& r, Quantifier q) {
  for (const auto& c : r.checks) {
    if (c.agrees()) continue;
    r.violations.push_back("probe " + print(c.probe) + ": " +
                           (q == Quantifier::Exists ? "candidate |- probe is " : "probe |- candidate is ") +
                           (c.candidateSide ? "true" : "false") + " but the body side is " +
                           (c.bodySide ? "true" : "false"));
  }
}

}  // namespace

ValidationReport validateInterpolantSerial(const Formula& phi, const std::string& y, const Formula& candidate,
                                           const std::vector<Formula>& probes, Quantifier q) {
  ValidationReport r = prepare(phi, y, candidate, probes, q);
  for (std::size_t i = 0; i < probes.size(); ++i) r.checks[i] = runProbe(phi, candidate, probes[i], q);
  collect(r, q);
  return r;
}

ValidationReport validateInterpolant(const Formula& phi, const std::string& y, const Formula& candidate,
                                     const std::vector<Formula>& probes, Quantifier q) {
  ValidationReport r = prepare(phi, y, candidate, probes, q);
  const long n = static_cast<long>(probes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) r.checks[i] = runProbe(phi, candidate, probes[i], q);
  collect(r, q);
  return r;
}

std::vector<Formula> probeCorpus(const VarSet& atoms, int maxNodes) {
  if (maxNodes < 1) return {};
  auto canon = [](const Formula& f) {
    if ((f.kind() == Kind::And || f.kind() == Kind::Or) && f.rhs() < f.lhs())
      return f.kind() == Kind::And ? Formula::conj(f.rhs(), f.lhs()) : Formula::disj(f.rhs(), f.lhs());
    return f;
  };
  std::vector<std::vector<Formula>> bySize(static_cast<std::size_t>(maxNodes) + 1);
  bySize[1].push_back(Formula::bottom());
  for (const auto& a : atoms) bySize[1].push_back(Formula::var(a));
  for (int n = 3; n <= maxNodes; n += 2) {
    std::set<Formula> out;
    for (int i = 1; i <= n - 2; i += 2) {
      int j = n - 1 - i;
      for (const auto& l : bySize[i])
        for (const auto& r : bySize[j]) {
          if (i < j || (i == j && !(r < l))) {
            out.insert(canon(Formula::conj(l, r)));
            out.insert(canon(Formula::disj(l, r)));
          }
          out.insert(Formula::implies(l, r));
        }
    }
    bySize[n].assign(out.begin(), out.end());
  }
  std::vector<Formula> all;
  for (const auto& layer : bySize) all.insert(all.end(), layer.begin(), layer.end());
  return all;
}

InterpolationResult interpolate(const Formula& phi, const std::string& y, const std::vector<Formula>& probes) {
  InterpolationResult r;
  r.input = phi;
  r.boundVar = y;
  r.existential = simplify(piteExists(phi, y));
  r.universal = simplify(pitaForall(phi, y));
  if (!probes.empty()) {
    auto e = validateInterpolant(phi, y, r.existential, probes, Quantifier::Exists);
    auto a = validateInterpolant(phi, y, r.universal, probes, Quantifier::Forall);
    r.certificateChecks = std::move(e.checks);
    r.certificateChecks.insert(r.certificateChecks.end(), a.checks.begin(), a.checks.end());
  }
  return r;
}

}  // namespace pittslab
