#include "pittslab/kernel.hpp"

#include <sstream>

namespace pittslab {

std::string CheckReport::describe() const {
  if (accepted) return "accepted (" + std::to_string(nodesChecked) + " nodes)";
  std::ostringstream os;
  os << (failure->kind == CheckFailureKind::MalformedRule ? "MalformedRule" : "SideConditionViolated")
     << " at node [";
  for (std::size_t i = 0; i < failure->path.size(); ++i) os << (i ? "," : "") << failure->path[i];
  os << "]: " << failure->detail;
  return os.str();
}

namespace {

struct Reject {
  CheckFailureKind kind;
  std::string detail;
};

using Hyps = std::vector<Formula>;

Hyps plus(Hyps a, const Hyps& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Hyps plus(Hyps a, const Formula& f) {
  a.push_back(f);
  return a;
}

std::optional<Hyps> minus(Hyps a, const Formula& f) {
  if (!removeOne(a, f)) return std::nullopt;
  return a;
}

bool freeIn(const Hyps& hs, const std::string& v) {
  for (const auto& h : hs)
    if (occursFree(h, v)) return true;
  return false;
}

class Checker {
 public:
  explicit Checker(const SchemaTheory& theory) : theory_(theory) {}

  CheckReport run(const ProofTree& t) {
    CheckReport r;
    std::vector<std::size_t> path;
    visit(t, path, r);
    return r;
  }

 private:
  bool visit(const ProofTree& t, std::vector<std::size_t>& path, CheckReport& r) {
    ++r.nodesChecked;
    if (auto bad = local(t)) {
      r.accepted = false;
      r.failure = CheckFailure{bad->kind, path, ruleName(t.rule) + ": " + bad->detail};
      return false;
    }
    for (std::size_t i = 0; i < t.premises.size(); ++i) {
      path.push_back(i);
      bool ok = visit(t.premises[i], path, r);
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  static std::optional<Reject> malformed(std::string what) {
    return Reject{CheckFailureKind::MalformedRule, std::move(what)};
  }

  std::optional<Reject> local(const ProofTree& t) const {
    const Sequent& c = t.conclusion;
    const auto& ps = t.premises;
    auto arity = [&](std::size_t n) -> std::optional<Reject> {
      if (ps.size() != n) return malformed("expected " + std::to_string(n) + " premise(s)");
      return std::nullopt;
    };
    auto sameHyps = [&](const ProofTree& p) { return sameMultiset(p.conclusion.hypotheses, c.hypotheses); };
    auto sameGoal = [&](const ProofTree& p) { return alphaEqual(p.conclusion.conclusion, c.conclusion); };

    switch (t.rule) {
      case Rule::Ax:
        if (auto e = arity(0)) return e;
        if (c.hypotheses.size() == 1 && alphaEqual(c.hypotheses[0], c.conclusion)) return std::nullopt;
        return malformed("expected phi |- phi");

      case Rule::BotL:
        if (auto e = arity(0)) return e;
        if (c.hypotheses.size() == 1 && c.hypotheses[0].isBottom()) return std::nullopt;
        return malformed("expected bot |- phi");

      case Rule::WeakenL: {
        if (auto e = arity(1)) return e;
        const auto& ph = ps[0].conclusion.hypotheses;
        if (sameGoal(ps[0]) && ph.size() + 1 == c.hypotheses.size() && subMultiset(ph, c.hypotheses))
          return std::nullopt;
        return malformed("expected G |- psi over G, phi |- psi");
      }

      case Rule::ContractL: {
        if (auto e = arity(1)) return e;
        if (!sameGoal(ps[0])) return malformed("conclusion changed");
        for (const auto& h : c.hypotheses)
          if (sameMultiset(ps[0].conclusion.hypotheses, plus(c.hypotheses, h))) return std::nullopt;
        return malformed("expected G, phi, phi |- psi over G, phi |- psi");
      }

      case Rule::WeakenR:
        if (auto e = arity(1)) return e;
        if (sameHyps(ps[0]) && ps[0].conclusion.conclusion.isBottom()) return std::nullopt;
        return malformed("expected G |- bot over G |- phi");

      case Rule::OrR1:
      case Rule::OrR2: {
        if (auto e = arity(1)) return e;
        if (c.conclusion.kind() != Kind::Or) return malformed("conclusion is not a disjunction");
        const Formula& side = t.rule == Rule::OrR1 ? c.conclusion.lhs() : c.conclusion.rhs();
        if (sameHyps(ps[0]) && alphaEqual(ps[0].conclusion.conclusion, side)) return std::nullopt;
        return malformed("premise must prove the selected disjunct from the same context");
      }

      case Rule::AndR:
        if (auto e = arity(2)) return e;
        if (c.conclusion.kind() == Kind::And && sameHyps(ps[0]) && sameHyps(ps[1]) &&
            alphaEqual(ps[0].conclusion.conclusion, c.conclusion.lhs()) &&
            alphaEqual(ps[1].conclusion.conclusion, c.conclusion.rhs()))
          return std::nullopt;
        return malformed("expected G |- A and G |- B over G |- A /\\ B");

      case Rule::ImpR: {
        if (auto e = arity(1)) return e;
        if (c.conclusion.kind() == Kind::Implies &&
            alphaEqual(ps[0].conclusion.conclusion, c.conclusion.rhs()) &&
            sameMultiset(ps[0].conclusion.hypotheses, plus(c.hypotheses, c.conclusion.lhs())))
          return std::nullopt;
        return malformed("expected G, A |- B over G |- A -> B");
      }

      case Rule::AndL1:
      case Rule::AndL2: {
        if (auto e = arity(1)) return e;
        if (!sameGoal(ps[0])) return malformed("conclusion changed");
        for (const auto& h : c.hypotheses) {
          if (h.kind() != Kind::And) continue;
          const Formula& part = t.rule == Rule::AndL1 ? h.lhs() : h.rhs();
          if (sameMultiset(ps[0].conclusion.hypotheses, plus(*minus(c.hypotheses, h), part)))
            return std::nullopt;
        }
        return malformed("expected G, A |- phi over G, A /\\ B |- phi");
      }

      case Rule::OrL: {
        if (auto e = arity(2)) return e;
        if (!sameGoal(ps[0]) || !sameGoal(ps[1])) return malformed("conclusion changed");
        for (const auto& h : c.hypotheses) {
          if (h.kind() != Kind::Or) continue;
          Hyps rest = *minus(c.hypotheses, h);
          if (sameMultiset(ps[0].conclusion.hypotheses, plus(rest, h.lhs())) &&
              sameMultiset(ps[1].conclusion.hypotheses, plus(rest, h.rhs())))
            return std::nullopt;
        }
        return malformed("expected G, A |- phi and G, B |- phi over G, A \\/ B |- phi");
      }

      case Rule::ImpL: {
        if (auto e = arity(2)) return e;
        if (!sameGoal(ps[1])) return malformed("conclusion differs from right premise");
        for (const auto& h : c.hypotheses) {
          if (h.kind() != Kind::Implies) continue;
          if (!alphaEqual(ps[0].conclusion.conclusion, h.lhs())) continue;
          auto delta = minus(ps[1].conclusion.hypotheses, h.rhs());
          if (!delta) continue;
          if (sameMultiset(c.hypotheses, plus(plus(ps[0].conclusion.hypotheses, *delta), h)))
            return std::nullopt;
        }
        return malformed("expected G |- A and D, B |- phi over G, D, A -> B |- phi");
      }

      case Rule::Cut: {
        if (auto e = arity(2)) return e;
        if (!sameGoal(ps[1])) return malformed("conclusion differs from right premise");
        auto delta = minus(ps[1].conclusion.hypotheses, ps[0].conclusion.conclusion);
        if (delta && sameMultiset(c.hypotheses, plus(ps[0].conclusion.hypotheses, *delta))) return std::nullopt;
        return malformed("expected G |- A and D, A |- phi over G, D |- phi");
      }

      case Rule::ForallL: {
        if (auto e = arity(1)) return e;
        if (!t.witness) return malformed("missing witness");
        if (!sameGoal(ps[0])) return malformed("conclusion changed");
        for (const auto& h : c.hypotheses) {
          if (h.kind() != Kind::Forall) continue;
          Formula inst = substitute(h.body(), h.name(), *t.witness);
          if (sameMultiset(ps[0].conclusion.hypotheses, plus(*minus(c.hypotheses, h), inst)))
            return std::nullopt;
        }
        return malformed("expected G, A[T/X] |- phi over G, forall X. A |- phi");
      }

      case Rule::ExistsR: {
        if (auto e = arity(1)) return e;
        if (!t.witness) return malformed("missing witness");
        if (c.conclusion.kind() != Kind::Exists) return malformed("conclusion is not existential");
        Formula inst = substitute(c.conclusion.body(), c.conclusion.name(), *t.witness);
        if (sameHyps(ps[0]) && alphaEqual(ps[0].conclusion.conclusion, inst)) return std::nullopt;
        return malformed("expected G |- A[T/X] over G |- exists X. A");
      }

      case Rule::ForallR: {
        if (auto e = arity(1)) return e;
        if (c.conclusion.kind() != Kind::Forall) return malformed("conclusion is not universal");
        std::string z = t.eigenvariable.value_or(c.conclusion.name());
        Formula inst = substitute(c.conclusion.body(), c.conclusion.name(), Formula::var(z));
        if (!sameHyps(ps[0]) || !alphaEqual(ps[0].conclusion.conclusion, inst))
          return malformed("expected G |- A over G |- forall X. A");
        if (freeIn(c.hypotheses, z) || (z != c.conclusion.name() && occursFree(c.conclusion, z)))
          return Reject{CheckFailureKind::SideConditionViolated, "eigenvariable " + z + " occurs free in the context"};
        return std::nullopt;
      }

      case Rule::ExistsL: {
        if (auto e = arity(1)) return e;
        if (!sameGoal(ps[0])) return malformed("conclusion changed");
        std::optional<Reject> side;
        for (const auto& h : c.hypotheses) {
          if (h.kind() != Kind::Exists) continue;
          std::string z = t.eigenvariable.value_or(h.name());
          Formula inst = substitute(h.body(), h.name(), Formula::var(z));
          Hyps rest = *minus(c.hypotheses, h);
          if (!sameMultiset(ps[0].conclusion.hypotheses, plus(rest, inst))) continue;
          if (freeIn(rest, z) || occursFree(c.conclusion, z) || (z != h.name() && occursFree(h, z))) {
            side = Reject{CheckFailureKind::SideConditionViolated, "eigenvariable " + z + " occurs free in the context"};
            continue;
          }
          return std::nullopt;
        }
        if (side) return side;
        return malformed("expected G, A |- phi over G, exists X. A |- phi");
      }

      case Rule::Schema: {
        if (auto e = arity(0)) return e;
        const AxiomSchema* ax = theory_.axiom(t.schemaName);
        if (!ax) return malformed("no axiom schema named '" + t.schemaName + "' in force");
        if (sameSequent(substitute(ax->pattern, t.instantiation), c)) return std::nullopt;
        return malformed("conclusion is not the stated instance of " + t.schemaName);
      }

      case Rule::Congruence: {
        if (c.conclusion.kind() != Kind::App) return malformed("conclusion is not an application");
        const std::string& sym = c.conclusion.name();
        if (!theory_.signature.connective(sym)) return malformed("connective '" + sym + "' not in force");
        auto after = c.conclusion.args();
        if (auto e = arity(after.size())) return e;
        if (ps.empty()) {
          if (c.hypotheses.size() == 1 && alphaEqual(c.hypotheses[0], c.conclusion)) return std::nullopt;
          return malformed("nullary congruence must be c |- c");
        }
        const Hyps& gamma = ps[0].conclusion.hypotheses;
        std::vector<Formula> before;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const Formula& eq = ps[i].conclusion.conclusion;
          if (!sameMultiset(ps[i].conclusion.hypotheses, gamma)) return malformed("premise contexts differ");
          if (eq.kind() != Kind::And || eq.lhs().kind() != Kind::Implies ||
              !alphaEqual(eq, Formula::iff(eq.lhs().lhs(), eq.lhs().rhs())) ||
              !alphaEqual(eq.lhs().rhs(), after[i]))
            return malformed("premise " + std::to_string(i) + " must be G |- P <-> P'");
          before.push_back(eq.lhs().lhs());
        }
        if (sameMultiset(c.hypotheses, plus(gamma, Formula::app(sym, before)))) return std::nullopt;
        return malformed("expected G, c(P) |- c(P')");
      }
    }
    return malformed("unknown rule");
  }

  const SchemaTheory& theory_;
};

struct ExtBuilder {
  std::string hole;
  Formula p, q;

  // p -> q, q -> p, C[p] |- C[q]; `swapped` exchanges the roles of p and q.
  ProofTree derive(const Formula& c, bool swapped) const {
    const Formula& from = swapped ? q : p;
    const Formula& to = swapped ? p : q;
    Hyps gamma{Formula::implies(from, to), Formula::implies(to, from)};
    Formula before = substitute(c, hole, from);
    Formula after = substitute(c, hole, to);

    if (!occursFree(c, hole)) return build::weakenTo(build::ax(before), plus(gamma, before));

    switch (c.kind()) {
      case Kind::Var: {
        ProofTree t = build::impL(build::ax(from), build::ax(to), gamma[0]);
        return build::weakenL(std::move(t), gamma[1]);
      }
      case Kind::And: {
        ProofTree l = build::andL1(derive(c.lhs(), swapped), before);
        ProofTree r = build::andL2(derive(c.rhs(), swapped), before);
        return build::andR(std::move(l), std::move(r));
      }
      case Kind::Or: {
        ProofTree l = build::orR1(derive(c.lhs(), swapped), after.rhs());
        ProofTree r = build::orR2(derive(c.rhs(), swapped), after.lhs());
        return build::orL(std::move(l), std::move(r), before);
      }
      case Kind::Implies: {
        ProofTree ante = derive(c.lhs(), !swapped);
        ProofTree cons = derive(c.rhs(), swapped);
        ProofTree t = build::impL(std::move(ante), std::move(cons), before);
        t = build::contractL(std::move(t), gamma[0]);
        t = build::contractL(std::move(t), gamma[1]);
        return build::impR(std::move(t), after.lhs());
      }
      case Kind::Forall: {
        ProofTree t = build::forallL(derive(c.body(), swapped), before, Formula::var(c.name()));
        return build::forallR(std::move(t), after);
      }
      case Kind::Exists: {
        ProofTree t = build::existsR(derive(c.body(), swapped), after, Formula::var(c.name()));
        return build::existsL(std::move(t), before);
      }
      case Kind::App: {
        std::vector<ProofTree> premises;
        for (const auto& a : c.args()) {
          Formula a0 = substitute(a, hole, from), a1 = substitute(a, hole, to);
          ProofTree fwd = build::impR(derive(a, swapped), a0);
          ProofTree bwd = build::impR(derive(a, !swapped), a1);
          premises.push_back(build::andR(std::move(fwd), std::move(bwd)));
        }
        ProofTree t;
        t.rule = Rule::Congruence;
        t.conclusion = Sequent(plus(gamma, before), after);
        t.premises = std::move(premises);
        return t;
      }
      case Kind::Bottom:
        break;
    }
    throw Error("extensionality: unreachable context shape");
  }
};

}  // namespace

CheckReport checkTree(const ProofTree& tree, const SchemaTheory& theory) { return Checker(theory).run(tree); }

ProofTree deriveExtensionality(const Formula& context, const std::string& hole, const Formula& p,
                               const Formula& pPrime) {
  VarSet bound = boundVars(context);
  for (const Formula* f : {&p, &pPrime})
    for (const auto& v : freeVars(*f))
      if (bound.count(v)) throw VariableClash("variable " + v + " is free in the replacement and bound in the context");
  if (bound.count(hole)) throw VariableClash("hole variable " + hole + " is bound in the context");
  return ExtBuilder{hole, p, pPrime}.derive(context, false);
}

}  // namespace pittslab
