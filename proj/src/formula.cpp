#include "pittslab/formula.hpp"

#include <functional>
#include <utility>

namespace pittslab {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool quantifierFree = true;
  bool appFree = true;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const Formula& bottomSingleton();

}  // namespace

Formula Formula::make(Kind k, std::string name, std::vector<Formula> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->kids = std::move(kids);
  std::size_t h = mix(static_cast<std::size_t>(k) * 1315423911u, std::hash<std::string>{}(n->name));
  for (const auto& c : n->kids) {
    h = mix(h, c.hash());
    n->size += c.size();
    n->quantifierFree = n->quantifierFree && c.quantifierFree();
    n->appFree = n->appFree && c.appFree();
  }
  if (k == Kind::Exists || k == Kind::Forall) n->quantifierFree = false;
  if (k == Kind::App) n->appFree = false;
  n->hash = h;
  return Formula(std::move(n));
}

namespace {
const Formula& bottomSingleton() {
  static const Formula b = Formula::bottom();
  return b;
}
}  // namespace

Formula::Formula() : Formula(bottomSingleton()) {}

Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}); }
Formula Formula::bottom() {
  static const Formula b = make(Kind::Bottom, "", {});
  return b;
}
Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, "", {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, "", {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Kind::Implies, "", {std::move(a), std::move(b)});
}
Formula Formula::neg(Formula a) { return implies(std::move(a), bottom()); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula Formula::exists(std::string var, Formula body) {
  return make(Kind::Exists, std::move(var), {std::move(body)});
}
Formula Formula::forall(std::string var, Formula body) {
  return make(Kind::Forall, std::move(var), {std::move(body)});
}
Formula Formula::app(std::string symbol, std::vector<Formula> args) {
  return make(Kind::App, std::move(symbol), std::move(args));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
const Formula& Formula::body() const { return node_->kids.at(0); }
std::span<const Formula> Formula::args() const { return node_->kids; }

bool Formula::isTop() const { return kind() == Kind::Implies && lhs().isBottom() && rhs().isBottom(); }
bool Formula::isNeg() const { return kind() == Kind::Implies && rhs().isBottom(); }
bool Formula::isBinary() const {
  return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
}
bool Formula::isQuantifier() const { return kind() == Kind::Exists || kind() == Kind::Forall; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }
bool Formula::quantifierFree() const { return node_->quantifierFree; }
bool Formula::appFree() const { return node_->appFree; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind() || a.name() != b.name())
    return false;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!(ka[i] == kb[i])) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  if (ka.size() != kb.size()) return ka.size() < kb.size();
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i] < kb[i]) return true;
    if (kb[i] < ka[i]) return false;
  }
  return false;
}

namespace {

void collectFree(const Formula& f, VarSet& bound, VarSet& out) {
  switch (f.kind()) {
    case Kind::Var:
      if (!bound.count(f.name())) out.insert(f.name());
      return;
    case Kind::Bottom:
      return;
    case Kind::Exists:
    case Kind::Forall: {
      bool added = bound.insert(f.name()).second;
      collectFree(f.body(), bound, out);
      if (added) bound.erase(f.name());
      return;
    }
    default:
      for (const auto& a : f.args()) collectFree(a, bound, out);
  }
}

void collectBound(const Formula& f, VarSet& out) {
  if (f.isQuantifier()) out.insert(f.name());
  for (const auto& a : f.args()) collectBound(a, out);
}

void collectAll(const Formula& f, VarSet& out) {
  if (f.kind() == Kind::Var || f.isQuantifier() || f.kind() == Kind::App) out.insert(f.name());
  for (const auto& a : f.args()) collectAll(a, out);
}

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
  switch (f.kind()) {
    case Kind::And: return Formula::conj(std::move(kids[0]), std::move(kids[1]));
    case Kind::Or: return Formula::disj(std::move(kids[0]), std::move(kids[1]));
    case Kind::Implies: return Formula::implies(std::move(kids[0]), std::move(kids[1]));
    case Kind::App: return Formula::app(f.name(), std::move(kids));
    default: return f;
  }
}

Formula substituteImpl(const Formula& f, const Bindings& b) {
  if (b.empty()) return f;
  switch (f.kind()) {
    case Kind::Var: {
      auto it = b.find(f.name());
      return it == b.end() ? f : it->second;
    }
    case Kind::Bottom:
      return f;
    case Kind::Exists:
    case Kind::Forall: {
      Bindings inner = b;
      inner.erase(f.name());
      // Only bindings whose variable actually occurs free matter for capture.
      VarSet bodyFree = freeVars(f.body());
      VarSet inserted;
      for (auto it = inner.begin(); it != inner.end();) {
        if (!bodyFree.count(it->first)) {
          it = inner.erase(it);
          continue;
        }
        auto fv = freeVars(it->second);
        inserted.insert(fv.begin(), fv.end());
        ++it;
      }
      if (inner.empty()) return f;
      std::string var = f.name();
      Formula body = f.body();
      if (inserted.count(var)) {
        VarSet avoid = inserted;
        auto names = allNames(f.body());
        avoid.insert(names.begin(), names.end());
        for (const auto& [k, v] : inner) avoid.insert(k);
        std::string fresh = freshName(var, avoid);
        body = substituteImpl(body, {{var, Formula::var(fresh)}});
        var = fresh;
      }
      body = substituteImpl(body, inner);
      return f.kind() == Kind::Exists ? Formula::exists(var, body) : Formula::forall(var, body);
    }
    default: {
      std::vector<Formula> kids;
      kids.reserve(f.args().size());
      bool changed = false;
      for (const auto& a : f.args()) {
        kids.push_back(substituteImpl(a, b));
        changed = changed || !(kids.back() == a);
      }
      return changed ? rebuild(f, std::move(kids)) : f;
    }
  }
}

bool alphaImpl(const Formula& a, const Formula& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool l = it->first == a.name();
        bool r = it->second == b.name();
        if (l || r) return l && r;
      }
      return a.name() == b.name();
    case Kind::Bottom:
      return true;
    case Kind::Exists:
    case Kind::Forall: {
      env.emplace_back(a.name(), b.name());
      bool ok = alphaImpl(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
    default: {
      if (a.kind() == Kind::App && a.name() != b.name()) return false;
      if (a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alphaImpl(a.args()[i], b.args()[i], env)) return false;
      return true;
    }
  }
}

}  // namespace

VarSet freeVars(const Formula& f) {
  VarSet bound, out;
  collectFree(f, bound, out);
  return out;
}

VarSet boundVars(const Formula& f) {
  VarSet out;
  collectBound(f, out);
  return out;
}

VarSet allNames(const Formula& f) {
  VarSet out;
  collectAll(f, out);
  return out;
}

bool occursFree(const Formula& f, const std::string& var) { return freeVars(f).count(var) > 0; }

Formula substitute(const Formula& base, const Bindings& bindings) { return substituteImpl(base, bindings); }

Formula substitute(const Formula& base, const std::string& var, const Formula& replacement) {
  return substituteImpl(base, {{var, replacement}});
}

bool alphaEqual(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a.quantifierFree() && b.quantifierFree()) return false;
  std::vector<std::pair<std::string, std::string>> env;
  return alphaImpl(a, b, env);
}

std::string freshName(const std::string& base, const VarSet& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += '\'';
  return n;
}

void requirePropositional(const Formula& f, const char* where) {
  if (!f.quantifierFree()) throw UnsupportedFormula(std::string(where) + ": quantifiers are not supported");
  if (!f.appFree()) throw UnsupportedFormula(std::string(where) + ": uninterpreted connectives are not supported");
}

}  // namespace pittslab
