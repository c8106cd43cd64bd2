#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "pittslab/ipc.hpp"

namespace pittslab {

namespace {

constexpr int kMaxWorlds = 8;

using Mask = std::uint64_t;

Mask impliesMask(const std::vector<Mask>& above, Mask a, Mask b) {
  Mask r = 0;
  for (std::size_t w = 0; w < above.size(); ++w)
    if ((above[w] & a & ~b) == 0) r |= Mask{1} << w;
  return r;
}

// Formula flattened to postfix so that valuations are evaluated without
// recursion or name lookups.
struct Program {
  struct Op {
    Kind kind;
    int a = -1, b = -1;
    int atom = -1;
  };
  std::vector<Op> ops;
  std::vector<int> roots;
  std::vector<std::string> atoms;

  int add(const Formula& f, std::map<std::string, int>& atomIdx) {
    Op op{f.kind()};
    switch (f.kind()) {
      case Kind::Var: {
        auto [it, fresh] = atomIdx.emplace(f.name(), static_cast<int>(atoms.size()));
        if (fresh) atoms.push_back(f.name());
        op.atom = it->second;
        break;
      }
      case Kind::Bottom: break;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        op.a = add(f.lhs(), atomIdx);
        op.b = add(f.rhs(), atomIdx);
        break;
      default: throw UnsupportedFormula("countermodel search: quantifier or application");
    }
    ops.push_back(op);
    return static_cast<int>(ops.size()) - 1;
  }

  void run(const std::vector<Mask>& above, const Mask* val, std::vector<Mask>& out) const {
    out.resize(ops.size());
    Mask all = above.empty() ? 0 : above[0];
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Op& op = ops[i];
      switch (op.kind) {
        case Kind::Var: out[i] = val[op.atom]; break;
        case Kind::Bottom: out[i] = 0; break;
        case Kind::And: out[i] = out[op.a] & out[op.b]; break;
        case Kind::Or: out[i] = out[op.a] | out[op.b]; break;
        case Kind::Implies: out[i] = impliesMask(above, out[op.a], out[op.b]) & all; break;
        default: break;
      }
    }
  }
};

Program compile(const Sequent& s) {
  Program p;
  std::map<std::string, int> idx;
  for (const auto& h : s.hypotheses) p.roots.push_back(p.add(h, idx));
  p.roots.push_back(p.add(s.conclusion, idx));
  return p;
}

std::vector<Mask> upSets(const std::vector<Mask>& above) {
  std::vector<Mask> r;
  std::size_t n = above.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool closed = true;
    for (std::size_t w = 0; w < n && closed; ++w)
      if ((s >> w & 1) && (above[w] & ~s)) closed = false;
    if (closed) r.push_back(s);
  }
  return r;
}

std::uint64_t encode(const std::vector<Mask>& above) {
  std::uint64_t code = 0;
  std::size_t n = above.size();
  for (std::size_t w = 0; w < n; ++w) code |= above[w] << (w * n);
  return code;
}

// Minimum encoding over relabelings that are linear extensions.
std::uint64_t canonicalCode(const std::vector<Mask>& above) {
  std::size_t n = above.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    if (perm[0] != 0) break;
    // perm[i] = old world placed at new position i
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = static_cast<int>(i);
    bool extension = true;
    std::vector<Mask> re(n, 0);
    for (std::size_t u = 0; u < n && extension; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (above[u] >> v & 1) {
          if (pos[u] > pos[v]) {
            extension = false;
            break;
          }
          re[pos[u]] |= Mask{1} << pos[v];
        }
    if (extension) best = std::min(best, encode(re));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<Mask> decode(std::uint64_t code, std::size_t n) {
  std::vector<Mask> above(n);
  Mask row = (Mask{1} << n) - 1;
  for (std::size_t w = 0; w < n; ++w) above[w] = (code >> (w * n)) & row;
  return above;
}

std::vector<std::vector<Mask>> generatePosets(int n) {
  // Extend naturally labelled rooted posets by one maximal world at a time.
  std::vector<std::vector<Mask>> layer{{Mask{1}}};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<std::vector<Mask>> next;
    for (const auto& above : layer) {
      std::vector<Mask> below(k, 0);
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
          if (above[u] >> v & 1) below[v] |= Mask{1} << u;
      for (Mask d = 1; d < (Mask{1} << k); d += 2) {
        bool downClosed = true;
        for (int v = 0; v < k && downClosed; ++v)
          if ((d >> v & 1) && (below[v] & ~d)) downClosed = false;
        if (!downClosed) continue;
        std::vector<Mask> ext = above;
        ext.push_back(Mask{1} << k);
        for (int v = 0; v < k; ++v)
          if (d >> v & 1) ext[v] |= Mask{1} << k;
        std::uint64_t code = canonicalCode(ext);
        if (seen.insert(code).second) next.push_back(decode(code, k + 1));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return encode(a) < encode(b); });
    layer = std::move(next);
  }
  return layer;
}

struct Hit {
  std::vector<Mask> valuation;
};

// First valuation (mixed-radix order over up-sets) refuting s at the root.
std::optional<Hit> refuteOn(const Program& prog, const std::vector<Mask>& above) {
  std::vector<Mask> ups = upSets(above);
  std::size_t k = prog.atoms.size();
  std::vector<std::size_t> digit(k, 0);
  std::vector<Mask> val(k, 0);
  std::vector<Mask> out;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) val[i] = ups[digit[i]];
    prog.run(above, val.data(), out);
    bool hypsHold = true;
    for (std::size_t i = 0; i + 1 < prog.roots.size() && hypsHold; ++i) hypsHold = out[prog.roots[i]] & 1;
    if (hypsHold && !(out[prog.roots.back()] & 1)) return Hit{val};
    std::size_t i = 0;
    while (i < k && ++digit[i] == ups.size()) digit[i++] = 0;
    if (i == k) return std::nullopt;
  }
}

Countermodel makeModel(const Program& prog, const std::vector<Mask>& above, const Hit& hit) {
  Countermodel cm;
  cm.model.above = above;
  cm.model.atoms = prog.atoms;
  cm.model.valuation = hit.valuation;
  // Sort atoms for a stable presentation.
  std::vector<std::size_t> order(prog.atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return prog.atoms[a] < prog.atoms[b]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    cm.model.atoms[i] = prog.atoms[order[i]];
    cm.model.valuation[i] = hit.valuation[order[i]];
  }
  return cm;
}

void validateBound(int maxWorlds) {
  if (maxWorlds < 1 || maxWorlds > kMaxWorlds)
    throw Error("countermodel bound must lie in 1.." + std::to_string(kMaxWorlds));
}

}  // namespace

const std::vector<std::vector<std::uint64_t>>& rootedPosets(int n) {
  validateBound(n);
  static std::array<std::vector<std::vector<Mask>>, kMaxWorlds + 1> cache;
  static std::array<std::once_flag, kMaxWorlds + 1> flags;
  std::call_once(flags[n], [n] { cache[n] = generatePosets(n); });
  return cache[n];
}

std::uint64_t KripkeModel::forcing(const Formula& f) const {
  switch (f.kind()) {
    case Kind::Var:
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == f.name()) return valuation[i];
      return 0;
    case Kind::Bottom: return 0;
    case Kind::And: return forcing(f.lhs()) & forcing(f.rhs());
    case Kind::Or: return forcing(f.lhs()) | forcing(f.rhs());
    case Kind::Implies: {
      Mask all = worldCount() >= 64 ? ~Mask{0} : (Mask{1} << worldCount()) - 1;
      return impliesMask(above, forcing(f.lhs()), forcing(f.rhs())) & all;
    }
    default: throw UnsupportedFormula("Kripke forcing: quantifier or application");
  }
}

bool KripkeModel::isPartialOrder() const {
  std::size_t n = worldCount();
  for (std::size_t u = 0; u < n; ++u) {
    if (!(above[u] >> u & 1)) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(above[u] >> v & 1)) continue;
      if (u != v && (above[v] >> u & 1)) return false;
      if (above[v] & ~above[u]) return false;
    }
  }
  return true;
}

bool KripkeModel::isMonotone() const {
  for (Mask val : valuation)
    for (std::size_t w = 0; w < worldCount(); ++w)
      if ((val >> w & 1) && (above[w] & ~val)) return false;
  return true;
}

std::string KripkeModel::describe() const {
  std::ostringstream os;
  std::size_t n = worldCount();
  os << n << " world(s); order:";
  bool any = false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && (above[u] >> v & 1)) {
        os << ' ' << u << '<' << v;
        any = true;
      }
  if (!any) os << " (discrete)";
  os << "; forced:";
  for (std::size_t w = 0; w < n; ++w) {
    os << ' ' << w << "{";
    bool first = true;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (valuation[a] >> w & 1) {
        os << (first ? "" : ",") << atoms[a];
        first = false;
      }
    os << "}";
  }
  return os.str();
}

std::optional<Countermodel> findCountermodelSerial(const Sequent& s, int maxWorlds) {
  validateBound(maxWorlds);
  Program prog = compile(s);
  for (int n = 1; n <= maxWorlds; ++n)
    for (const auto& above : rootedPosets(n))
      if (auto hit = refuteOn(prog, above)) return makeModel(prog, above, *hit);
  return std::nullopt;
}

std::optional<Countermodel> findCountermodel(const Sequent& s, int maxWorlds) {
  validateBound(maxWorlds);
  Program prog = compile(s);
  for (int n = 1; n <= maxWorlds; ++n) {
    const auto& posets = rootedPosets(n);
    const long count = static_cast<long>(posets.size());
    long first = count;
#pragma omp parallel for schedule(dynamic) reduction(min : first)
    for (long i = 0; i < count; ++i) {
      if (i < first && refuteOn(prog, posets[i])) first = i;
    }
    if (first < count) return makeModel(prog, posets[first], *refuteOn(prog, posets[first]));
  }
  return std::nullopt;
}

bool classicalTautology(const Formula& f) {
  requirePropositional(f, "classicalTautology");
  Program prog = compile(Sequent({}, f));
  std::size_t k = prog.atoms.size();
  if (k > 24) throw Error("classicalTautology: too many atoms");
  std::vector<Mask> above{1};
  std::vector<Mask> val(k), out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (std::size_t i = 0; i < k; ++i) val[i] = bits >> i & 1;
    prog.run(above, val.data(), out);
    if (!(out[prog.roots.back()] & 1)) return false;
  }
  return true;
}

}  // namespace pittslab
