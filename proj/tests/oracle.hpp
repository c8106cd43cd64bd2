#pragma once
// Brute-force Kripke semantics, independent of the library's search: every
// rooted partial order on up to n worlds (as raw relations) and every monotone
// valuation.
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pittslab/formula.hpp"
#include "pittslab/sequent.hpp"

namespace oracle {

using pittslab::Formula;
using pittslab::Kind;

struct Model {
  int n = 1;
  std::vector<std::vector<bool>> le;
  std::map<std::string, std::vector<bool>> val;
};

inline bool forces(const Model& m, int w, const Formula& f) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = m.val.find(f.name());
      return it != m.val.end() && it->second[static_cast<std::size_t>(w)];
    }
    case Kind::Bottom: return false;
    case Kind::And: return forces(m, w, f.lhs()) && forces(m, w, f.rhs());
    case Kind::Or: return forces(m, w, f.lhs()) || forces(m, w, f.rhs());
    case Kind::Implies:
      for (int v = 0; v < m.n; ++v)
        if (m.le[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] && forces(m, v, f.lhs()) &&
            !forces(m, v, f.rhs()))
          return false;
      return true;
    default: throw std::logic_error("oracle: propositional formulas only");
  }
}

inline void eachModel(int n, const std::vector<std::string>& atoms, const std::function<bool(const Model&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    Model m;
    m.n = n;
    m.le.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) m.le[0][static_cast<std::size_t>(i)] = m.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) m.le[static_cast<std::size_t>(pairs[k].first)][static_cast<std::size_t>(pairs[k].second)] = true;
    bool order = true;
    for (int a = 0; a < n && order; ++a)
      for (int b = 0; b < n && order; ++b) {
        if (a != b && m.le[a][b] && m.le[b][a]) order = false;
        for (int c = 0; c < n && order; ++c)
          if (m.le[a][b] && m.le[b][c] && !m.le[a][c]) order = false;
      }
    if (!order) continue;
    std::vector<std::vector<bool>> upsets;
    for (unsigned long s = 0; s < (1ul << n); ++s) {
      bool up = true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if ((s >> a & 1) && m.le[a][b] && !(s >> b & 1)) up = false;
      if (!up) continue;
      std::vector<bool> set(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) set[static_cast<std::size_t>(a)] = s >> a & 1;
      upsets.push_back(set);
    }
    std::vector<std::size_t> pick(atoms.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < atoms.size(); ++i) m.val[atoms[i]] = upsets[pick[i]];
      if (!visit(m)) return;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == upsets.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
}

/// Some model with at most maxWorlds worlds forces the hypotheses but not the
/// conclusion at its root.
inline bool refutable(const pittslab::Sequent& s, int maxWorlds = 3) {
  auto vars = s.freeVars();
  std::vector<std::string> atoms(vars.begin(), vars.end());
  bool found = false;
  for (int n = 1; n <= maxWorlds && !found; ++n)
    eachModel(n, atoms, [&](const Model& m) {
      for (const auto& h : s.hypotheses)
        if (!forces(m, 0, h)) return true;
      if (!forces(m, 0, s.conclusion)) found = true;
      return !found;
    });
  return found;
}

}  // namespace oracle
