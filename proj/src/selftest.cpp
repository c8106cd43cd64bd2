#include "pittslab/selftest.hpp"

#include <chrono>

#include "pittslab/ipc.hpp"
#include "pittslab/kernel.hpp"
#include "pittslab/pitts.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Formula exactly(std::mt19937_64& rng, const std::vector<std::string>& atoms, int n) {
  if (n < 3) {
    if (uniform(rng, 0, 7) == 0) return Formula::bottom();
    return Formula::var(atoms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(atoms.size()) - 1))]);
  }
  int l = uniform(rng, 1, n - 2);
  Formula a = exactly(rng, atoms, l), b = exactly(rng, atoms, n - 1 - l);
  switch (uniform(rng, 0, 3)) {
    case 0: return Formula::conj(a, b);
    case 1: return Formula::disj(a, b);
    default: return Formula::implies(a, b);
  }
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool refutes(const Countermodel& c, const Sequent& s) {
  const KripkeModel& m = c.model;
  if (!m.isPartialOrder() || !m.isMonotone()) return false;
  for (const auto& h : s.hypotheses)
    if (!m.forces(c.world, h)) return false;
  return !m.forces(c.world, s.conclusion);
}

std::vector<std::string> atomNames(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(n <= 3 ? std::string(1, "PQR"[i - 1]) : "A" + std::to_string(i));
  return out;
}

}  // namespace

Formula randomFormula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int maxNodes) {
  if (atoms.empty()) throw Error("randomFormula needs at least one atom");
  int hi = std::max(1, maxNodes);
  return exactly(rng, atoms, uniform(rng, std::min(3, hi), hi));
}

SuiteResult proverOracleSuite(const ProverSuiteOptions& o) {
  Timer timer;
  SuiteResult r{"prover/oracle", 0, {}, 0};
  std::mt19937_64 rng(o.seed);
  auto atoms = atomNames(o.atoms);
  for (int i = 0; i < o.formulas; ++i, ++r.cases) {
    Formula f = randomFormula(rng, atoms, o.maxNodes);
    Sequent s({}, f);
    Verdict v = prove(s, {true, o.bound});
    if (v.provable) {
      if (!v.proof || !checkTree(*v.proof)) r.violations.push_back("proof rejected: " + print(f));
      if (findCountermodel(s, o.bound)) r.violations.push_back("soundness: " + print(f));
    } else if (!v.countermodel) {
      r.violations.push_back("no countermodel: " + print(f));
    } else if (!refutes(*v.countermodel, s)) {
      r.violations.push_back("bad countermodel: " + print(f));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult glivenkoSuite(std::uint64_t seed, int formulas) {
  Timer timer;
  SuiteResult r{"glivenko", 0, {}, 0};
  std::mt19937_64 rng(seed);
  auto atoms = atomNames(3);
  for (int i = 0; i < formulas; ++i, ++r.cases) {
    Formula f = randomFormula(rng, atoms, 12);
    Sequent s({}, Formula::neg(Formula::neg(f)));
    Verdict v = prove(s, {false, 1});
    if (v.provable != classicalTautology(f)) r.violations.push_back("disagreement: " + print(f));
    else if (!v.provable && !(v.countermodel && refutes(*v.countermodel, s)))
      r.violations.push_back("no one-world countermodel: " + print(f));
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult interpolationInvariantSuite(std::uint64_t seed, int pairs) {
  Timer timer;
  SuiteResult r{"interpolation invariants", 0, {}, 0};
  std::mt19937_64 rng(seed);
  const std::vector<std::string> withY{"Y", "X1", "X2"}, withoutY{"X1", "X2"};
  for (int i = 0; i < pairs; ++i) {
    Formula phi = randomFormula(rng, withY, 8), g = randomFormula(rng, withY, 6);
    Formula weaker = i % 2 ? Formula::disj(phi, g) : phi;
    Formula stronger = i % 2 ? phi : Formula::conj(phi, g);
    ++r.cases;
    if (!derivable(piteExists(stronger, "Y"), piteExists(weaker, "Y")))
      r.violations.push_back("monotonicity: " + print(stronger) + " / " + print(weaker));

    Formula h = randomFormula(rng, withoutY, 8);
    ++r.cases;
    if (!equivalent(piteExists(h, "Y"), h) || !equivalent(pitaForall(h, "Y"), h))
      r.violations.push_back("idempotence: " + print(h));
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace pittslab
