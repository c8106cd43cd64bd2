#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pittslab/formula.hpp"

namespace pittslab {

/// Random formula over `atoms` and bot with at most maxNodes nodes.
Formula randomFormula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int maxNodes);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  /// Counted by kind, e.g. "soundness", "no countermodel".
  std::vector<std::string> violations;
  double seconds = 0;
  bool passed() const { return violations.empty(); }
};

struct ProverSuiteOptions {
  std::uint64_t seed = 0;
  int formulas = 500;
  int atoms = 3;
  int maxNodes = 12;
  int bound = 6;
};

/// Every proof passes the kernel and has no countermodel within the bound;
/// every refutation comes with a verified countermodel within the bound.
SuiteResult proverOracleSuite(const ProverSuiteOptions& o = {});

/// prove(|- ~~f) against truth tables; refutations also need a countermodel.
SuiteResult glivenkoSuite(std::uint64_t seed = 0, int formulas = 200);

/// Monotonicity of piteExists on implication pairs and idempotence of both
/// interpolants on Y-free input.
SuiteResult interpolationInvariantSuite(std::uint64_t seed = 0, int pairs = 100);

}  // namespace pittslab
