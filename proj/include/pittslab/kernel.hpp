#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pittslab/proof_tree.hpp"

namespace pittslab {

enum class CheckFailureKind { MalformedRule, SideConditionViolated };

struct CheckFailure {
  CheckFailureKind kind = CheckFailureKind::MalformedRule;
  /// Premise indices from the root to the failing node.
  std::vector<std::size_t> path;
  /// Expected template, or the offending eigenvariable for side conditions.
  std::string detail;
};

struct CheckReport {
  bool accepted = true;
  std::size_t nodesChecked = 0;
  std::optional<CheckFailure> failure;

  explicit operator bool() const { return accepted; }
  std::string describe() const;
};

/// Local rule-template check of every node, first failure in pre-order.
CheckReport checkTree(const ProofTree& tree, const SchemaTheory& theory = {});

class VariableClash : public Error {
 public:
  using Error::Error;
};

/// Proof of  p -> p', p' -> p, C[p/hole] |- C[p'/hole]  by induction on C.
/// Uninterpreted applications in C are crossed with a congruence step, so the
/// resulting tree then needs a theory declaring the symbol.
ProofTree deriveExtensionality(const Formula& context, const std::string& hole, const Formula& p,
                               const Formula& pPrime);

}  // namespace pittslab
