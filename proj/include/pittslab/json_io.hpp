#pragma once

#include <json.hpp>

#include "pittslab/ipc.hpp"
#include "pittslab/proof_tree.hpp"
#include "pittslab/syntax.hpp"

namespace pittslab {

using Json = nlohmann::ordered_json;

/// {"rule", "sequent", "premises", optional "witness", "eigenvariable",
///  "schema", "instantiation"}; formulas as printed text.
Json toJson(const ProofTree& t);
/// Inverse of toJson; formulas parsed under `sig`. Throws Error on bad shape.
ProofTree treeFromJson(const Json& j, const Signature& sig = {});

Json toJson(const KripkeModel& m);

}  // namespace pittslab
