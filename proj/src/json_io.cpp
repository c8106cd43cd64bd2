#include "pittslab/json_io.hpp"

namespace pittslab {

Json toJson(const ProofTree& t) {
  Json j;
  j["rule"] = ruleName(t.rule);
  j["sequent"] = print(t.conclusion);
  if (t.witness) j["witness"] = print(*t.witness);
  if (t.eigenvariable) j["eigenvariable"] = *t.eigenvariable;
  if (t.rule == Rule::Schema) {
    j["schema"] = t.schemaName;
    Json inst = Json::object();
    for (const auto& [k, v] : t.instantiation) inst[k] = print(v);
    j["instantiation"] = inst;
  }
  Json prem = Json::array();
  for (const auto& p : t.premises) prem.push_back(toJson(p));
  j["premises"] = prem;
  return j;
}

ProofTree treeFromJson(const Json& j, const Signature& sig) {
  try {
    ProofTree t;
    auto rule = ruleFromName(j.at("rule").get<std::string>());
    if (!rule) throw Error("tree json: unknown rule " + j.at("rule").get<std::string>());
    t.rule = *rule;
    t.conclusion = parseSequent(j.at("sequent").get<std::string>(), sig);
    if (j.contains("witness")) t.witness = parseFormula(j["witness"].get<std::string>(), sig);
    if (j.contains("eigenvariable")) t.eigenvariable = j["eigenvariable"].get<std::string>();
    if (j.contains("schema")) t.schemaName = j["schema"].get<std::string>();
    if (j.contains("instantiation"))
      for (const auto& [k, v] : j["instantiation"].items()) t.instantiation[k] = parseFormula(v.get<std::string>(), sig);
    if (j.contains("premises"))
      for (const auto& p : j["premises"]) t.premises.push_back(treeFromJson(p, sig));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("tree json: ") + e.what());
  }
}

Json toJson(const KripkeModel& m) {
  Json j;
  std::size_t n = m.worldCount();
  j["worlds"] = n;
  Json order = Json::array();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && (m.above[u] >> v & 1)) order.push_back({u, v});
  j["order"] = order;
  Json forced = Json::array();
  for (std::size_t w = 0; w < n; ++w) {
    Json atoms = Json::array();
    for (std::size_t a = 0; a < m.atoms.size(); ++a)
      if (m.valuation[a] >> w & 1) atoms.push_back(m.atoms[a]);
    forced.push_back(atoms);
  }
  j["forced"] = forced;
  return j;
}

}  // namespace pittslab
