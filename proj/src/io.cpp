#include "cycleframe/io.hpp"

#include <stdexcept>

namespace cycleframe {

namespace {

nlohmann::ordered_json cycle_json(const Cycle& c) {
  auto out = nlohmann::ordered_json::array();
  for (const Vertex& v : c.vertices()) out.push_back({v.part, v.slot});
  return out;
}

PartialFactor factor_from(const nlohmann::json& jf) {
  PartialFactor f;
  if (!jf.is_object() || !jf.contains("cycles")) throw std::runtime_error("factor needs cycles");
  if (jf.contains("hole") && !jf.at("hole").is_null()) f.hole = jf.at("hole").get<int>();
  for (const auto& jc : jf.at("cycles")) {
    std::vector<Vertex> vs;
    for (const auto& jv : jc) {
      if (!jv.is_array() || jv.size() != 2) throw std::runtime_error("vertex must be [part, slot]");
      vs.push_back({jv[0].get<int>(), jv[1].get<int>()});
    }
    f.cycles.emplace_back(std::move(vs));
  }
  f.cycle_length = f.cycles.empty() ? 0 : static_cast<int>(f.cycles.front().length());
  f.normalize();
  return f;
}

}  // namespace

nlohmann::ordered_json factors_to_json(const Decomposition& d) {
  auto factors = nlohmann::ordered_json::array();
  for (const auto& f : d.factors) {
    nlohmann::ordered_json jf;
    jf["hole"] = f.hole ? nlohmann::ordered_json(*f.hole) : nlohmann::ordered_json(nullptr);
    auto cycles = nlohmann::ordered_json::array();
    for (const auto& c : f.cycles) cycles.push_back(cycle_json(c));
    jf["cycles"] = std::move(cycles);
    factors.push_back(std::move(jf));
  }
  return factors;
}

std::vector<PartialFactor> factors_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("factors must be an array");
  std::vector<PartialFactor> out;
  for (const auto& jf : j) out.push_back(factor_from(jf));
  return out;
}

nlohmann::ordered_json arcs_to_json(const Decomposition& d, const Params& p) {
  nlohmann::ordered_json j;
  j["params"] = {{"lambda", p.lambda}, {"k", p.k}, {"u", p.u}, {"g", p.g}};
  j["factors"] = factors_to_json(d);
  j["provenance"] = d.provenance;
  return j;
}

ParsedArcs arcs_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("params") || !j.contains("factors"))
    throw std::runtime_error("document needs params and factors");
  ParsedArcs out;
  const auto& jp = j.at("params");
  out.params = {jp.at("lambda").get<int>(), jp.at("k").get<int>(), jp.at("u").get<int>(),
                jp.at("g").get<int>()};
  const Params& p = out.params;
  if (p.u >= 2 && p.g >= 2 && p.lambda >= 1)
    out.decomposition.host = std::make_shared<MultiGraph>(tensor_complete(p.u, p.g, p.lambda));
  out.decomposition.factors = factors_from_json(j.at("factors"));
  for (auto& f : out.decomposition.factors)
    if (f.cycles.empty()) f.cycle_length = p.k;
  if (j.contains("provenance"))
    out.decomposition.provenance = j.at("provenance").get<std::vector<std::string>>();
  return out;
}

std::string canonical_dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace cycleframe
