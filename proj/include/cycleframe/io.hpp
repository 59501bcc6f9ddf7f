#pragma once

#include <string>

#include "json.hpp"

#include "cycleframe/graphs.hpp"
#include "cycleframe/params.hpp"

namespace cycleframe {

/// k-ARCS interchange document:
/// {"params":{lambda,k,u,g},"factors":[{"hole":h,"cycles":[[[p,s],...]]}],"provenance":[...]}
nlohmann::ordered_json arcs_to_json(const Decomposition& d, const Params& p);

struct ParsedArcs {
  Params params;
  Decomposition decomposition;  // host is (K_u x K_g)(lambda) built from params
};

/// Throws std::runtime_error (or nlohmann parse errors) on malformed input.
ParsedArcs arcs_from_json(const nlohmann::json& j);

/// Factors and cycles only; the host is not serialized. Holes may be null.
nlohmann::ordered_json factors_to_json(const Decomposition& d);
std::vector<PartialFactor> factors_from_json(const nlohmann::json& j);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const nlohmann::ordered_json& j);

}  // namespace cycleframe
