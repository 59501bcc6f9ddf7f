#include <memory>

#include "cycleframe/search.hpp"
#include "cycleframe/verify.hpp"

namespace cycleframe {

std::optional<std::string> violated_necessary_condition(const Params& p) {
  if (p.u < 3) return "u must be at least 3";
  if (p.g < 2) return "g must be at least 2";
  if ((p.lambda * (p.g - 1)) % 2 != 0) return "λ(g−1) must be even";
  if (p.k < 1 || (p.g * (p.u - 1)) % p.k != 0) return "g(u−1) must be divisible by k";
  return std::nullopt;
}

const char* to_string(BruteForceStatus s) {
  switch (s) {
    case BruteForceStatus::Found: return "Found";
    case BruteForceStatus::Infeasible: return "Infeasible";
    case BruteForceStatus::Exhausted: return "Exhausted";
    case BruteForceStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

BruteForceOutcome brute_force_arcs(const Params& p, std::uint64_t node_budget) {
  BruteForceOutcome out;
  if (auto why = violated_necessary_condition(p)) {
    out.status = BruteForceStatus::Infeasible;
    out.reason = *why;
    return out;
  }
  require(p.lambda >= 1 && p.k >= 3, "brute force needs λ >= 1 and k >= 3");
  require(p.u * p.g <= 64, "brute force handles at most 64 vertices");
  auto host = std::make_shared<const MultiGraph>(tensor_complete(p.u, p.g, p.lambda));
  std::vector<std::optional<int>> holes;
  for (int part = 0; part < p.u; ++part)
    for (int j = 0; j < p.lambda * (p.g - 1) / 2; ++j) holes.emplace_back(part);
  SearchStatus status = SearchStatus::Exhausted;
  auto found = search_decomposition(host, p.k, holes, node_budget, &status, &out.nodes);
  if (!found) {
    out.status = status == SearchStatus::BudgetExceeded ? BruteForceStatus::Unknown
                                                        : BruteForceStatus::Exhausted;
    return out;
  }
  for (auto& tag : found->provenance) tag = "exact cover search";
  if (auto report = verify_arcs(*found, p); !report)
    fail(ErrorKind::ConstructionBug, "search result failed verification: " + report.describe());
  out.status = BruteForceStatus::Found;
  out.decomposition = std::move(*found);
  return out;
}

}  // namespace cycleframe
