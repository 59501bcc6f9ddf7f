#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cycleframe/graphs.hpp"
#include "cycleframe/params.hpp"

namespace cycleframe {

enum class Violation {
  None,
  HoleOutOfRange,
  WrongCycleLength,
  VertexOutsideHost,
  VertexReused,
  EdgeNotInHost,
  SpanMismatch,
  FactorCount,
  HoleCount,
  OverCovered,
  UnderCovered,
};

const char* to_string(Violation v);

/// Outcome of a check. On failure the optional fields locate the first
/// offending factor, cycle, vertex or pair.
struct VerifyReport {
  Violation violation = Violation::None;
  std::string message;
  std::optional<std::size_t> factor_index;
  std::optional<std::size_t> cycle_index;
  std::optional<Vertex> vertex;
  std::optional<VertexPair> pair;
  std::int64_t expected = 0;
  std::int64_t actual = 0;

  bool ok() const { return violation == Violation::None; }
  explicit operator bool() const { return ok(); }
  /// One-line machine-readable summary, e.g. "OverCovered factor=3 pair=(0,1)-(2,0) ...".
  std::string describe() const;
};

/// Checks cycle lengths, vertex-disjointness, host membership of every edge,
/// and that the factor spans exactly the host minus its hole part.
VerifyReport verify_partial_factor(const PartialFactor& factor, const MultiGraph& host, int k);

/// Every factor passes verify_partial_factor with its own cycle length and the
/// factors' edges sum to the host edge multiset exactly.
VerifyReport verify_decomposition(const Decomposition& d);

/// Full k-ARCS check against a freshly generated (K_u x K_g)(lambda): factor
/// count, per-hole counts, each factor, and exact edge partition. Provenance
/// and d.host are never consulted.
VerifyReport verify_arcs(const Decomposition& d, const Params& p);

/// The first failed necessary condition for a k-ARCS, if any:
/// u >= 3, g >= 2, λ(g−1) even, g(u−1) = 0 mod k.
std::optional<std::string> violated_necessary_condition(const Params& p);

enum class BruteForceStatus { Found, Infeasible, Exhausted, Unknown };

const char* to_string(BruteForceStatus s);

struct BruteForceOutcome {
  BruteForceStatus status = BruteForceStatus::Unknown;
  std::optional<Decomposition> decomposition;  // verified when present
  std::string reason;                          // violated condition when Infeasible
  std::uint64_t nodes = 0;
};

/// Exact-cover search for any k-ARCS of a small instance (at most 64 vertices).
/// Unknown means the node budget ran out.
BruteForceOutcome brute_force_arcs(const Params& p, std::uint64_t node_budget);

}  // namespace cycleframe
