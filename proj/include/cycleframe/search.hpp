#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "cycleframe/graphs.hpp"

namespace cycleframe {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

const char* to_string(SearchStatus s);

// ---- exact cover by cycle factors -------------------------------------------

/// Partition a multigraph on at most 64 vertices into factors, factor f made of
/// vertex-disjoint cycles of `cycle_length` that cover exactly `spans[f]`.
/// A cycle length of 2 asks for matchings instead.
struct CycleFactorProblem {
  int num_vertices = 0;
  std::vector<int> multiplicity;  // row-major, symmetric
  int cycle_length = 3;
  std::vector<std::uint64_t> spans;
};

struct CycleFactorOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::vector<std::vector<int>>> factors;  // factor -> cycle -> vertex indices
  std::uint64_t nodes = 0;
};

CycleFactorOutcome search_cycle_factors(const CycleFactorProblem& problem,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Convenience wrapper over a MultiGraph: one factor per entry of `holes`
/// (a part index, or nullopt for a spanning factor). Returns the decomposition
/// when found; `status` receives the search outcome.
std::optional<Decomposition> search_decomposition(std::shared_ptr<const MultiGraph> host,
                                                  int cycle_length,
                                                  const std::vector<std::optional<int>>& holes,
                                                  std::uint64_t node_budget,
                                                  SearchStatus* status = nullptr,
                                                  std::uint64_t* nodes = nullptr);

// ---- distance-vector transversals -------------------------------------------

/// Finds values.size() distance vectors of `length` over Z_modulus such that at
/// every position the entries run through `values` exactly once and each sum
/// passes `accept_sum`. Vector i starts with values[i]. Candidates are tried in
/// a preferred order first: alternating (v, -v, ...) for even length, constant
/// v for odd length. When `signs` is non-empty, position p holds signs[p] * v
/// instead of v (the per-position permutation is still over `values`).
struct TransversalProblem {
  int length = 0;
  int modulus = 0;
  std::vector<int> values;
  std::function<bool(int)> accept_sum;
  std::vector<int> signs;
};

std::optional<std::vector<DistanceVector>> find_distance_transversal(
    const TransversalProblem& problem, std::uint64_t node_budget = kDefaultNodeBudget);

// ---- rotational (difference) bases ------------------------------------------

/// Base factor for a cyclic development over Z_n: vertex-disjoint cycles of
/// `cycle_length` covering Z_n minus `excluded`, plus the fixed point n when
/// `with_infinity` is set, in which every difference class {d, -d} occurs
/// exactly `class_multiplicity` times (edges at infinity carry no class).
/// n must be odd.
struct DifferenceProblem {
  int modulus = 0;
  bool with_infinity = false;
  int cycle_length = 3;
  int class_multiplicity = 2;
  std::vector<int> excluded;
};

std::optional<std::vector<std::vector<int>>> find_difference_base(
    const DifferenceProblem& problem, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace cycleframe
