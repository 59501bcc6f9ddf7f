#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycleframe/errors.hpp"

namespace cycleframe {

// A vertex of a graph whose ground set is split into equal-size parts.
// Plain complete graphs use parts of size 1.
struct Vertex {
  int part = 0;
  int slot = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

// Unordered vertex pair stored with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

VertexPair normalized(Vertex a, Vertex b);

enum class GraphKind {
  TensorComplete,
  LexicographicBlown,
  CompleteSimple,
  CompleteDoubled,
  Custom,
};

const char* to_string(GraphKind kind);

/// Loopless multigraph on `num_parts * part_size` vertices. Parallel edges are
/// kept as a multiplicity per vertex pair, never as separate edge objects.
class MultiGraph {
 public:
  MultiGraph(int num_parts, int part_size, GraphKind kind = GraphKind::Custom);

  int num_parts() const { return num_parts_; }
  int part_size() const { return part_size_; }
  int num_vertices() const { return num_parts_ * part_size_; }
  GraphKind kind() const { return kind_; }

  bool contains(Vertex v) const;
  void add_edge(Vertex a, Vertex b, int multiplicity = 1);
  int multiplicity(Vertex a, Vertex b) const;
  int degree(Vertex v) const;

  const std::map<VertexPair, int>& edges() const { return edges_; }
  /// Number of edges counted with multiplicity.
  std::int64_t edge_count() const { return edge_count_; }

  /// Dense index in [0, num_vertices()).
  int index(Vertex v) const { return v.part * part_size_ + v.slot; }
  Vertex vertex(int index) const { return {index / part_size_, index % part_size_}; }

  // Equal ground sets and equal edge multisets; the kind tag is ignored.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.num_parts_ == b.num_parts_ && a.part_size_ == b.part_size_ &&
           a.edges_ == b.edges_;
  }

 private:
  int num_parts_;
  int part_size_;
  GraphKind kind_;
  std::map<VertexPair, int> edges_;
  std::int64_t edge_count_ = 0;
};

/// Cyclic sequence of distinct vertices, stored in canonical form (least
/// rotation/reflection). A two-vertex cycle denotes a single edge and is only
/// used for the components of 1-factors.
class Cycle {
 public:
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  std::vector<VertexPair> edges() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct PartialFactor {
  std::optional<int> hole;
  std::vector<Cycle> cycles;
  int cycle_length = 0;

  std::size_t vertex_count() const;
  /// Sorts cycles so equal factors compare equal.
  void normalize();

  friend bool operator==(const PartialFactor&, const PartialFactor&) = default;
};

/// Combines vertex-disjoint pieces of the same cycle length into one factor.
PartialFactor merge(const PartialFactor& a, const PartialFactor& b,
                    std::optional<int> hole);

struct Decomposition {
  std::shared_ptr<const MultiGraph> host;
  std::vector<PartialFactor> factors;
  std::vector<std::string> provenance;  // one tag per factor

  void add(PartialFactor factor, std::string tag);
  void append(const Decomposition& other);
};

/// Per-position matching distances around a cycle of parts.
struct DistanceVector {
  std::vector<int> distances;

  std::size_t size() const { return distances.size(); }
  int sum_mod(int t) const;

  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;
};

// ---- generators -----------------------------------------------------------

/// (K_u x K_g)(lambda): u parts of size g, {(p1,s1),(p2,s2)} iff p1 != p2 and s1 != s2.
MultiGraph tensor_complete(int u, int g, int lambda);

/// (K_u ⊗ K̄_g)(lambda): the complete u-partite graph with parts of size g.
MultiGraph complete_multipartite(int u, int g, int lambda);

/// K_n(lambda) on n parts of size 1.
MultiGraph complete_graph(int n, int lambda);

/// C_k x K_m with part i of the cycle holding m slots.
MultiGraph cycle_times_complete(int k, int m);

/// C_m ⊗ K̄_n.
MultiGraph cycle_lex_empty(int m, int n);

/// Removes g vertex-aligned copies of K_u(lambda) from (K_u ⊗ K̄_g)(lambda) and
/// compares the rest to (K_u x K_g)(lambda).
bool mcf_identity_check(int u, int g, int lambda);

/// F_i(A,B) = {a_j b_{j+i}} for 0 <= j < t.
std::vector<VertexPair> distance_one_factor(int part_a, int part_b, int i, int t);

/// Cycles traced by threading `dv` around a cycle of length dv.size() over Z_t.
/// Vertices are (position, residue) pairs.
std::vector<std::vector<std::pair<int, int>>> trace_distance_cycles(const DistanceVector& dv,
                                                                    int t);

/// Union of F_{d_j}(P_j, P_{j+1}) over the part cycle, split into cycles.
PartialFactor assemble_from_distances(std::span<const int> part_cycle, const DistanceVector& dv,
                                      int t);

/// Edges of a factor as a multigraph on the given ground set.
MultiGraph factor_graph(const PartialFactor& factor, int num_parts, int part_size);

/// (cycle union of `factor`) ⊗ K̄_s. Vertex (p, q) becomes (p, q*s + w), 0 <= w < s.
MultiGraph blow_up(const PartialFactor& factor, int s, int source_part_size);

}  // namespace cycleframe
