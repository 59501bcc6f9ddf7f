#include "cycleframe/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cycleframe {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterDomain: return "ParameterDomain";
    case ErrorKind::DegenerateCycle: return "DegenerateCycle";
    case ErrorKind::ExceptionalCase: return "ExceptionalCase";
    case ErrorKind::UnsupportedBlock: return "UnsupportedBlock";
    case ErrorKind::ConstructionBug: return "ConstructionBug";
  }
  return "Unknown";
}

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.part) + "," + std::to_string(v.slot) + ")";
}

VertexPair normalized(Vertex a, Vertex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::TensorComplete: return "TensorComplete";
    case GraphKind::LexicographicBlown: return "LexicographicBlown";
    case GraphKind::CompleteSimple: return "CompleteSimple";
    case GraphKind::CompleteDoubled: return "CompleteDoubled";
    case GraphKind::Custom: return "Custom";
  }
  return "Custom";
}

// ---- MultiGraph -------------------------------------------------------------

MultiGraph::MultiGraph(int num_parts, int part_size, GraphKind kind)
    : num_parts_(num_parts), part_size_(part_size), kind_(kind) {
  require(num_parts >= 1 && part_size >= 1, "graph needs at least one part of positive size");
}

bool MultiGraph::contains(Vertex v) const {
  return v.part >= 0 && v.part < num_parts_ && v.slot >= 0 && v.slot < part_size_;
}

void MultiGraph::add_edge(Vertex a, Vertex b, int multiplicity) {
  require(contains(a) && contains(b), "edge endpoint outside the ground set");
  require(a != b, "loops are not allowed");
  require(multiplicity >= 1, "edge multiplicity must be positive");
  edges_[normalized(a, b)] += multiplicity;
  edge_count_ += multiplicity;
}

int MultiGraph::multiplicity(Vertex a, Vertex b) const {
  auto it = edges_.find(normalized(a, b));
  return it == edges_.end() ? 0 : it->second;
}

int MultiGraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& [pair, mult] : edges_)
    if (pair.first == v || pair.second == v) d += mult;
  return d;
}

// ---- Cycle ------------------------------------------------------------------

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 2) fail(ErrorKind::DegenerateCycle, "cycle needs at least two vertices");
  {
    std::vector<Vertex> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::DegenerateCycle, "cycle repeats vertex " +
                                           to_string(*std::adjacent_find(sorted.begin(),
                                                                         sorted.end())));
  }
  const auto start = static_cast<std::size_t>(
      std::min_element(vertices_.begin(), vertices_.end()) - vertices_.begin());
  std::vector<Vertex> forward(n), backward(n);
  for (std::size_t i = 0; i < n; ++i) {
    forward[i] = vertices_[(start + i) % n];
    backward[i] = vertices_[(start + n - i) % n];
  }
  vertices_ = std::min(forward, backward);
}

std::vector<VertexPair> Cycle::edges() const {
  const std::size_t n = vertices_.size();
  if (n == 2) return {normalized(vertices_[0], vertices_[1])};
  std::vector<VertexPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(normalized(vertices_[i], vertices_[(i + 1) % n]));
  return out;
}

// ---- PartialFactor / Decomposition -------------------------------------------

std::size_t PartialFactor::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.length();
  return n;
}

void PartialFactor::normalize() { std::sort(cycles.begin(), cycles.end()); }

PartialFactor merge(const PartialFactor& a, const PartialFactor& b, std::optional<int> hole) {
  require(a.cycle_length == b.cycle_length || a.cycles.empty() || b.cycles.empty(),
          "merged factors must share a cycle length");
  PartialFactor out;
  out.hole = hole;
  out.cycle_length = a.cycles.empty() ? b.cycle_length : a.cycle_length;
  out.cycles = a.cycles;
  out.cycles.insert(out.cycles.end(), b.cycles.begin(), b.cycles.end());
  out.normalize();
  return out;
}

void Decomposition::add(PartialFactor factor, std::string tag) {
  factor.normalize();
  factors.push_back(std::move(factor));
  provenance.push_back(std::move(tag));
}

void Decomposition::append(const Decomposition& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  provenance.insert(provenance.end(), other.provenance.begin(), other.provenance.end());
}

int DistanceVector::sum_mod(int t) const {
  long long s = 0;
  for (int d : distances) s += d;
  return static_cast<int>(((s % t) + t) % t);
}

// ---- generators ---------------------------------------------------------------

MultiGraph tensor_complete(int u, int g, int lambda) {
  require(u >= 2 && g >= 2 && lambda >= 1, "tensor_complete needs u >= 2, g >= 2, lambda >= 1");
  MultiGraph out(u, g, GraphKind::TensorComplete);
  for (int p1 = 0; p1 < u; ++p1)
    for (int p2 = p1 + 1; p2 < u; ++p2)
      for (int s1 = 0; s1 < g; ++s1)
        for (int s2 = 0; s2 < g; ++s2)
          if (s1 != s2) out.add_edge({p1, s1}, {p2, s2}, lambda);
  return out;
}

MultiGraph complete_multipartite(int u, int g, int lambda) {
  require(u >= 2 && g >= 1 && lambda >= 1, "complete_multipartite needs u >= 2, g >= 1");
  MultiGraph out(u, g, GraphKind::LexicographicBlown);
  for (int p1 = 0; p1 < u; ++p1)
    for (int p2 = p1 + 1; p2 < u; ++p2)
      for (int s1 = 0; s1 < g; ++s1)
        for (int s2 = 0; s2 < g; ++s2) out.add_edge({p1, s1}, {p2, s2}, lambda);
  return out;
}

MultiGraph complete_graph(int n, int lambda) {
  require(n >= 1 && lambda >= 1, "complete_graph needs n >= 1, lambda >= 1");
  MultiGraph out(n, 1, lambda == 1 ? GraphKind::CompleteSimple : GraphKind::CompleteDoubled);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.add_edge({a, 0}, {b, 0}, lambda);
  return out;
}

MultiGraph cycle_times_complete(int k, int m) {
  require(k >= 3 && m >= 2, "C_k x K_m needs k >= 3, m >= 2");
  MultiGraph out(k, m);
  for (int i = 0; i < k; ++i)
    for (int s1 = 0; s1 < m; ++s1)
      for (int s2 = 0; s2 < m; ++s2)
        if (s1 != s2) out.add_edge({i, s1}, {(i + 1) % k, s2});
  return out;
}

MultiGraph cycle_lex_empty(int m, int n) {
  require(m >= 3 && n >= 1, "C_m ⊗ K̄_n needs m >= 3, n >= 1");
  MultiGraph out(m, n, GraphKind::LexicographicBlown);
  for (int i = 0; i < m; ++i)
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2) out.add_edge({i, s1}, {(i + 1) % m, s2});
  return out;
}

bool mcf_identity_check(int u, int g, int lambda) {
  require(u >= 2 && g >= 2 && lambda >= 1, "mcf_identity_check needs u >= 2, g >= 2");
  MultiGraph blown = complete_multipartite(u, g, lambda);
  std::map<VertexPair, int> residual = blown.edges();
  for (int s = 0; s < g; ++s)
    for (int p1 = 0; p1 < u; ++p1)
      for (int p2 = p1 + 1; p2 < u; ++p2) {
        auto it = residual.find(normalized({p1, s}, {p2, s}));
        if (it == residual.end() || it->second < lambda) return false;
        it->second -= lambda;
        if (it->second == 0) residual.erase(it);
      }
  return residual == tensor_complete(u, g, lambda).edges();
}

std::vector<VertexPair> distance_one_factor(int part_a, int part_b, int i, int t) {
  require(t >= 1 && i >= 0 && i < t, "distance must lie in [0, t)");
  require(part_a != part_b, "distance factor needs two distinct parts");
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j) out.push_back(normalized({part_a, j}, {part_b, (j + i) % t}));
  return out;
}

std::vector<std::vector<std::pair<int, int>>> trace_distance_cycles(const DistanceVector& dv,
                                                                    int t) {
  const int r = static_cast<int>(dv.size());
  require(r >= 1 && t >= 1, "distance vector must be non-empty");
  for (int d : dv.distances) require(d >= 0 && d < t, "distance out of range");
  std::vector<std::vector<std::pair<int, int>>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(t), false);  // residues at position 0
  for (int z0 = 0; z0 < t; ++z0) {
    if (seen[static_cast<std::size_t>(z0)]) continue;
    std::vector<std::pair<int, int>> cycle;
    int z = z0;
    do {
      seen[static_cast<std::size_t>(z)] = true;
      for (int j = 0; j < r; ++j) {
        cycle.emplace_back(j, z);
        z = (z + dv.distances[static_cast<std::size_t>(j)]) % t;
      }
    } while (z != z0);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

PartialFactor assemble_from_distances(std::span<const int> part_cycle, const DistanceVector& dv,
                                      int t) {
  require(part_cycle.size() == dv.size(), "part cycle and distance vector lengths differ");
  PartialFactor out;
  for (const auto& local : trace_distance_cycles(dv, t)) {
    if (local.size() < 3)
      fail(ErrorKind::DegenerateCycle,
           "distance choice closes after " + std::to_string(local.size()) + " steps");
    std::vector<Vertex> vs;
    vs.reserve(local.size());
    for (auto [pos, z] : local) vs.push_back({part_cycle[static_cast<std::size_t>(pos)], z});
    out.cycles.emplace_back(std::move(vs));
    out.cycle_length = static_cast<int>(local.size());
  }
  out.normalize();
  return out;
}

MultiGraph factor_graph(const PartialFactor& factor, int num_parts, int part_size) {
  MultiGraph out(num_parts, part_size);
  for (const auto& c : factor.cycles)
    for (const auto& [a, b] : c.edges()) out.add_edge(a, b);
  return out;
}

MultiGraph blow_up(const PartialFactor& factor, int s, int source_part_size) {
  require(s >= 1, "blow-up factor must be positive");
  int num_parts = 1;
  for (const auto& c : factor.cycles)
    for (const auto& v : c.vertices()) num_parts = std::max(num_parts, v.part + 1);
  MultiGraph out(num_parts, source_part_size * s, GraphKind::LexicographicBlown);
  for (const auto& c : factor.cycles)
    for (const auto& [a, b] : c.edges())
      for (int w1 = 0; w1 < s; ++w1)
        for (int w2 = 0; w2 < s; ++w2)
          out.add_edge({a.part, a.slot * s + w1}, {b.part, b.slot * s + w2});
  return out;
}

}  // namespace cycleframe
