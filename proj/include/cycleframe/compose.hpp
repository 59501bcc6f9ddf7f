#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "cycleframe/graphs.hpp"

namespace cycleframe {

// Compositions of blocks into factorizations of product graphs. Every result
// carries its host graph; callers verify before use.

// ---- plumbing ---------------------------------------------------------------

using VertexMap = std::function<Vertex(Vertex)>;

PartialFactor relabel(const PartialFactor& f, const VertexMap& to, std::optional<int> hole);
/// Vertex-disjoint union of pieces with one cycle length.
PartialFactor unite(const std::vector<PartialFactor>& pieces, std::optional<int> hole);

/// Copies a factorization of a cycle-shaped host (part z = position z of the
/// cycle) onto the parts `parts`: (z, s) -> (parts[z], s).
std::vector<PartialFactor> lift_along(const std::vector<int>& parts, const Decomposition& block);

/// Same as lift_along for a cycle whose vertices already carry slots:
/// (z, o) -> (cycle[z].part, cycle[z].slot * s + o).
std::vector<PartialFactor> lift_blown(const std::vector<Vertex>& cycle, int s,
                                      const Decomposition& block);

/// Factors of (coarse host) ⊗ K̄_s ⊕ m copies of the fill host, where slot q*s + o
/// of the result is offset o inside block q. Each coarse factor yields s
/// factors (Hamilton cycles of C_L ⊗ K̄_s per cycle); each fill factor is copied
/// into all m blocks and merged.
Decomposition blow_and_fill(const Decomposition& coarse, int s, const Decomposition& fill, int m,
                            std::shared_ptr<const MultiGraph> host);

/// Extends partial factorizations on K_{r+1} x K_t to K_{rx+1} x K_t (r = 0 mod 4,
/// x >= 3). `near_block` lives on K_{r+1} x K_t with part r at infinity;
/// `cycle_block` factors C_r x K_t into (t - 1) factors with the same cycle length.
Decomposition frame_factorization(int r, int x, int t, const Decomposition& near_block,
                                  const Decomposition& cycle_block);

// ---- product constructions ------------------------------------------------------

/// (k + 1)(t - 1)/2 partial C_k-factors of K_{k+1} x K_t, t odd: each zigzag
/// near-cycle is threaded with distances alternating r and t - r.
Decomposition partial_ck_factorization_kplus1_times_t(int k, int t);

/// t - 1 Hamilton C_{kt}-factors of C_k x K_t, t odd. Factors come in pairs
/// (G_j, H_j), one pair per Walecki Hamilton cycle of K_t.
Decomposition ckt_factorization_cycle_times_t(int k, int t);

enum class LiftReading {
  Signed,   // per-pair sign bits, checked transversals (default)
  Literal,  // G_{i,j} joined with H_j on the rim cycle; overlaps, kept for comparison
};

/// (k + 1)(t - 1)/2 partial C_{kt}-factors of K_{k+1} x K_t, t odd.
Decomposition partial_ckt_factorization_kplus1_times_t(int k, int t,
                                                       LiftReading reading = LiftReading::Signed);

/// ky - 1 C_k-factors of K_3 x K_{ky}, k even >= 6 (k = 6 needs y odd).
Decomposition ck_factorization_k3_times_kky(int k, int y);

/// s - 1 C_{kt}-factors of C_k x K_s, k even, t >= 3, s = 0 mod 2t.
Decomposition ckt_factorization_cycle_times_s(int k, int t, int s);

/// sy - 1 C_{rs}-factors of C_r x K_{sy}, s even >= 4: (C_r x K_y) ⊗ K̄_s plus y
/// copies of C_r x K_s.
Decomposition blown_cycle_factorization(int r, int s, int y);

/// Hamilton cycles of K_n, n odd, as vertex sequences (Walecki zigzags).
std::vector<std::vector<int>> odd_walecki_cycles(int n);

}  // namespace cycleframe
