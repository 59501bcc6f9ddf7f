#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cycleframe/graphs.hpp"

namespace cycleframe {

// Elementary factorizations used by the compositions. Vertices of a complete
// graph K_n are parts of size 1: vertex i is (i, 0).

enum class BlockFamily {
  NearOneFactorization,    // (u)        K_u, u near-1-factors
  NearCkFactorKu2,         // (k, u)     K_u(2), near C_k-factors, u = 1 mod k
  CkFactorKu_lambda,       // (m, u)     K_u(2), C_m-factors, u = 0 mod m, m even
  NearCmFactorKms1_2,      // (m, s)     K_{ms+1}(2), near C_m-factors
  CkFactorKmn,             // (n, kk)    K_{n,n}, C_kk-factors
  HamDecompCoddxK,         // (m, n)     C_m x K_n Hamilton cycles, m odd
  HamDecompCevenxK,        // (m, n)     C_m x K_n Hamilton cycles, m even
  HamDecompCxKbar,         // (m, n)     C_m ⊗ K̄_n Hamilton cycles
  CkFactorCkxKm,           // (kk, m[, n]) C_kk x K_m, C_{kk n}-factors, n | m
  CubicTimesK3,            // (k)        Walecki cubic remainder x K_3
  CtFactorKttt,            // (t)        K_{t,t,t}, C_t-factors
  PartialOneFactorKuKbar,  // (u, g)     K_u ⊗ K̄_g, partial 1-factors
  WaleckiSplit,            // (k)
  ResolvableCsKg,          // (s, g)     K_g, C_s-factors, s odd, g = s mod 2s
};

const char* to_string(BlockFamily f);

struct BlockSpec {
  BlockFamily family;
  std::vector<int> params;

  std::string key() const;  // e.g. "CtFactorKttt:6"
};

enum class Strategy { Explicit, Search, Cached };

const char* to_string(Strategy s);

struct BlockResult {
  Decomposition decomposition;
  Strategy strategy = Strategy::Explicit;
};

/// Resolves any block: explicit construction when one exists, otherwise a
/// bounded search whose result is cached on disk. The result always passes
/// verify_decomposition against the family's host graph.
BlockResult provide_block(const BlockSpec& spec);

/// Directory for search results: $CYCLEFRAME_CACHE, default ".cycleframe-cache".
std::filesystem::path block_cache_dir();
/// Node budget for block searches (default kDefaultNodeBudget).
void set_block_search_budget(std::uint64_t nodes);
/// Disable reads and writes of the on-disk cache (tests).
void set_block_cache_enabled(bool enabled);

// ---- families as plain functions ---------------------------------------------

Decomposition near_one_factorization(int u);
/// near C_k-factors of K_{k+1}(2); vertex k is the point at infinity.
Decomposition near_ck_factorization_kplus1_doubled(int k);
/// near C_{2k}-factors of K_u(2), u = 1 mod 2k; factor i misses vertex i.
Decomposition near_c2k_factorization_u2(int k, int u);
Decomposition near_cm_factorization_ms1_doubled(int m, int s);
/// C_{2m}-factors of K_u(2), u = 0 mod 2m.
Decomposition ck_factorization_complete_doubled(int m, int u);
/// C_kk-factors of K_{n,n} (m = n); parts 0 and 1.
Decomposition ck_factorization_bipartite(int m, int n, int kk);
Decomposition ck_factorization_cycle_times_complete(int kk, int m);
/// C_{kk n}-factors of C_kk x K_m for n | m (m - 1 factors).
Decomposition cycle_times_complete_factorization(int kk, int m, int n);
/// (g - 1) / 2 C_s-factors of K_g, s odd and g = s mod 2s.
Decomposition cs_factorization_complete(int s, int g);
/// The zigzag near-cycles G_0..G_{k-1}, G_inf of K_{k+1}(2) in written order
/// (vertex k is infinity). G_i misses i + k/2, G_inf misses infinity.
std::vector<std::vector<int>> kplus1_near_cycles(int k);
int kplus1_near_hole(int k, int i);
Decomposition hamilton_decomp_cycle_lex_empty(int m, int n);
Decomposition hamilton_decomp_cycle_times_complete(int m, int n);
Decomposition ct_factorization_tripartite(int t);
/// Factors with hole i perfectly match every part except i; g factors per hole.
Decomposition partial_one_factorization_multipartite(int u, int g);

struct WaleckiParts {
  std::vector<Cycle> hamilton;  // k/2 - 2 Hamilton cycles of K_k
  Cycle last;                   // the remaining Walecki Hamilton cycle
  std::vector<VertexPair> matching;
  MultiGraph cubic;             // last + matching
};

WaleckiParts walecki_split(int k);
/// Three C_k-factors of G x K_3, G the Walecki cubic remainder on k vertices.
Decomposition cubic_times_k3_factorization(int k);

}  // namespace cycleframe
