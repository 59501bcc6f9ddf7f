#include "cycleframe/blocks.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cycleframe/io.hpp"
#include "cycleframe/search.hpp"
#include "cycleframe/verify.hpp"

namespace cycleframe {

const char* to_string(BlockFamily f) {
  switch (f) {
    case BlockFamily::NearOneFactorization: return "NearOneFactorization";
    case BlockFamily::NearCkFactorKu2: return "NearCkFactorKu2";
    case BlockFamily::CkFactorKu_lambda: return "CkFactorKu_lambda";
    case BlockFamily::NearCmFactorKms1_2: return "NearCmFactorKms1_2";
    case BlockFamily::CkFactorKmn: return "CkFactorKmn";
    case BlockFamily::HamDecompCoddxK: return "HamDecompCoddxK";
    case BlockFamily::HamDecompCevenxK: return "HamDecompCevenxK";
    case BlockFamily::HamDecompCxKbar: return "HamDecompCxKbar";
    case BlockFamily::CkFactorCkxKm: return "CkFactorCkxKm";
    case BlockFamily::CubicTimesK3: return "CubicTimesK3";
    case BlockFamily::CtFactorKttt: return "CtFactorKttt";
    case BlockFamily::PartialOneFactorKuKbar: return "PartialOneFactorKuKbar";
    case BlockFamily::WaleckiSplit: return "WaleckiSplit";
    case BlockFamily::ResolvableCsKg: return "ResolvableCsKg";
  }
  return "Unknown";
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Explicit: return "Explicit";
    case Strategy::Search: return "Search";
    case Strategy::Cached: return "Cached";
  }
  return "Unknown";
}

std::string BlockSpec::key() const {
  std::string out = to_string(family);
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

namespace {

std::atomic<std::uint64_t> g_budget{kDefaultNodeBudget};
std::atomic<bool> g_cache_enabled{true};
std::mutex g_cache_mutex;

int mod(int x, int n) { return ((x % n) + n) % n; }

Vertex pt(int i) { return {i, 0}; }

Cycle point_cycle(const std::vector<int>& ids) {
  std::vector<Vertex> vs;
  vs.reserve(ids.size());
  for (int i : ids) vs.push_back(pt(i));
  return Cycle(std::move(vs));
}

PartialFactor point_factor(std::optional<int> hole, const std::vector<std::vector<int>>& cycles,
                           int length) {
  PartialFactor f;
  f.hole = hole;
  f.cycle_length = length;
  for (const auto& c : cycles) f.cycles.push_back(point_cycle(c));
  f.normalize();
  return f;
}

std::shared_ptr<const MultiGraph> share(MultiGraph g) {
  return std::make_shared<const MultiGraph>(std::move(g));
}

Decomposition make(std::shared_ptr<const MultiGraph> host, std::vector<PartialFactor> factors,
                   const std::string& tag) {
  Decomposition d;
  d.host = std::move(host);
  for (auto& f : factors) d.add(std::move(f), tag);
  return d;
}

// ---- cache ------------------------------------------------------------------

std::string hash_name(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str() + ".json";
}

std::optional<std::vector<PartialFactor>> cache_load(const BlockSpec& spec) {
  if (!g_cache_enabled) return std::nullopt;
  std::lock_guard lock(g_cache_mutex);
  const auto path = block_cache_dir() / hash_name(spec.key());
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("spec").get<std::string>() != spec.key()) return std::nullopt;
    return factors_from_json(j.at("factors"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const BlockSpec& spec, const Decomposition& d) {
  if (!g_cache_enabled) return;
  std::lock_guard lock(g_cache_mutex);
  std::error_code ec;
  const auto dir = block_cache_dir();
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::ordered_json j;
  j["spec"] = spec.key();
  j["factors"] = factors_to_json(d);
  const auto final_path = dir / hash_name(spec.key());
  std::ostringstream tmp_name;
  tmp_name << final_path.filename().string() << ".tmp" << std::this_thread::get_id();
  const auto tmp = dir / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << canonical_dump(j);
    if (!out) return;
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

// Explicit builders set strategy to Explicit; searches go through here.
Decomposition cached_search(const BlockSpec& spec, std::shared_ptr<const MultiGraph> host,
                            const std::function<std::optional<Decomposition>()>& run,
                            Strategy& strategy) {
  if (auto factors = cache_load(spec)) {
    Decomposition d;
    d.host = host;
    for (auto& f : *factors) d.add(std::move(f), "cached search");
    if (verify_decomposition(d)) {
      strategy = Strategy::Cached;
      return d;
    }
  }
  auto found = run();
  if (!found)
    fail(ErrorKind::UnsupportedBlock,
         "no construction found for " + spec.key() + " within the search budget");
  found->host = host;
  strategy = Strategy::Search;
  if (verify_decomposition(*found)) cache_store(spec, *found);
  return *found;
}

std::vector<std::optional<int>> each_part_once(int n) {
  std::vector<std::optional<int>> holes;
  for (int i = 0; i < n; ++i) holes.emplace_back(i);
  return holes;
}

std::optional<Decomposition> exact_cover(std::shared_ptr<const MultiGraph> host, int length,
                                         const std::vector<std::optional<int>>& holes) {
  return search_decomposition(std::move(host), length, holes, g_budget.load());
}

// Develops a base over Z_n (point n fixed) into n factors; factor i misses
// `hole_of(i)` when given.
std::vector<PartialFactor> develop(const std::vector<std::vector<int>>& base, int n, int length,
                                   const std::function<std::optional<int>(int)>& hole_of) {
  std::vector<PartialFactor> out;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> cycles;
    for (const auto& c : base) {
      std::vector<int> shifted;
      for (int x : c) shifted.push_back(x == n ? n : mod(x + i, n));
      cycles.push_back(std::move(shifted));
    }
    out.push_back(point_factor(hole_of(i), cycles, length));
  }
  return out;
}

std::optional<Decomposition> difference_route(std::shared_ptr<const MultiGraph> host,
                                              const DifferenceProblem& problem,
                                              const std::string& tag,
                                              const std::function<std::optional<int>(int)>& hole_of) {
  auto base = find_difference_base(problem, g_budget.load());
  if (!base) return std::nullopt;
  return make(std::move(host), develop(*base, problem.modulus, problem.cycle_length, hole_of), tag);
}

std::optional<Decomposition> transversal_route(std::shared_ptr<const MultiGraph> host,
                                               int length, int modulus, std::vector<int> values,
                                               std::function<bool(int)> accept,
                                               const std::string& tag) {
  TransversalProblem problem{length, modulus, std::move(values), std::move(accept), {}};
  auto vectors = find_distance_transversal(problem, g_budget.load());
  if (!vectors) return std::nullopt;
  std::vector<int> parts(static_cast<std::size_t>(length));
  std::iota(parts.begin(), parts.end(), 0);
  std::vector<PartialFactor> factors;
  for (const auto& dv : *vectors) factors.push_back(assemble_from_distances(parts, dv, modulus));
  return make(std::move(host), std::move(factors), tag);
}

std::vector<int> range_values(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// ---- families -------------------------------------------------------------------

Decomposition build_near_one(int u, Strategy& s) {
  require(u >= 3 && u % 2 == 1, "near 1-factorization needs odd u >= 3");
  std::vector<PartialFactor> factors;
  for (int m = 0; m < u; ++m) {
    std::vector<std::vector<int>> edges;
    for (int j = 1; j <= (u - 1) / 2; ++j) edges.push_back({mod(m + j, u), mod(m - j, u)});
    factors.push_back(point_factor(m, edges, 2));
  }
  s = Strategy::Explicit;
  return make(share(complete_graph(u, 1)), std::move(factors), "rotational near 1-factorization");
}

Decomposition build_kplus1_doubled(int k, Strategy& s) {
  const auto cycles = kplus1_near_cycles(k);
  std::vector<PartialFactor> factors;
  for (int i = 0; i <= k; ++i)
    factors.push_back(point_factor(kplus1_near_hole(k, i), {cycles[static_cast<std::size_t>(i)]}, k));
  s = Strategy::Explicit;
  return make(share(complete_graph(k + 1, 2)), std::move(factors), "zigzag near C_k-factors");
}

Decomposition build_near_c2k(const BlockSpec& spec, Strategy& s) {
  const int k = spec.params[0], u = spec.params[1];
  require(k >= 2 && u >= 2 * k + 1 && u % (2 * k) == 1,
          "near C_2k-factorization of K_u(2) needs u = 1 mod 2k");
  if (u == 2 * k + 1) return build_kplus1_doubled(2 * k, s);
  auto host = share(complete_graph(u, 2));
  return cached_search(spec, host, [&] {
    return difference_route(host, {u, false, 2 * k, 2, {0}}, "rotational near cycle factors",
                            [](int i) { return i; });
  }, s);
}

Decomposition build_near_cm(const BlockSpec& spec, Strategy& s) {
  const int m = spec.params[0], sx = spec.params[1];
  require(m >= 3 && m % 2 == 1 && sx >= 0, "near C_m-factorization needs odd m >= 3");
  const int n = m * sx + 1;
  auto host = share(complete_graph(n, 2));
  if (sx == 0) {
    s = Strategy::Explicit;
    return make(host, {}, "empty");
  }
  if (m == 3 && sx == 1) {
    std::vector<PartialFactor> factors;
    for (int v = 0; v < 4; ++v) {
      std::vector<int> tri;
      for (int w = 0; w < 4; ++w)
        if (w != v) tri.push_back(w);
      factors.push_back(point_factor(v, {tri}, 3));
    }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "K_4 triangles");
  }
  return cached_search(spec, host, [&]() -> std::optional<Decomposition> {
    if (n % 2 == 1)
      return difference_route(host, {n, false, m, 2, {0}}, "rotational near cycle factors",
                              [](int i) { return i; });
    return exact_cover(host, m, each_part_once(n));
  }, s);
}

Decomposition build_complete_doubled(const BlockSpec& spec, Strategy& s) {
  const int m = spec.params[0], u = spec.params[1];
  require(m >= 2 && u >= 2 * m && u % (2 * m) == 0, "C_2m-factorization of K_u(2) needs u = 0 mod 2m");
  auto host = share(complete_graph(u, 2));
  const int n = u - 1;
  if (2 * m == u) {
    std::vector<int> c{n};
    c.push_back(0);
    for (int a = 1; a <= (n - 1) / 2; ++a) {
      c.push_back(a);
      c.push_back(mod(-a, n));
    }
    s = Strategy::Explicit;
    return make(host, develop({c}, n, u, [](int) { return std::nullopt; }),
                "zigzag Hamilton cycles");
  }
  return cached_search(spec, host, [&] {
    return difference_route(host, {n, true, 2 * m, 2, {}}, "rotational cycle factors",
                            [](int) { return std::nullopt; });
  }, s);
}

Decomposition build_bipartite(const BlockSpec& spec, Strategy& s) {
  const int n = spec.params[0], kk = spec.params[1];
  require(n >= 2 && kk >= 4 && kk % 2 == 0 && (2 * n) % kk == 0,
          "C_kk-factorization of K_{n,n} needs even kk >= 4 dividing 2n");
  if (n == 6 && kk == 6) fail(ErrorKind::ExceptionalCase, "K_{6,6} has no C_6-factorization");
  auto host = share(complete_multipartite(2, n, 1));
  const int d = 2 * n / kk, q = kk / 2;
  if (q % 2 == 0) {
    // Pair a with a + d inside each residue class mod d; F_a + F_{a+d} closes after kk steps.
    std::vector<PartialFactor> factors;
    const std::vector<int> parts{0, 1};
    for (int c = 0; c < d; ++c)
      for (int j = 0; j < q; j += 2) {
        const int a = c + j * d, b = c + (j + 1) * d;
        factors.push_back(assemble_from_distances(parts, DistanceVector{{a, mod(-b, n)}}, n));
      }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "paired distance factors");
  }
  return cached_search(spec, host, [&] {
    return exact_cover(host, kk, std::vector<std::optional<int>>(static_cast<std::size_t>(n / 2)));
  }, s);
}

Decomposition build_cycle_times_complete(const BlockSpec& spec, Strategy& s) {
  const int kk = spec.params[0], m = spec.params[1];
  const int n = spec.params.size() > 2 ? spec.params[2] : 1;
  require(kk >= 3 && m >= 2, "C_kk x K_m needs kk >= 3, m >= 2");
  require(n >= 1 && m % n == 0, "C_{kk n}-factors need n | m");
  require(kk % 2 == 0 || m % 4 != 2, "odd kk needs m != 2 mod 4");
  auto host = share(cycle_times_complete(kk, m));
  std::vector<int> parts(static_cast<std::size_t>(kk));
  std::iota(parts.begin(), parts.end(), 0);
  if (n > 1) {
    // Sums with gcd(sum, m) = m / n thread each vector into cycles of length kk n.
    return cached_search(spec, host, [&] {
      auto d = transversal_route(host, kk, m, range_values(1, m),
                                 [m, n](int sum) { return std::gcd(sum, m) == m / n; },
                                 "distance vectors of order n");
      if (d || host->num_vertices() > 64) return d;
      return exact_cover(host, kk * n, std::vector<std::optional<int>>(static_cast<std::size_t>(m - 1)));
    }, s);
  }
  if (kk % 2 == 0 || std::gcd(kk - 1, m) == 1) {
    std::vector<PartialFactor> factors;
    for (int r = 1; r < m; ++r) {
      DistanceVector dv;
      for (int j = 0; j < kk; ++j) dv.distances.push_back(kk % 2 == 0 && j % 2 ? m - r : r);
      if (kk % 2 == 1) dv.distances.back() = mod(-(kk - 1) * r, m);
      factors.push_back(assemble_from_distances(parts, dv, m));
    }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "zero-sum distance vectors");
  }
  return cached_search(spec, host, [&] {
    auto d = transversal_route(host, kk, m, range_values(1, m), [](int sum) { return sum == 0; },
                               "zero-sum distance vectors");
    // Distance vectors can be ruled out by parity (e.g. C_5 x K_4); fall back to cycles.
    return d ? d : exact_cover(host, kk, std::vector<std::optional<int>>(static_cast<std::size_t>(m - 1)));
  }, s);
}

Decomposition build_lex_empty(const BlockSpec& spec, Strategy& s) {
  const int m = spec.params[0], n = spec.params[1];
  require(m >= 3 && n >= 1, "C_m ⊗ K̄_n needs m >= 3, n >= 1");
  auto host = share(cycle_lex_empty(m, n));
  std::vector<int> parts(static_cast<std::size_t>(m));
  std::iota(parts.begin(), parts.end(), 0);
  if (std::gcd(m - 1, n) == 1) {
    std::vector<PartialFactor> factors;
    for (int i = 0; i < n; ++i) {
      DistanceVector dv{std::vector<int>(static_cast<std::size_t>(m), i)};
      dv.distances.back() = mod(1 - (m - 1) * i, n);
      factors.push_back(assemble_from_distances(parts, dv, n));
    }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "unit-sum distance vectors");
  }
  return cached_search(spec, host, [&] {
    return transversal_route(host, m, n, range_values(0, n),
                             [n](int sum) { return std::gcd(sum, n) == 1; },
                             "unit-sum distance vectors");
  }, s);
}

Decomposition build_cycle_hamilton(const BlockSpec& spec, Strategy& s) {
  const int m = spec.params[0], n = spec.params[1];
  require(m >= 3 && n >= 2 && n % 2 == 0, "Hamilton decomposition of C_m x K_n needs even n");
  if (n == 2 && m % 2 == 0)
    fail(ErrorKind::UnsupportedBlock, "C_m x K_2 with m even is two disjoint cycles");
  auto host = share(cycle_times_complete(m, n));
  return cached_search(spec, host, [&] {
    auto d = transversal_route(host, m, n, range_values(1, n),
                               [n](int sum) { return std::gcd(sum, n) == 1; },
                               "unit-sum distance vectors");
    return d ? d : exact_cover(host, m * n, std::vector<std::optional<int>>(static_cast<std::size_t>(n - 1)));
  }, s);
}

Decomposition build_tripartite(const BlockSpec& spec, Strategy& s) {
  const int t = spec.params[0];
  if (t < 3) fail(ErrorKind::DegenerateCycle, "C_t-factors need t >= 3");
  auto host = share(complete_multipartite(3, t, 1));
  return cached_search(spec, host, [&] {
    return exact_cover(host, t, std::vector<std::optional<int>>(static_cast<std::size_t>(t)));
  }, s);
}

Decomposition build_partial_one(const BlockSpec& spec, Strategy& s) {
  const int u = spec.params[0], g = spec.params[1];
  require(u >= 3 && g >= 1 && (g * (u - 1)) % 2 == 0,
          "partial 1-factorization of K_u ⊗ K̄_g needs u >= 3 and g(u-1) even");
  require(u % 2 == 1 || g % 2 == 0, "hole-aligned partial 1-factors need u odd or g even");
  auto host = share(complete_multipartite(u, g, 1));
  if (u % 2 == 1) {
    // Near 1-factor of K_u missing m, each edge blown to the distance matching F_d.
    std::vector<PartialFactor> factors;
    for (int m = 0; m < u; ++m)
      for (int dd = 0; dd < g; ++dd) {
        PartialFactor f;
        f.hole = m;
        f.cycle_length = 2;
        for (int j = 1; j <= (u - 1) / 2; ++j) {
          const int a = mod(m + j, u), b = mod(m - j, u);
          for (int z = 0; z < g; ++z) f.cycles.emplace_back(std::vector<Vertex>{{a, z}, {b, (z + dd) % g}});
        }
        f.normalize();
        factors.push_back(std::move(f));
      }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "blown near 1-factors");
  }
  return cached_search(spec, host, [&] {
    std::vector<std::optional<int>> holes;
    for (int i = 0; i < u; ++i)
      for (int j = 0; j < g; ++j) holes.emplace_back(i);
    return exact_cover(host, 2, holes);
  }, s);
}

MultiGraph cubic_host(int k) {
  const WaleckiParts w = walecki_split(k);
  MultiGraph out(k, 3);
  for (const auto& [e, mult] : w.cubic.edges())
    for (int s1 = 0; s1 < 3; ++s1)
      for (int s2 = 0; s2 < 3; ++s2)
        if (s1 != s2) out.add_edge({e.first.part, s1}, {e.second.part, s2}, mult);
  return out;
}

Decomposition build_cubic(const BlockSpec& spec, Strategy& s) {
  const int k = spec.params[0];
  if (k == 4) fail(ErrorKind::ExceptionalCase, "G x K_3 is excluded at k = 4");
  require(k >= 6 && k % 2 == 0, "cubic remainder needs even k >= 6");
  auto host = share(cubic_host(k));
  return cached_search(spec, host, [&] {
    return exact_cover(host, k, std::vector<std::optional<int>>(3));
  }, s);
}

Decomposition build_walecki_as_decomposition(int k, Strategy& s) {
  const WaleckiParts w = walecki_split(k);
  std::vector<PartialFactor> factors;
  for (const auto& c : w.hamilton) {
    PartialFactor f;
    f.cycle_length = k;
    f.cycles.push_back(c);
    factors.push_back(std::move(f));
  }
  PartialFactor last;
  last.cycle_length = k;
  last.cycles.push_back(w.last);
  factors.push_back(std::move(last));
  PartialFactor match;
  match.cycle_length = 2;
  for (const auto& [a, b] : w.matching) match.cycles.emplace_back(std::vector<Vertex>{a, b});
  factors.push_back(std::move(match));
  s = Strategy::Explicit;
  return make(share(complete_graph(k, 1)), std::move(factors), "Walecki");
}

Decomposition build_resolvable(const BlockSpec& spec, Strategy& s) {
  const int cs = spec.params[0], g = spec.params[1];
  require(cs >= 3 && cs % 2 == 1 && g % (2 * cs) == cs, "C_s-factors of K_g need s odd, g = s mod 2s");
  auto host = share(complete_graph(g, 1));
  if (g == cs) {
    // Hamilton cycles of K_s: zigzags through Z_{s-1} closed at infinity.
    const int n = cs - 1, inf = cs - 1;
    std::vector<PartialFactor> factors;
    for (int j = 0; j < n / 2; ++j) {
      std::vector<int> c{inf, j};
      for (int a = 1; a < n / 2; ++a) {
        c.push_back(mod(j + a, n));
        c.push_back(mod(j - a, n));
      }
      c.push_back(mod(j + n / 2, n));
      factors.push_back(point_factor(std::nullopt, {c}, cs));
    }
    s = Strategy::Explicit;
    return make(host, std::move(factors), "Walecki Hamilton cycles");
  }
  return cached_search(spec, host, [&] {
    return exact_cover(host, cs, std::vector<std::optional<int>>(static_cast<std::size_t>((g - 1) / 2)));
  }, s);
}

BlockResult dispatch(const BlockSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t n) {
    require(p.size() == n, spec.key() + ": wrong number of parameters");
  };
  BlockResult r;
  switch (spec.family) {
    case BlockFamily::NearOneFactorization: need(1); r.decomposition = build_near_one(p[0], r.strategy); break;
    case BlockFamily::NearCkFactorKu2: need(2); r.decomposition = build_near_c2k(spec, r.strategy); break;
    case BlockFamily::CkFactorKu_lambda: need(2); r.decomposition = build_complete_doubled(spec, r.strategy); break;
    case BlockFamily::NearCmFactorKms1_2: need(2); r.decomposition = build_near_cm(spec, r.strategy); break;
    case BlockFamily::CkFactorKmn: need(2); r.decomposition = build_bipartite(spec, r.strategy); break;
    case BlockFamily::HamDecompCoddxK:
    case BlockFamily::HamDecompCevenxK: need(2); r.decomposition = build_cycle_hamilton(spec, r.strategy); break;
    case BlockFamily::HamDecompCxKbar: need(2); r.decomposition = build_lex_empty(spec, r.strategy); break;
    case BlockFamily::CkFactorCkxKm:
      require(p.size() == 2 || p.size() == 3, spec.key() + ": wrong number of parameters");
      r.decomposition = build_cycle_times_complete(spec, r.strategy); break;
    case BlockFamily::CubicTimesK3: need(1); r.decomposition = build_cubic(spec, r.strategy); break;
    case BlockFamily::CtFactorKttt: need(1); r.decomposition = build_tripartite(spec, r.strategy); break;
    case BlockFamily::PartialOneFactorKuKbar: need(2); r.decomposition = build_partial_one(spec, r.strategy); break;
    case BlockFamily::ResolvableCsKg: need(2); r.decomposition = build_resolvable(spec, r.strategy); break;
    case BlockFamily::WaleckiSplit: need(1); r.decomposition = build_walecki_as_decomposition(p[0], r.strategy); break;
  }
  return r;
}

}  // namespace

std::filesystem::path block_cache_dir() {
  if (const char* env = std::getenv("CYCLEFRAME_CACHE"); env && *env) return env;
  return ".cycleframe-cache";
}

void set_block_search_budget(std::uint64_t nodes) { g_budget = nodes; }
void set_block_cache_enabled(bool enabled) { g_cache_enabled = enabled; }

BlockResult provide_block(const BlockSpec& spec) {
  BlockResult r = dispatch(spec);
  if (auto report = verify_decomposition(r.decomposition); !report)
    fail(ErrorKind::ConstructionBug, spec.key() + " failed verification: " + report.describe());
  return r;
}

// ---- plain entry points -------------------------------------------------------------

Decomposition near_one_factorization(int u) {
  return provide_block({BlockFamily::NearOneFactorization, {u}}).decomposition;
}
Decomposition near_ck_factorization_kplus1_doubled(int k) {
  require(k >= 4 && k % 2 == 0, "near C_k-factorization of K_{k+1}(2) needs even k >= 4");
  return provide_block({BlockFamily::NearCkFactorKu2, {k / 2, k + 1}}).decomposition;
}
Decomposition near_c2k_factorization_u2(int k, int u) {
  return provide_block({BlockFamily::NearCkFactorKu2, {k, u}}).decomposition;
}
Decomposition near_cm_factorization_ms1_doubled(int m, int s) {
  return provide_block({BlockFamily::NearCmFactorKms1_2, {m, s}}).decomposition;
}
Decomposition ck_factorization_complete_doubled(int m, int u) {
  return provide_block({BlockFamily::CkFactorKu_lambda, {m, u}}).decomposition;
}
Decomposition ck_factorization_bipartite(int m, int n, int kk) {
  require(m == n, "only balanced K_{n,n} is supported");
  return provide_block({BlockFamily::CkFactorKmn, {n, kk}}).decomposition;
}
Decomposition ck_factorization_cycle_times_complete(int kk, int m) {
  return provide_block({BlockFamily::CkFactorCkxKm, {kk, m}}).decomposition;
}
Decomposition hamilton_decomp_cycle_lex_empty(int m, int n) {
  return provide_block({BlockFamily::HamDecompCxKbar, {m, n}}).decomposition;
}
Decomposition hamilton_decomp_cycle_times_complete(int m, int n) {
  const auto family = m % 2 ? BlockFamily::HamDecompCoddxK : BlockFamily::HamDecompCevenxK;
  return provide_block({family, {m, n}}).decomposition;
}
Decomposition ct_factorization_tripartite(int t) {
  return provide_block({BlockFamily::CtFactorKttt, {t}}).decomposition;
}
Decomposition partial_one_factorization_multipartite(int u, int g) {
  return provide_block({BlockFamily::PartialOneFactorKuKbar, {u, g}}).decomposition;
}
Decomposition cubic_times_k3_factorization(int k) {
  return provide_block({BlockFamily::CubicTimesK3, {k}}).decomposition;
}

Decomposition cycle_times_complete_factorization(int kk, int m, int n) {
  if (n == 1) return ck_factorization_cycle_times_complete(kk, m);
  return provide_block({BlockFamily::CkFactorCkxKm, {kk, m, n}}).decomposition;
}
Decomposition cs_factorization_complete(int s, int g) {
  return provide_block({BlockFamily::ResolvableCsKg, {s, g}}).decomposition;
}

std::vector<std::vector<int>> kplus1_near_cycles(int k) {
  require(k >= 4 && k % 2 == 0, "near C_k-factorization of K_{k+1}(2) needs even k >= 4");
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    std::vector<int> c{i};
    for (int a = 1; a <= k / 2 - 1; ++a) {
      c.push_back(mod(i + a, k));
      c.push_back(mod(i - a, k));
    }
    c.push_back(k);
    out.push_back(std::move(c));
  }
  std::vector<int> rim(static_cast<std::size_t>(k));
  std::iota(rim.begin(), rim.end(), 0);
  out.push_back(std::move(rim));
  return out;
}

int kplus1_near_hole(int k, int i) { return i == k ? k : mod(i + k / 2, k); }

WaleckiParts walecki_split(int k) {
  require(k >= 6 && k % 2 == 0, "Walecki split needs even k >= 6");
  const int n = k - 1, inf = k - 1, h = (k - 2) / 2;
  std::vector<Cycle> cycles;
  std::set<VertexPair> used;
  for (int j = 0; j < h; ++j) {
    std::vector<int> c{inf, j};
    for (int a = 1; a <= h; ++a) {
      c.push_back(mod(j + a, n));
      c.push_back(mod(j - a, n));
    }
    cycles.push_back(point_cycle(c));
    for (const auto& e : cycles.back().edges())
      if (!used.insert(e).second) fail(ErrorKind::ConstructionBug, "Walecki cycles overlap");
  }
  std::vector<VertexPair> matching;
  std::vector<int> deg(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!used.count(normalized(pt(a), pt(b)))) {
        matching.push_back(normalized(pt(a), pt(b)));
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
      }
  for (int d : deg)
    if (d != 1) fail(ErrorKind::ConstructionBug, "Walecki remainder is not a perfect matching");

  WaleckiParts out{{}, cycles.back(), matching, MultiGraph(k, 1)};
  cycles.pop_back();
  out.hamilton = std::move(cycles);
  for (const auto& [a, b] : out.last.edges()) out.cubic.add_edge(a, b);
  for (const auto& [a, b] : out.matching) out.cubic.add_edge(a, b);
  return out;
}

}  // namespace cycleframe
