#include "cycleframe/compose.hpp"

#include <map>
#include <numeric>
#include <queue>

#include "cycleframe/blocks.hpp"
#include "cycleframe/search.hpp"

namespace cycleframe {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

std::shared_ptr<const MultiGraph> share(MultiGraph g) {
  return std::make_shared<const MultiGraph>(std::move(g));
}

std::vector<int> parts_of(const Cycle& c) {
  std::vector<int> out;
  for (const auto& v : c.vertices()) out.push_back(v.part);
  return out;
}

int orientation(int a, int b) { return a < b ? 1 : -1; }

// Where each unordered part pair sits on a list of part cycles: two
// occurrences per pair for the doubled graphs used here.
struct Occurrence {
  std::size_t cycle;
  std::size_t edge;
};

std::map<std::pair<int, int>, std::vector<Occurrence>> pair_occurrences(
    const std::vector<std::vector<int>>& cycles) {
  std::map<std::pair<int, int>, std::vector<Occurrence>> out;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cy = cycles[c];
    for (std::size_t e = 0; e < cy.size(); ++e) {
      const int a = cy[e], b = cy[(e + 1) % cy.size()];
      out[{std::min(a, b), std::max(a, b)}].push_back({c, e});
    }
  }
  for (const auto& [pair, occ] : out)
    if (occ.size() != 2) fail(ErrorKind::ConstructionBug, "near-cycles do not double cover pairs");
  return out;
}

}  // namespace

// ---- plumbing ---------------------------------------------------------------

PartialFactor relabel(const PartialFactor& f, const VertexMap& to, std::optional<int> hole) {
  PartialFactor out;
  out.hole = hole;
  out.cycle_length = f.cycle_length;
  for (const auto& c : f.cycles) {
    std::vector<Vertex> vs;
    vs.reserve(c.length());
    for (const auto& v : c.vertices()) vs.push_back(to(v));
    out.cycles.emplace_back(std::move(vs));
  }
  out.normalize();
  return out;
}

PartialFactor unite(const std::vector<PartialFactor>& pieces, std::optional<int> hole) {
  PartialFactor out;
  out.hole = hole;
  for (const auto& p : pieces) out = merge(out, p, hole);
  return out;
}

std::vector<PartialFactor> lift_along(const std::vector<int>& parts, const Decomposition& block) {
  std::vector<PartialFactor> out;
  for (const auto& f : block.factors)
    out.push_back(relabel(f, [&](Vertex v) {
      return Vertex{parts[static_cast<std::size_t>(v.part)], v.slot};
    }, std::nullopt));
  return out;
}

std::vector<PartialFactor> lift_blown(const std::vector<Vertex>& cycle, int s,
                                      const Decomposition& block) {
  std::vector<PartialFactor> out;
  for (const auto& f : block.factors)
    out.push_back(relabel(f, [&](Vertex v) {
      const Vertex base = cycle[static_cast<std::size_t>(v.part)];
      return Vertex{base.part, base.slot * s + v.slot};
    }, std::nullopt));
  return out;
}

Decomposition blow_and_fill(const Decomposition& coarse, int s, const Decomposition& fill, int m,
                            std::shared_ptr<const MultiGraph> host) {
  Decomposition d;
  d.host = std::move(host);
  for (const auto& f : coarse.factors) {
    std::vector<std::vector<PartialFactor>> per_index(static_cast<std::size_t>(s));
    for (const auto& c : f.cycles) {
      const auto ham = hamilton_decomp_cycle_lex_empty(static_cast<int>(c.length()), s);
      auto lifted = lift_blown(c.vertices(), s, ham);
      for (std::size_t l = 0; l < lifted.size(); ++l) per_index[l].push_back(std::move(lifted[l]));
    }
    for (const auto& pieces : per_index) d.add(unite(pieces, f.hole), "blown cycles");
  }
  for (const auto& f : fill.factors) {
    std::vector<PartialFactor> pieces;
    for (int q = 0; q < m; ++q)
      pieces.push_back(relabel(f, [&](Vertex v) { return Vertex{v.part, q * s + v.slot}; }, f.hole));
    d.add(unite(pieces, f.hole), "hole copies");
  }
  return d;
}

Decomposition frame_factorization(int r, int x, int t, const Decomposition& near_block,
                                  const Decomposition& cycle_block) {
  require(r >= 4 && r % 4 == 0, "frame needs r = 0 mod 4");
  require(x >= 3, "frame needs x >= 3");
  const int u = r * x + 1, inf = u - 1, half = r / 2;
  Decomposition d;
  d.host = share(tensor_complete(u, t, 1));

  const auto matchings = partial_one_factorization_multipartite(x, 2);
  const auto bip = ck_factorization_bipartite(half, half, r);
  // K_x ⊗ K̄_2 vertex (i, w) stands for the parts i*r + w*half + o, o < half.
  auto part_of = [&](Vertex v, int o) { return v.part * r + v.slot * half + o; };

  std::vector<std::vector<PartialFactor>> inf_pieces;
  for (int i = 0; i < x; ++i) {
    // Factors spanning everything outside X_i and infinity.
    std::vector<PartialFactor> outer;
    for (const auto& m : matchings.factors) {
      if (m.hole != i) continue;
      for (const auto& bf : bip.factors) {
        // One C_r-factor of K_u minus X_i and infinity, expanded by cycle_block.
        std::vector<std::vector<PartialFactor>> per_index(cycle_block.factors.size());
        for (const auto& edge : m.cycles) {
          const Vertex a = edge.vertices()[0], b = edge.vertices()[1];
          for (const auto& c : bf.cycles) {
            std::vector<int> parts;
            for (const auto& v : c.vertices()) parts.push_back(part_of(v.part == 0 ? a : b, v.slot));
            auto lifted = lift_along(parts, cycle_block);
            for (std::size_t l = 0; l < lifted.size(); ++l) per_index[l].push_back(std::move(lifted[l]));
          }
        }
        for (const auto& pieces : per_index) outer.push_back(unite(pieces, std::nullopt));
      }
    }
    auto inner_part = [&](int p) { return p == r ? inf : i * r + p; };
    std::size_t next = 0;
    std::size_t inf_index = 0;
    for (const auto& f : near_block.factors) {
      const auto mapped = relabel(f, [&](Vertex v) { return Vertex{inner_part(v.part), v.slot}; },
                                  std::nullopt);
      if (f.hole == r) {
        if (inf_pieces.size() <= inf_index) inf_pieces.resize(inf_index + 1);
        inf_pieces[inf_index++].push_back(mapped);
        continue;
      }
      if (next >= outer.size())
        fail(ErrorKind::ConstructionBug, "frame: more inner factors than outer factors");
      d.add(unite({mapped, outer[next++]}, inner_part(*f.hole)), "frame: inner with outer");
    }
    if (next != outer.size())
      fail(ErrorKind::ConstructionBug, "frame: outer factors left unpaired");
  }
  for (const auto& pieces : inf_pieces) d.add(unite(pieces, inf), "frame: infinity merged");
  return d;
}

std::vector<std::vector<int>> odd_walecki_cycles(int n) {
  require(n >= 3 && n % 2 == 1, "Walecki cycles of K_n need odd n >= 3");
  const int z = n - 1, inf = n - 1;
  std::vector<std::vector<int>> out;
  for (int j = 0; j < z / 2; ++j) {
    std::vector<int> c{inf, j};
    for (int a = 1; a < z / 2; ++a) {
      c.push_back(mod(j + a, z));
      c.push_back(mod(j - a, z));
    }
    c.push_back(mod(j + z / 2, z));
    out.push_back(std::move(c));
  }
  return out;
}

// ---- partial C_k-factors of K_{k+1} x K_t ---------------------------------------

Decomposition partial_ck_factorization_kplus1_times_t(int k, int t) {
  // For k = 2 mod 4 the pair signs cannot be balanced by one phase per cycle.
  require(k >= 4 && k % 4 == 0, "needs k = 0 mod 4");
  require(t >= 3 && t % 2 == 1, "needs odd t >= 3");
  const auto cycles = kplus1_near_cycles(k);
  const std::size_t n = cycles.size();

  // base[c][e]: normalized sign of edge e when cycle c starts with r.
  std::vector<std::vector<int>> base(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t e = 0; e < cycles[c].size(); ++e)
      base[c].push_back((e % 2 == 0 ? 1 : -1) *
                        orientation(cycles[c][e], cycles[c][(e + 1) % cycles[c].size()]));
  const auto occ = pair_occurrences(cycles);

  auto consistent = [&](const std::vector<int>& flip) {
    for (const auto& [pair, o] : occ) {
      const int s1 = base[o[0].cycle][o[0].edge] * (flip[o[0].cycle] ? -1 : 1);
      const int s2 = base[o[1].cycle][o[1].edge] * (flip[o[1].cycle] ? -1 : 1);
      if (s1 != -s2) return false;
    }
    return true;
  };

  // Odd i start with r, even i with t - r, the rim with r.
  std::vector<int> flip(n, 0);
  for (int i = 0; i < k; ++i) flip[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : 0;
  std::string tag = "alternating distances, written phases";
  if (!consistent(flip)) {
    // Two-colour the cycles: each pair forces its two cycles equal or opposite.
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
    for (const auto& [pair, o] : occ) {
      const int differ = base[o[0].cycle][o[0].edge] == base[o[1].cycle][o[1].edge] ? 1 : 0;
      adj[o[0].cycle].push_back({o[1].cycle, differ});
      adj[o[1].cycle].push_back({o[0].cycle, differ});
    }
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (colour[s] >= 0) continue;
      colour[s] = 0;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        const auto c = q.front();
        q.pop();
        for (auto [d, differ] : adj[c]) {
          const int want = colour[c] ^ differ;
          if (colour[d] < 0) {
            colour[d] = want;
            q.push(d);
          } else if (colour[d] != want) {
            fail(ErrorKind::ConstructionBug, "no consistent phase choice for the near-cycles");
          }
        }
      }
    }
    flip = colour;
    tag = "alternating distances, solved phases";
  }

  Decomposition d;
  d.host = share(tensor_complete(k + 1, t, 1));
  for (std::size_t c = 0; c < n; ++c)
    for (int r = 1; r <= (t - 1) / 2; ++r) {
      DistanceVector dv;
      for (std::size_t e = 0; e < cycles[c].size(); ++e)
        dv.distances.push_back((e + static_cast<std::size_t>(flip[c])) % 2 == 0 ? r : t - r);
      auto f = assemble_from_distances(cycles[c], dv, t);
      f.hole = kplus1_near_hole(k, static_cast<int>(c));
      d.add(std::move(f), tag);
    }
  return d;
}

// ---- Hamilton C_{kt}-factors of C_k x K_t ----------------------------------------

Decomposition ckt_factorization_cycle_times_t(int k, int t) {
  require(k >= 3, "needs k >= 3");
  require(t >= 3 && t % 2 == 1, "needs odd t >= 3");
  Decomposition d;
  d.host = share(cycle_times_complete(k, t));
  std::vector<int> positions(static_cast<std::size_t>(t));
  std::iota(positions.begin(), positions.end(), 0);
  for (const auto& ham : odd_walecki_cycles(t)) {
    DistanceVector g;
    for (int i = 0; i < t; ++i) g.distances.push_back(i % 2 == 0 ? 1 : k - 1);
    DistanceVector h;
    for (int x : g.distances) h.distances.push_back(mod(-x, k));
    // Traced vertices are (position on the K_t cycle, residue mod k); transpose.
    auto to_host = [&](Vertex v) { return Vertex{v.slot, ham[static_cast<std::size_t>(v.part)]}; };
    d.add(relabel(assemble_from_distances(positions, g, k), to_host, std::nullopt), "unit sum");
    d.add(relabel(assemble_from_distances(positions, h, k), to_host, std::nullopt), "negated unit sum");
  }
  return d;
}

// ---- partial C_{kt}-factors of K_{k+1} x K_t -------------------------------------

namespace {

Decomposition literal_lift(int k, int t) {
  const auto cycles = kplus1_near_cycles(k);
  const auto block = ckt_factorization_cycle_times_t(k, t);
  Decomposition d;
  d.host = share(tensor_complete(k + 1, t, 1));
  const auto rim = lift_along(cycles.back(), block);
  for (int i = 0; i <= k; ++i) {
    const auto mine = lift_along(cycles[static_cast<std::size_t>(i)], block);
    for (std::size_t j = 0; j < mine.size() / 2; ++j) {
      const auto& g = mine[2 * j];
      if (i == k) {
        d.add(relabel(g, [](Vertex v) { return v; }, k), "literal G");
      } else {
        d.add(unite({g, rim[2 * j + 1]}, kplus1_near_hole(k, i)), "literal G + H");
      }
    }
  }
  return d;
}

// Each pair of parts gets a sign bit; the pair's two occurrences run with
// opposite normalized signs, so together they realise every nonzero distance.
// Each cycle then needs value permutations whose signed sums are units mod t.
class SignedLift {
 public:
  SignedLift(int k, int t) : k_(k), t_(t), h_((t - 1) / 2), cycles_(kplus1_near_cycles(k)) {
    std::map<std::pair<int, int>, int> ids;
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      const auto& cy = cycles_[c];
      for (std::size_t e = 0; e < cy.size(); ++e) {
        const int a = cy[e], b = cy[(e + 1) % cy.size()];
        auto [it, fresh] = ids.try_emplace({std::min(a, b), std::max(a, b)},
                                           static_cast<int>(ids.size()));
        edges_.push_back({c, it->second, fresh, orientation(a, b)});
      }
    }
    beta_.assign(ids.size(), 0);
    vectors_.resize(cycles_.size());
  }

  Decomposition run() {
    if (!solve(0)) fail(ErrorKind::ConstructionBug, "no sign choice lifts every near-cycle");
    Decomposition d;
    d.host = share(tensor_complete(k_ + 1, t_, 1));
    for (std::size_t c = 0; c < cycles_.size(); ++c)
      for (const auto& dv : vectors_[c]) {
        auto f = assemble_from_distances(cycles_[c], dv, t_);
        f.hole = kplus1_near_hole(k_, static_cast<int>(c));
        d.add(std::move(f), "signed lift");
      }
    return d;
  }

 private:
  struct EdgeInfo {
    std::size_t cycle;
    int pair;
    bool first;
    int orient;
  };

  bool solve(std::size_t c) {
    if (c == cycles_.size()) return true;
    std::vector<const EdgeInfo*> mine, fresh;
    for (const auto& e : edges_)
      if (e.cycle == c) {
        mine.push_back(&e);
        if (e.first) fresh.push_back(&e);
      }
    if (fresh.size() > 20) fail(ErrorKind::UnsupportedBlock, "too many sign bits per cycle");
    const std::uint32_t combos = 1u << fresh.size();
    for (std::uint32_t mask = 0; mask < combos; ++mask) {
      if (++attempts_ > kMaxAttempts) return false;
      // mask 0 makes every fresh edge positive in traversal direction.
      for (std::size_t b = 0; b < fresh.size(); ++b)
        beta_[static_cast<std::size_t>(fresh[b]->pair)] =
            fresh[b]->orient * ((mask >> b) & 1u ? -1 : 1);
      TransversalProblem p;
      p.length = static_cast<int>(mine.size());
      p.modulus = t_;
      for (int v = 1; v <= h_; ++v) p.values.push_back(v);
      const int t = t_;
      p.accept_sum = [t](int sum) { return std::gcd(sum, t) == 1; };
      for (const auto* e : mine) {
        const int normalized = beta_[static_cast<std::size_t>(e->pair)] * (e->first ? 1 : -1);
        p.signs.push_back(normalized * e->orient);
      }
      auto found = find_distance_transversal(p, 200000);
      if (!found) continue;
      vectors_[c] = std::move(*found);
      if (solve(c + 1)) return true;
    }
    for (const auto* e : fresh) beta_[static_cast<std::size_t>(e->pair)] = 0;
    return false;
  }

  static constexpr std::uint64_t kMaxAttempts = 1u << 20;
  int k_, t_, h_;
  std::vector<std::vector<int>> cycles_;
  std::vector<EdgeInfo> edges_;
  std::vector<int> beta_;
  std::vector<std::vector<DistanceVector>> vectors_;
  std::uint64_t attempts_ = 0;
};

}  // namespace

Decomposition partial_ckt_factorization_kplus1_times_t(int k, int t, LiftReading reading) {
  require(k >= 4 && k % 2 == 0, "needs even k >= 4");
  require(t >= 3 && t % 2 == 1, "needs odd t >= 3");
  if (reading == LiftReading::Literal) return literal_lift(k, t);
  return SignedLift(k, t).run();
}

// ---- C_k-factors of K_3 x K_{ky} ---------------------------------------------------

namespace {

// K_3 x K_k with slots = vertices of K_k.
Decomposition k3_times_kk(int k) {
  if (k == 4) fail(ErrorKind::ExceptionalCase, "K_3 x K_4 is outside the Walecki split");
  const auto w = walecki_split(k);
  Decomposition d;
  d.host = share(tensor_complete(3, k, 1));
  const auto tri = ck_factorization_cycle_times_complete(k, 3);
  for (const auto& ham : w.hamilton) {
    const auto parts = parts_of(ham);
    for (const auto& f : tri.factors)
      d.add(relabel(f, [&](Vertex v) {
        return Vertex{v.slot, parts[static_cast<std::size_t>(v.part)]};
      }, std::nullopt), "Hamilton cycle x K_3");
  }
  for (const auto& f : cubic_times_k3_factorization(k).factors)
    d.add(relabel(f, [](Vertex v) { return Vertex{v.slot, v.part}; }, std::nullopt),
          "cubic remainder x K_3");
  return d;
}

}  // namespace

Decomposition ck_factorization_k3_times_kky(int k, int y) {
  require(k >= 4 && k % 2 == 0 && y >= 1, "needs even k and y >= 1");
  const auto base = k3_times_kk(k);
  if (y == 1) return base;
  Decomposition d;
  d.host = share(tensor_complete(3, k * y, 1));
  auto slot = [k](Vertex v, int o) { return Vertex{v.part, v.slot * k + o}; };
  if (y % 2 == 1) {
    const auto tri = ct_factorization_tripartite(k);
    for (const auto& f : ck_factorization_cycle_times_complete(3, y).factors) {
      for (const auto& tf : tri.factors) {
        std::vector<PartialFactor> pieces;
        for (const auto& c : f.cycles)
          pieces.push_back(relabel(tf, [&](Vertex v) {
            return slot(c.vertices()[static_cast<std::size_t>(v.part)], v.slot);
          }, std::nullopt));
        d.add(unite(pieces, std::nullopt), "triangle ⊗ K̄_k");
      }
    }
  } else {
    if (k == 6) fail(ErrorKind::ExceptionalCase, "K_3 x K_6y with y even has no C_6 route");
    const auto bip = ck_factorization_bipartite(k, k, k);
    for (const auto& f : hamilton_decomp_cycle_times_complete(3, y).factors) {
      const auto& vs = f.cycles.front().vertices();
      for (std::size_t start = 0; start < 2; ++start) {
        for (const auto& bf : bip.factors) {
          std::vector<PartialFactor> pieces;
          for (std::size_t e = start; e < vs.size(); e += 2) {
            const Vertex a = vs[e], b = vs[(e + 1) % vs.size()];
            pieces.push_back(relabel(bf, [&](Vertex v) { return slot(v.part == 0 ? a : b, v.slot); },
                                     std::nullopt));
          }
          d.add(unite(pieces, std::nullopt), "matching ⊗ K̄_k");
        }
      }
    }
  }
  for (const auto& f : base.factors) {
    std::vector<PartialFactor> pieces;
    for (int q = 0; q < y; ++q)
      pieces.push_back(relabel(f, [&](Vertex v) { return Vertex{v.part, q * k + v.slot}; },
                               std::nullopt));
    d.add(unite(pieces, std::nullopt), "hole copies");
  }
  return d;
}

// ---- C_{kt}-factors of C_k x K_s -------------------------------------------------------

Decomposition blown_cycle_factorization(int r, int s, int y) {
  require(r >= 3 && s >= 4 && s % 2 == 0 && y >= 1, "needs r >= 3, even s >= 4, y >= 1");
  auto host = share(cycle_times_complete(r, s * y));
  Decomposition coarse;
  if (y >= 2) coarse = ck_factorization_cycle_times_complete(r, y);
  return blow_and_fill(coarse, s, hamilton_decomp_cycle_times_complete(r, s), y, std::move(host));
}

Decomposition ckt_factorization_cycle_times_s(int k, int t, int s) {
  require(k >= 4 && k % 2 == 0, "needs even k >= 4");
  require(t >= 3 && s >= 2 * t && s % (2 * t) == 0, "needs t >= 3 and s = 0 mod 2t");
  if (t % 2 == 1) return cycle_times_complete_factorization(k, s, t);
  return blown_cycle_factorization(k, t, s / t);
}

}  // namespace cycleframe
