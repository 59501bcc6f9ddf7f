#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "cycleframe/graphs.hpp"

using namespace cycleframe;

namespace {

// Oracle: count tensor edges by brute force over vertex pairs.
long long count_tensor_pairs(int u, int g) {
  long long n = 0;
  for (int a = 0; a < u * g; ++a)
    for (int b = a + 1; b < u * g; ++b)
      if (a / g != b / g && a % g != b % g) ++n;
  return n;
}

}  // namespace

TEST_CASE("tensor_complete matches the adjacency rule") {
  const MultiGraph h = tensor_complete(3, 2, 1);
  CHECK(h.num_vertices() == 6);
  CHECK(h.edge_count() == 6);
  CHECK(tensor_complete(5, 2, 2).edge_count() == 40);
  const MultiGraph tiny = tensor_complete(2, 2, 1);
  CHECK(tiny.edge_count() == 2);
  CHECK(tiny.multiplicity({0, 0}, {1, 1}) == 1);
  CHECK(tiny.multiplicity({0, 0}, {1, 0}) == 0);

  for (int u = 2; u <= 6; ++u)
    for (int g = 2; g <= 5; ++g)
      for (int lambda = 1; lambda <= 3; ++lambda) {
        const MultiGraph m = tensor_complete(u, g, lambda);
        CHECK(m.edge_count() == lambda * count_tensor_pairs(u, g));
        for (int i = 0; i < m.num_vertices(); ++i)
          CHECK(m.degree(m.vertex(i)) == lambda * (u - 1) * (g - 1));
      }
}

TEST_CASE("tensor_complete rejects bad parameters") {
  CHECK_THROWS_AS(tensor_complete(1, 3, 1), Error);
  CHECK_THROWS_AS(tensor_complete(3, 1, 1), Error);
  CHECK_THROWS_AS(tensor_complete(3, 3, 0), Error);
}

TEST_CASE("removing aligned K_u copies leaves the tensor product") {
  for (int u = 2; u <= 8; ++u)
    for (int g = 2; g <= 6; ++g)
      for (int lambda = 1; lambda <= 2; ++lambda) CHECK(mcf_identity_check(u, g, lambda));
}

TEST_CASE("distance factors partition K_{t,t}") {
  auto f1 = distance_one_factor(0, 1, 1, 3);
  CHECK(f1 == std::vector<VertexPair>{normalized({0, 0}, {1, 1}), normalized({0, 1}, {1, 2}),
                                      normalized({0, 2}, {1, 0})});
  for (int t = 1; t <= 7; ++t) {
    std::set<VertexPair> all;
    std::size_t total = 0;
    for (int i = 0; i < t; ++i) {
      auto f = distance_one_factor(0, 1, i, t);
      total += f.size();
      all.insert(f.begin(), f.end());
    }
    CHECK(total == static_cast<std::size_t>(t * t));
    CHECK(all.size() == static_cast<std::size_t>(t * t));
  }
  CHECK_THROWS_AS(distance_one_factor(0, 1, 3, 3), Error);
  CHECK_THROWS_AS(distance_one_factor(0, 0, 1, 3), Error);
}

TEST_CASE("assemble_from_distances cycle lengths") {
  const std::vector<int> parts{0, 1, 2, 3};
  auto three = assemble_from_distances(parts, DistanceVector{{1, 2, 1, 2}}, 3);
  CHECK(three.cycles.size() == 3);
  for (const auto& c : three.cycles) CHECK(c.length() == 4);
  auto one = assemble_from_distances(parts, DistanceVector{{1, 1, 1, 1}}, 3);
  REQUIRE(one.cycles.size() == 1);
  CHECK(one.cycles[0].length() == 12);
  const std::vector<int> two{0, 1};
  CHECK_THROWS_AS(assemble_from_distances(two, DistanceVector{{0, 0}}, 2), Error);
}

TEST_CASE("assemble_from_distances is 2-regular with predicted lengths") {
  std::mt19937 rng(7);
  for (int r = 3; r <= 6; ++r)
    for (int t = 1; t <= 7; ++t)
      for (int trial = 0; trial < 10; ++trial) {
        DistanceVector dv;
        for (int j = 0; j < r; ++j) dv.distances.push_back(static_cast<int>(rng() % t));
        std::vector<int> parts(static_cast<std::size_t>(r));
        std::iota(parts.begin(), parts.end(), 0);
        const int len = r * t / std::gcd(dv.sum_mod(t), t);
        auto f = assemble_from_distances(parts, dv, t);
        CHECK(f.vertex_count() == static_cast<std::size_t>(r * t));
        for (const auto& c : f.cycles) CHECK(c.length() == static_cast<std::size_t>(len));
        MultiGraph m = factor_graph(f, r, t);
        for (int i = 0; i < m.num_vertices(); ++i) CHECK(m.degree(m.vertex(i)) == 2);
      }
}

TEST_CASE("cycles are stored in canonical form") {
  Cycle a({{0, 2}, {1, 0}, {2, 1}, {1, 1}});
  Cycle b({{1, 1}, {2, 1}, {1, 0}, {0, 2}});
  CHECK(a == b);
  CHECK(a.vertices().front() == Vertex{0, 2});
  CHECK_THROWS_AS(Cycle({{0, 0}}), Error);
  CHECK_THROWS_AS(Cycle({{0, 0}, {1, 0}, {0, 0}}), Error);
}

TEST_CASE("blow_up") {
  PartialFactor square;
  square.cycles.emplace_back(std::vector<Vertex>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  square.cycle_length = 4;
  CHECK(blow_up(square, 1, 1).edge_count() == 4);
  MultiGraph doubled = blow_up(square, 2, 1);
  CHECK(doubled.num_vertices() == 8);
  CHECK(doubled.edge_count() == 16);
  for (int i = 0; i < 8; ++i) CHECK(doubled.degree(doubled.vertex(i)) == 4);

  PartialFactor tri;
  tri.cycles.emplace_back(std::vector<Vertex>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(blow_up(tri, 4, 1) == complete_multipartite(3, 4, 1));
}
