#include "doctest.h"

#include <map>

#include "cycleframe/arcs.hpp"
#include "cycleframe/blocks.hpp"
#include "cycleframe/verify.hpp"
#include "oracle.hpp"

using namespace cycleframe;

namespace {

const bool cache_off = [] {
  set_block_cache_enabled(false);
  return true;
}();

// Independent of verify_arcs: recount edges, spans and holes.
bool is_arcs(const Decomposition& d, const Params& p) {
  if (!oracle::partitions(d, tensor_complete(p.u, p.g, p.lambda), p.k)) return false;
  std::map<int, int> holes;
  for (const auto& f : d.factors) {
    if (!f.hole) return false;
    ++holes[*f.hole];
  }
  if (static_cast<int>(holes.size()) != p.u) return false;
  for (const auto& [part, n] : holes)
    if (n != p.lambda * (p.g - 1) / 2) return false;
  return true;
}

void check_built(const Decomposition& d, const Params& p, std::size_t factors) {
  CAPTURE(to_string(p));
  CHECK(d.factors.size() == factors);
  CHECK(is_arcs(d, p));
  CHECK(verify_arcs(d, p).ok());
}

}  // namespace

TEST_CASE("feasibility verdicts") {
  CHECK(check_feasibility({1, 4, 5, 4}).describe() == "Infeasible (λ(g−1) must be even)");
  CHECK(check_feasibility({1, 4, 6, 3}).describe() == "Infeasible (g(u−1) must be divisible by k)");
  CHECK(check_feasibility({2, 4, 2, 4}).describe() == "Infeasible (u must be at least 3)");
  CHECK(check_feasibility({2, 4, 5, 1}).describe() == "Infeasible (g must be at least 2)");

  CHECK(check_feasibility({2, 4, 8, 4}).describe() == "OpenException (2s,4t,8)");
  CHECK(check_feasibility({2, 4, 8, 8}).verdict == Verdict::OpenException);
  CHECK(check_feasibility({2, 4, 4, 4}).describe() == "OpenException (2s,4,4x)");
  CHECK(check_feasibility({2, 8, 6, 8}).describe() == "OpenException (2s,4t,4x+2)");
  CHECK(check_feasibility({2, 6, 6, 6}).describe() == "OpenException (4t+2,4s+2)");
  CHECK(check_feasibility({2, 6, 8, 6}).describe() == "OpenException (8,4s+2)");
  CHECK(check_feasibility({2, 6, 4, 12}).describe() == "OpenException (4t,6y,6)");
  CHECK(check_feasibility({1, 4, 9, 3}).describe() == "OpenException (2x+1,4t,8t+1,y)");
  CHECK(check_feasibility({1, 12, 9, 3}).describe() == "OpenException (2x+1,rs,2r+1,sy)");

  CHECK(check_feasibility({1, 4, 5, 3}).describe() == "Feasible (case a)");
  CHECK(check_feasibility({2, 6, 3, 6}).describe() == "Feasible (case d)");
  CHECK(check_feasibility({2, 4, 5, 2}).describe() == "Feasible (case c)");
  CHECK(check_feasibility({1, 12, 5, 3}).describe() == "Feasible (case b)");
  CHECK(check_feasibility({2, 6, 4, 6}).describe() == "Feasible (case e)");
  CHECK(check_feasibility({2, 6, 3, 3}).describe() == "Feasible (case j)");
  CHECK(check_feasibility({3, 4, 5, 3}).describe() == "Feasible (case a+c)");
  CHECK(check_feasibility({2, 6, 4, 2}).verdict == Verdict::UnsupportedCase);
  CHECK(check_feasibility({1, 6, 7, 3}).verdict == Verdict::UnsupportedCase);
}

TEST_CASE("expected counts") {
  auto same = [](ExpectedCounts c, std::int64_t a, std::int64_t b, std::int64_t e) {
    return c.total_factors == a && c.per_hole == b && c.edges_per_factor == e;
  };
  CHECK(same(expected_counts({2, 4, 5, 2}), 5, 1, 8));
  CHECK(same(expected_counts({1, 4, 5, 3}), 5, 1, 12));
  CHECK(same(expected_counts({2, 6, 3, 6}), 15, 5, 12));
}

TEST_CASE("case c: u = 1 mod k") {
  check_built(build_case_u1modk_l2({2, 4, 5, 2}), {2, 4, 5, 2}, 5);
  check_built(build_case_u1modk_l2({2, 4, 5, 3}), {2, 4, 5, 3}, 10);
  check_built(build_case_u1modk_l2({2, 6, 7, 2}), {2, 6, 7, 2}, 7);
  for (const auto& f : build_case_u1modk_l2({2, 4, 5, 2}).factors) {
    CHECK(f.cycles.size() == 2);
    CHECK(f.vertex_count() == 8);
  }
  CHECK_THROWS_AS(build_case_u1modk_l2({2, 4, 6, 2}), Error);
}

TEST_CASE("case a: λ = 1, u = kx + 1") {
  check_built(build_case_l1({1, 4, 5, 3}), {1, 4, 5, 3}, 5);
  check_built(build_case_l1({1, 4, 13, 3}), {1, 4, 13, 3}, 13);
  check_built(build_case_l1({1, 4, 17, 5}), {1, 4, 17, 5}, 34);
  check_built(build_case_l1({1, 8, 9, 3}), {1, 8, 9, 3}, 9);
  CHECK_THROWS_AS(build_case_l1({1, 4, 9, 3}), Error);
}

TEST_CASE("case d: u odd, g = 0 mod k") {
  check_built(build_case_uodd_g0modk_l2({2, 4, 3, 4}), {2, 4, 3, 4}, 9);
  check_built(build_case_uodd_g0modk_l2({2, 6, 3, 6}), {2, 6, 3, 6}, 15);
  check_built(build_case_uodd_g0modk_l2({2, 4, 5, 4}), {2, 4, 5, 4}, 15);
}

TEST_CASE("cases e and f: u = 4x, g = ky") {
  check_built(build_case_u4x({2, 6, 4, 6}), {2, 6, 4, 6}, 20);
  check_built(build_case_u4x({2, 8, 4, 8}), {2, 8, 4, 8}, 28);
  check_built(build_case_u4x({2, 6, 12, 6}), {2, 6, 12, 6}, 60);
  check_built(build_case_u4x({2, 8, 4, 16}), {2, 8, 4, 16}, 60);
  CHECK_THROWS_AS(build_case_u4x({2, 6, 8, 6}), Error);
}

TEST_CASE("prime split cases, λ = 2") {
  check_built(build_case_primesplit_l2({2, 6, 3, 6}, make_split(6, 2)), {2, 6, 3, 6}, 15);
  check_built(build_case_primesplit_l2({2, 6, 3, 3}, make_split(6, 2)), {2, 6, 3, 3}, 6);
  check_built(build_case_primesplit_l2({2, 12, 5, 6}, make_split(12, 4)), {2, 12, 5, 6}, 25);
  check_built(build_case_primesplit_l2({2, 6, 4, 4}, make_split(6, 3)), {2, 6, 4, 4}, 12);
  check_built(build_case_primesplit_l2({2, 16, 5, 4}, make_split(16, 4)), {2, 16, 5, 4}, 15);
  CHECK_THROWS_AS(build_case_primesplit_l2({2, 6, 4, 2}, make_split(6, 3)), Error);
  const auto split = make_split(12, 4);
  CHECK(split.primes == std::vector<int>{2, 2, 3});
  CHECK(split.cut == 2);
}

TEST_CASE("prime split case, λ = 1") {
  check_built(build_case_primesplit_l1({1, 12, 5, 3}, make_split(12, 4)), {1, 12, 5, 3}, 5);
  check_built(build_case_primesplit_l1({1, 12, 13, 3}, make_split(12, 4)), {1, 12, 13, 3}, 13);
  check_built(build_case_primesplit_l1({1, 12, 5, 9}, make_split(12, 4)), {1, 12, 5, 9}, 20);
  CHECK_THROWS_AS(build_case_primesplit_l1({1, 12, 9, 3}, make_split(12, 4)), Error);
}

TEST_CASE("build_arcs scales in λ") {
  const auto d4 = build_arcs({4, 4, 5, 2});
  CHECK(d4.factors.size() == 10);
  CHECK(is_arcs(d4, {4, 4, 5, 2}));
  const auto base = build_arcs({2, 4, 5, 2});
  CHECK(std::equal(base.factors.begin(), base.factors.end(), d4.factors.begin()));
  const auto d3 = build_arcs({3, 4, 5, 3});
  CHECK(d3.factors.size() == 15);
  CHECK(is_arcs(d3, {3, 4, 5, 3}));
  CHECK(is_arcs(build_arcs({5, 4, 5, 3}), {5, 4, 5, 3}));
  CHECK(is_arcs(build_arcs({2, 4, 13, 3}), {2, 4, 13, 3}));
}

TEST_CASE("build_arcs refuses non-feasible parameters") {
  for (Params p : {Params{1, 4, 5, 4}, Params{2, 4, 8, 4}, Params{2, 6, 4, 2}}) {
    CAPTURE(to_string(p));
    try {
      build_arcs(p);
      FAIL("expected an exception");
    } catch (const FeasibilityError& e) {
      CHECK(e.feasibility().verdict == check_feasibility(p).verdict);
    }
  }
}

TEST_CASE("dispatcher is total on a grid") {
  for (int lambda = 1; lambda <= 4; ++lambda)
    for (int k : {4, 6, 8, 12})
      for (int u = 1; u <= 25; ++u)
        for (int g = 1; g <= 12; ++g) {
          const Params p{lambda, k, u, g};
          CAPTURE(to_string(p));
          Feasibility f;
          CHECK_NOTHROW(f = check_feasibility(p));
          if (f.verdict == Verdict::Feasible) {
            CHECK(!f.parts.empty());
            int total = 0;
            for (std::size_t i = 0; i < f.parts.size(); ++i) total += f.parts[i].lambda * f.copies[i];
            CHECK(total == lambda);
          }
          if (violated_necessary_condition(p)) CHECK(f.verdict == Verdict::Infeasible);
        }
}

TEST_CASE("brute force oracle") {
  const auto a = brute_force_arcs({2, 4, 5, 2}, 10'000'000);
  REQUIRE(a.status == BruteForceStatus::Found);
  CHECK(is_arcs(*a.decomposition, {2, 4, 5, 2}));
  const auto b = brute_force_arcs({1, 4, 5, 3}, 10'000'000);
  REQUIRE(b.status == BruteForceStatus::Found);
  CHECK(is_arcs(*b.decomposition, {1, 4, 5, 3}));
  const auto c = brute_force_arcs({1, 4, 5, 4}, 10);
  CHECK(c.status == BruteForceStatus::Infeasible);
  CHECK(c.reason == "λ(g−1) must be even");
  CHECK(brute_force_arcs({1, 4, 3, 2}, 10).status == BruteForceStatus::Infeasible);
}
