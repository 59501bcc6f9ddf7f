#include "doctest.h"

#include <random>

#include "cycleframe/arcs.hpp"
#include "cycleframe/blocks.hpp"
#include "cycleframe/compose.hpp"
#include "cycleframe/verify.hpp"
#include "mutations.hpp"

using namespace cycleframe;

namespace {

const bool cache_off = [] {
  set_block_cache_enabled(false);
  return true;
}();

}  // namespace

TEST_CASE("a 4-cycle using a same-part pair is rejected") {
  const auto host = tensor_complete(3, 2, 1);
  PartialFactor f;
  f.cycle_length = 4;
  f.cycles.push_back(Cycle({{0, 0}, {1, 1}, {2, 0}, {1, 0}}));
  const auto r = verify_partial_factor(f, host, 4);
  CHECK_FALSE(r.ok());
  CHECK(r.violation == Violation::EdgeNotInHost);
  REQUIRE(r.pair);
  CHECK(r.pair->first.part == r.pair->second.part - 1);
}

TEST_CASE("an empty factor must still span everything outside its hole") {
  const auto host = tensor_complete(3, 2, 1);
  PartialFactor f;
  f.cycle_length = 4;
  CHECK(verify_partial_factor(f, host, 4).violation == Violation::SpanMismatch);
  f.hole = 0;
  CHECK(verify_partial_factor(f, host, 4).violation == Violation::SpanMismatch);
}

TEST_CASE("composed factors pass") {
  const auto d = partial_ck_factorization_kplus1_times_t(4, 3);
  for (const auto& f : d.factors) CHECK(verify_partial_factor(f, *d.host, 4).ok());
}

TEST_CASE("verify_arcs on a built instance and on an empty one") {
  const Params p{2, 4, 5, 2};
  const auto d = build_arcs(p);
  CHECK(verify_arcs(d, p).ok());
  const auto c = expected_counts(p);
  CHECK(c.total_factors == 5);

  Decomposition empty;
  empty.host = std::make_shared<MultiGraph>(tensor_complete(5, 2, 2));
  const auto r = verify_arcs(empty, p);
  CHECK(r.violation == Violation::FactorCount);
  CHECK(r.expected == 5);
  CHECK(r.actual == 0);
}

TEST_CASE("swapping an edge between factors is reported per pair") {
  const Params p{2, 4, 5, 3};
  auto d = build_arcs(p);
  // Exchange one vertex between two cycles of the same factor: both cycles
  // stay valid and the span is unchanged, but the edge multiset moves.
  auto& f = d.factors[0];
  REQUIRE(f.cycles.size() >= 2);
  auto a = f.cycles[0].vertices();
  auto b = f.cycles[1].vertices();
  std::swap(a[0], b[0]);
  f.cycles[0] = Cycle(a);
  f.cycles[1] = Cycle(b);
  const auto r = verify_arcs(d, p);
  CHECK_FALSE(r.ok());
  CAPTURE(r.describe());
  CHECK((r.violation == Violation::OverCovered || r.violation == Violation::UnderCovered ||
         r.violation == Violation::EdgeNotInHost));
}

TEST_CASE("random single edits are always caught") {
  std::mt19937_64 rng(7);
  for (Params p : {Params{2, 4, 5, 2}, Params{1, 4, 5, 3}, Params{2, 6, 3, 6}}) {
    const auto d = build_arcs(p);
    for (auto kind : {mutations::Kind::MoveVertex, mutations::Kind::DeleteCycle,
                      mutations::Kind::DuplicateCycle, mutations::Kind::RelabelHole})
      for (int trial = 0; trial < 50; ++trial) {
        const auto bad = mutations::mutate(d, kind, rng, p.u, p.g);
        CAPTURE(to_string(p));
        CAPTURE(mutations::name(kind));
        CHECK_FALSE(verify_arcs(bad, p).ok());
      }
  }
}

TEST_CASE("provenance is ignored") {
  const Params p{2, 4, 5, 2};
  auto d = build_arcs(p);
  for (auto& tag : d.provenance) tag = "anything";
  d.provenance.pop_back();
  CHECK(verify_arcs(d, p).ok());
}
