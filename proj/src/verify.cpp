#include "cycleframe/verify.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace cycleframe {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::None: return "None";
    case Violation::HoleOutOfRange: return "HoleOutOfRange";
    case Violation::WrongCycleLength: return "WrongCycleLength";
    case Violation::VertexOutsideHost: return "VertexOutsideHost";
    case Violation::VertexReused: return "VertexReused";
    case Violation::EdgeNotInHost: return "EdgeNotInHost";
    case Violation::SpanMismatch: return "SpanMismatch";
    case Violation::FactorCount: return "FactorCount";
    case Violation::HoleCount: return "HoleCount";
    case Violation::OverCovered: return "OverCovered";
    case Violation::UnderCovered: return "UnderCovered";
  }
  return "Unknown";
}

std::string VerifyReport::describe() const {
  if (ok()) return "OK";
  std::ostringstream os;
  os << to_string(violation);
  if (factor_index) os << " factor=" << *factor_index;
  if (cycle_index) os << " cycle=" << *cycle_index;
  if (vertex) os << " vertex=" << to_string(*vertex);
  if (pair) os << " pair=" << to_string(pair->first) << "-" << to_string(pair->second);
  if (expected != 0 || actual != 0) os << " expected=" << expected << " actual=" << actual;
  if (!message.empty()) os << " : " << message;
  return os.str();
}

namespace {

VerifyReport failure(Violation v, std::string message) {
  VerifyReport r;
  r.violation = v;
  r.message = std::move(message);
  return r;
}

}  // namespace

VerifyReport verify_partial_factor(const PartialFactor& factor, const MultiGraph& host, int k) {
  if (factor.hole && (*factor.hole < 0 || *factor.hole >= host.num_parts())) {
    auto r = failure(Violation::HoleOutOfRange, "hole is not a part of the host");
    r.actual = *factor.hole;
    return r;
  }
  std::vector<char> used(static_cast<std::size_t>(host.num_vertices()), 0);
  for (std::size_t ci = 0; ci < factor.cycles.size(); ++ci) {
    const Cycle& c = factor.cycles[ci];
    if (static_cast<int>(c.length()) != k) {
      auto r = failure(Violation::WrongCycleLength, "cycle length differs from k");
      r.cycle_index = ci;
      r.expected = k;
      r.actual = static_cast<std::int64_t>(c.length());
      return r;
    }
    for (const Vertex& v : c.vertices()) {
      if (!host.contains(v)) {
        auto r = failure(Violation::VertexOutsideHost, "vertex outside the host ground set");
        r.cycle_index = ci;
        r.vertex = v;
        return r;
      }
      char& mark = used[static_cast<std::size_t>(host.index(v))];
      if (mark) {
        auto r = failure(Violation::VertexReused, "cycles are not vertex-disjoint");
        r.cycle_index = ci;
        r.vertex = v;
        return r;
      }
      mark = 1;
    }
    for (const VertexPair& e : c.edges()) {
      if (host.multiplicity(e.first, e.second) == 0) {
        auto r = failure(Violation::EdgeNotInHost, "edge absent from host");
        r.cycle_index = ci;
        r.pair = e;
        return r;
      }
    }
  }
  for (int idx = 0; idx < host.num_vertices(); ++idx) {
    const Vertex v = host.vertex(idx);
    const bool should_cover = !factor.hole || v.part != *factor.hole;
    if (static_cast<bool>(used[static_cast<std::size_t>(idx)]) != should_cover) {
      auto r = failure(Violation::SpanMismatch,
                       should_cover ? "vertex left uncovered" : "vertex of the hole is covered");
      r.vertex = v;
      return r;
    }
  }
  return {};
}

namespace {

VerifyReport compare_edge_sums(const std::vector<PartialFactor>& factors, const MultiGraph& host) {
  std::map<VertexPair, std::int64_t> counts;
  std::map<VertexPair, std::size_t> last_factor;
  for (std::size_t fi = 0; fi < factors.size(); ++fi)
    for (const auto& c : factors[fi].cycles)
      for (const auto& e : c.edges()) {
        ++counts[e];
        last_factor[e] = fi;
      }
  for (const auto& [e, n] : counts) {
    const int want = host.multiplicity(e.first, e.second);
    if (n > want) {
      auto r = failure(Violation::OverCovered, "pair used more often than its multiplicity");
      r.pair = e;
      r.factor_index = last_factor[e];
      r.expected = want;
      r.actual = n;
      return r;
    }
  }
  for (const auto& [e, want] : host.edges()) {
    auto it = counts.find(e);
    const std::int64_t have = it == counts.end() ? 0 : it->second;
    if (have < want) {
      auto r = failure(Violation::UnderCovered, "pair used less often than its multiplicity");
      r.pair = e;
      r.expected = want;
      r.actual = have;
      return r;
    }
  }
  return {};
}

}  // namespace

VerifyReport verify_decomposition(const Decomposition& d) {
  if (!d.host) return failure(Violation::SpanMismatch, "decomposition has no host");
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi) {
    auto r = verify_partial_factor(d.factors[fi], *d.host, d.factors[fi].cycle_length);
    if (!r) {
      r.factor_index = fi;
      return r;
    }
  }
  return compare_edge_sums(d.factors, *d.host);
}

VerifyReport verify_arcs(const Decomposition& d, const Params& p) {
  if (p.u < 2 || p.g < 2 || p.lambda < 1 || p.k < 3)
    return failure(Violation::FactorCount, "parameters outside the host domain");
  const MultiGraph host = tensor_complete(p.u, p.g, p.lambda);

  const std::int64_t total = static_cast<std::int64_t>(p.lambda) * p.u * (p.g - 1);
  if (total % 2 != 0 || static_cast<std::int64_t>(d.factors.size()) * 2 != total) {
    auto r = failure(Violation::FactorCount, "total number of partial factors");
    r.expected = total / 2;
    r.actual = static_cast<std::int64_t>(d.factors.size());
    return r;
  }
  const std::int64_t per_hole = static_cast<std::int64_t>(p.lambda) * (p.g - 1) / 2;
  std::vector<std::int64_t> holes(static_cast<std::size_t>(p.u), 0);
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi) {
    const auto& hole = d.factors[fi].hole;
    if (!hole || *hole < 0 || *hole >= p.u) {
      auto r = failure(Violation::HoleOutOfRange, "every factor must miss exactly one part");
      r.factor_index = fi;
      return r;
    }
    ++holes[static_cast<std::size_t>(*hole)];
  }
  for (int part = 0; part < p.u; ++part) {
    if (holes[static_cast<std::size_t>(part)] != per_hole) {
      auto r = failure(Violation::HoleCount, "factors missing part " + std::to_string(part));
      r.expected = per_hole;
      r.actual = holes[static_cast<std::size_t>(part)];
      return r;
    }
  }
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi) {
    auto r = verify_partial_factor(d.factors[fi], host, p.k);
    if (!r) {
      r.factor_index = fi;
      return r;
    }
  }
  return compare_edge_sums(d.factors, host);
}

}  // namespace cycleframe
