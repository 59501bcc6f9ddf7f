#pragma once

// Single-edit corruptions of a decomposition. Each one changes the edge
// multiset, the factor count or a hole's span, so a correct verifier must
// reject every result.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cycleframe/graphs.hpp"

namespace mutations {

using cycleframe::Cycle;
using cycleframe::Decomposition;
using cycleframe::Vertex;

enum class Kind { MoveVertex, DeleteCycle, DuplicateCycle, RelabelHole };

inline const char* name(Kind k) {
  switch (k) {
    case Kind::MoveVertex: return "move-vertex";
    case Kind::DeleteCycle: return "delete-cycle";
    case Kind::DuplicateCycle: return "duplicate-cycle";
    case Kind::RelabelHole: return "relabel-hole";
  }
  return "?";
}

inline int pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

// Assumes every factor has at least one cycle and there are >= 2 parts.
inline Decomposition mutate(Decomposition d, Kind kind, std::mt19937_64& rng, int parts,
                            int part_size) {
  auto& f = d.factors[pick(rng, d.factors.size())];
  const int ci = pick(rng, f.cycles.size());
  switch (kind) {
    case Kind::MoveVertex: {
      // Replace one vertex by a vertex the cycle does not use; the two edges at
      // that position change, so the edge multiset changes.
      auto vs = f.cycles[ci].vertices();
      const int pos = pick(rng, vs.size());
      for (;;) {
        Vertex w{pick(rng, parts), pick(rng, part_size)};
        if (std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
        vs[pos] = w;
        break;
      }
      f.cycles[ci] = Cycle(vs);
      break;
    }
    case Kind::DeleteCycle:
      f.cycles.erase(f.cycles.begin() + ci);
      break;
    case Kind::DuplicateCycle: {
      const Cycle c = f.cycles[ci];
      auto& other = d.factors[pick(rng, d.factors.size())];
      other.cycles.push_back(c);
      break;
    }
    case Kind::RelabelHole: {
      int h = f.hole.value_or(0);
      const int old = h;
      while (h == old) h = pick(rng, parts);
      f.hole = h;
      break;
    }
  }
  return d;
}

}  // namespace mutations
