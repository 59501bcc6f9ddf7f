#pragma once

#include <compare>
#include <string>

namespace cycleframe {

/// The quadruple (lambda, k, u, g) naming the host (K_u x K_g)(lambda) and the
/// cycle length k.
struct Params {
  int lambda = 1;
  int k = 4;
  int u = 3;
  int g = 2;

  friend auto operator<=>(const Params&, const Params&) = default;
};

inline std::string to_string(const Params& p) {
  return "(" + std::to_string(p.lambda) + "," + std::to_string(p.k) + "," + std::to_string(p.u) +
         "," + std::to_string(p.g) + ")";
}

}  // namespace cycleframe
