#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycleframe/graphs.hpp"
#include "cycleframe/params.hpp"

namespace cycleframe {

enum class Verdict { Feasible, Infeasible, OpenException, UnsupportedCase };

const char* to_string(Verdict v);

/// k = r * s with the primes of r listed first.
struct PrimeSplit {
  std::vector<int> primes;
  int cut = 0;
  int r = 1;
  int s = 1;
};

PrimeSplit make_split(int k, int r);

/// One base construction: a case letter of the dispatch table and, for the
/// prime-split cases, the chosen split.
struct CasePlan {
  char label = '?';
  int lambda = 1;  // 1 or 2
  std::optional<PrimeSplit> split;
};

struct Feasibility {
  Verdict verdict = Verdict::UnsupportedCase;
  std::string detail;  // violated condition, exception family, or case label
  std::vector<CasePlan> parts;  // base solutions whose union is the answer
  std::vector<int> copies;      // multiplicity of each part

  /// "Feasible (case a)", "Infeasible (λ(g−1) must be even)", ...
  std::string describe() const;
};

Feasibility check_feasibility(const Params& p);

struct ExpectedCounts {
  std::int64_t total_factors = 0;
  std::int64_t per_hole = 0;
  std::int64_t edges_per_factor = 0;
};

ExpectedCounts expected_counts(const Params& p);

/// Base patterns, ignoring exception lists and λ.
std::optional<CasePlan> lambda1_plan(int k, int u, int g);
std::optional<CasePlan> lambda2_plan(int k, int u, int g);

// ---- case builders (each checks its own hypotheses) ---------------------------

Decomposition build_case_u1modk_l2(const Params& p);        // (c)
Decomposition build_case_l1(const Params& p);               // (a)
Decomposition build_case_uodd_g0modk_l2(const Params& p);   // (d)
Decomposition build_case_u4x(const Params& p);              // (e), (f)
Decomposition build_case_primesplit_l2(const Params& p, const PrimeSplit& split);  // (g)-(j)
Decomposition build_case_primesplit_l1(const Params& p, const PrimeSplit& split);  // (b)

/// Thrown by build_arcs when the parameters are not Feasible.
class FeasibilityError : public Error {
 public:
  explicit FeasibilityError(Feasibility f);
  const Feasibility& feasibility() const { return f_; }

 private:
  Feasibility f_;
};

/// Dispatches, scales in λ and verifies. Throws FeasibilityError for
/// non-Feasible parameters and Error(ConstructionBug) on a failed check.
Decomposition build_arcs(const Params& p, bool verify = true);

}  // namespace cycleframe
