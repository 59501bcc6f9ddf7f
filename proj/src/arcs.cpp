#include "cycleframe/arcs.hpp"

#include <map>

#include "cycleframe/blocks.hpp"
#include "cycleframe/compose.hpp"
#include "cycleframe/verify.hpp"

namespace cycleframe {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible: return "Feasible";
    case Verdict::Infeasible: return "Infeasible";
    case Verdict::OpenException: return "OpenException";
    case Verdict::UnsupportedCase: return "UnsupportedCase";
  }
  return "Unknown";
}

namespace {

std::shared_ptr<const MultiGraph> share(MultiGraph g) {
  return std::make_shared<const MultiGraph>(std::move(g));
}

std::vector<int> parts_of(const Cycle& c) {
  std::vector<int> out;
  for (const auto& v : c.vertices()) out.push_back(v.part);
  return out;
}

std::vector<int> divisors(int k) {
  std::vector<int> out;
  for (int d = 2; d < k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

// Each near factor of K_u (cycles of length L) times K_g: every cycle is
// expanded by `block` (a factorization of C_L x K_g) and the l-th pieces merge.
Decomposition lift_near(const Decomposition& near, const Decomposition& block,
                        std::shared_ptr<const MultiGraph> host, const std::string& tag) {
  Decomposition d;
  d.host = std::move(host);
  for (const auto& f : near.factors) {
    std::vector<std::vector<PartialFactor>> per_index(block.factors.size());
    for (const auto& c : f.cycles) {
      auto lifted = lift_along(parts_of(c), block);
      for (std::size_t l = 0; l < lifted.size(); ++l) per_index[l].push_back(std::move(lifted[l]));
    }
    for (const auto& pieces : per_index) d.add(unite(pieces, f.hole), tag);
  }
  return d;
}

// Edges {a, b} of a matching times cycles C of a factor of K_g: each C x K_2
// is covered by the single factor of `pair_block` (on C_L x K_2).
PartialFactor edges_times_cycles(const PartialFactor& matching, const PartialFactor& cycles,
                                 const Decomposition& pair_block, std::optional<int> hole,
                                 const std::function<int(int)>& part = [](int p) { return p; }) {
  std::vector<PartialFactor> pieces;
  for (const auto& e : matching.cycles) {
    const int a = part(e.vertices()[0].part), b = part(e.vertices()[1].part);
    for (const auto& c : cycles.cycles) {
      const auto& vs = c.vertices();
      pieces.push_back(relabel(pair_block.factors.front(), [&](Vertex v) {
        return Vertex{v.slot == 0 ? a : b, vs[static_cast<std::size_t>(v.part)].part};
      }, std::nullopt));
    }
  }
  return unite(pieces, hole);
}

void need(bool ok, const Params& p, const std::string& what) {
  if (!ok) fail(ErrorKind::ParameterDomain, to_string(p) + ": " + what);
}

std::optional<std::string> exception_family(const Params& p) {
  const int k = p.k, u = p.u, g = p.g;
  if (k % 4 == 0) {
    if (p.lambda % 2 == 0) {
      if (u == 8) return "(2s,4t,8)";
      if (u % 4 == 2) return "(2s,4t,4x+2)";
      if (k == 4 && u % 4 == 0) return "(2s,4,4x)";
    } else {
      if (u == 2 * k + 1 && g % 2 == 1) return "(2x+1,4t,8t+1,y)";
      for (int s : divisors(k)) {
        const int r = k / s;
        if (s >= 3 && s % 2 == 1 && u == 2 * r + 1 && g % (2 * s) == s)
          return "(2x+1,rs,2r+1,sy)";
      }
    }
  } else if (k % 4 == 2 && p.lambda % 2 == 0) {
    if (u == 8) return "(8,4s+2)";
    if (u % 4 == 2) return "(4t+2,4s+2)";
    if (k == 6 && u % 4 == 0 && g % 12 == 0) return "(4t,6y,6)";
  }
  return std::nullopt;
}

std::optional<char> split_l2_case(int k, int u, int g, int r) {
  const int s = k / r;
  if (r % 2 == 0 && s >= 3 && s % 2 == 1 && (u - 1) % r == 0 && g % (2 * s) == 0) return 'g';
  if (r >= 3 && r % 2 == 1 && s % 2 == 0 && (u - 1) % r == 0 && g % s == 0 && g % 4 != 2)
    return 'h';
  if (k % 4 == 0 && r >= 4 && r % 2 == 0 && s >= 4 && s % 2 == 0 && (u - 1) % r == 0 &&
      g % s == 0)
    return 'i';
  if (k % 4 == 2 && r % 2 == 0 && s >= 3 && s % 2 == 1 && (u - 1) % r == 0 && g % (2 * s) == s)
    return 'j';
  return std::nullopt;
}

bool split_l1_matches(int k, int u, int g, int r) {
  const int s = k / r;
  if (r % 4 != 0 || s < 3 || s % 2 == 0 || (u - 1) % r != 0) return false;
  return (u - 1) / r != 2 && g % (2 * s) == s;
}

}  // namespace

PrimeSplit make_split(int k, int r) {
  require(r >= 1 && k % r == 0, "split must divide k");
  PrimeSplit split;
  split.r = r;
  split.s = k / r;
  auto factor = [&](int n) {
    for (int p = 2; n > 1; ++p)
      while (n % p == 0) {
        split.primes.push_back(p);
        n /= p;
      }
  };
  factor(r);
  split.cut = static_cast<int>(split.primes.size());
  factor(split.s);
  return split;
}

std::optional<CasePlan> lambda1_plan(int k, int u, int g) {
  if (k < 4 || k % 4 != 0 || g % 2 == 0) return std::nullopt;
  if ((u - 1) % k == 0 && (u - 1) / k != 2 && g >= 3) return CasePlan{'a', 1, std::nullopt};
  for (int r : divisors(k))
    if (split_l1_matches(k, u, g, r)) return CasePlan{'b', 1, make_split(k, r)};
  return std::nullopt;
}

std::optional<CasePlan> lambda2_plan(int k, int u, int g) {
  if (k < 4 || k % 2 != 0) return std::nullopt;
  if ((u - 1) % k == 0) return CasePlan{'c', 2, std::nullopt};
  if (u % 2 == 1 && g % k == 0) return CasePlan{'d', 2, std::nullopt};
  if (u % 4 == 0 && u != 8 && g % k == 0) {
    const int y = g / k;
    if (y % 2 == 1 && k >= 6) return CasePlan{'e', 2, std::nullopt};
    if (y % 2 == 0 && k > 6) return CasePlan{'f', 2, std::nullopt};
  }
  for (char want : {'g', 'h', 'i', 'j'})
    for (int r : divisors(k))
      if (split_l2_case(k, u, g, r) == want) return CasePlan{want, 2, make_split(k, r)};
  return std::nullopt;
}

std::string Feasibility::describe() const {
  switch (verdict) {
    case Verdict::Feasible: return "Feasible (case " + detail + ")";
    case Verdict::Infeasible: return "Infeasible (" + detail + ")";
    case Verdict::OpenException: return "OpenException " + detail;
    case Verdict::UnsupportedCase:
      return detail.empty() ? "UnsupportedCase" : "UnsupportedCase (" + detail + ")";
  }
  return "Unknown";
}

Feasibility check_feasibility(const Params& p) {
  Feasibility f;
  if (p.lambda < 1) {
    f.verdict = Verdict::Infeasible;
    f.detail = "λ must be at least 1";
    return f;
  }
  if (auto why = violated_necessary_condition(p)) {
    f.verdict = Verdict::Infeasible;
    f.detail = *why;
    return f;
  }
  if (p.k < 4 || p.k % 2 != 0) {
    f.detail = "only even k >= 4 is constructed";
    return f;
  }
  if (auto family = exception_family(p)) {
    f.verdict = Verdict::OpenException;
    f.detail = *family;
    return f;
  }
  if (p.k % 4 == 2 && p.lambda % 2 == 1) {
    f.detail = "odd λ with k = 2 mod 4 is not covered";
    return f;
  }
  const auto one = lambda1_plan(p.k, p.u, p.g);
  const auto two = lambda2_plan(p.k, p.u, p.g);
  if (p.lambda % 2 == 0) {
    if (two) {
      f.parts = {*two};
      f.copies = {p.lambda / 2};
    } else if (one) {
      f.parts = {*one};
      f.copies = {p.lambda};
    }
  } else if (one && two && p.lambda > 1) {
    f.parts = {*one, *two};
    f.copies = {1, (p.lambda - 1) / 2};
  } else if (one) {
    f.parts = {*one};
    f.copies = {p.lambda};
  }
  if (f.parts.empty()) {
    f.detail = "no construction pattern matches";
    return f;
  }
  f.verdict = Verdict::Feasible;
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    if (i) f.detail += "+";
    f.detail += f.parts[i].label;
  }
  return f;
}

ExpectedCounts expected_counts(const Params& p) {
  require(violated_necessary_condition(p) == std::nullopt, "expected counts need feasible parameters");
  ExpectedCounts c;
  c.total_factors = static_cast<std::int64_t>(p.lambda) * p.u * (p.g - 1) / 2;
  c.per_hole = static_cast<std::int64_t>(p.lambda) * (p.g - 1) / 2;
  c.edges_per_factor = static_cast<std::int64_t>(p.g) * (p.u - 1);
  return c;
}

// ---- (c) u = 1 mod k, λ = 2 ------------------------------------------------------

Decomposition build_case_u1modk_l2(const Params& p) {
  need(p.lambda == 2 && p.k >= 4 && p.k % 2 == 0 && p.u >= 3 && (p.u - 1) % p.k == 0 && p.g >= 2,
       p, "needs λ = 2, even k, u = 1 mod k, g >= 2");
  return lift_near(near_c2k_factorization_u2(p.k / 2, p.u),
                   ck_factorization_cycle_times_complete(p.k, p.g),
                   share(tensor_complete(p.u, p.g, 2)), "near C_k-factor x K_g");
}

// ---- (a) λ = 1, u = kx + 1 --------------------------------------------------------

Decomposition build_case_l1(const Params& p) {
  need(p.lambda == 1 && p.k % 4 == 0 && p.k >= 4, p, "needs λ = 1 and k = 0 mod 4");
  need(p.u >= 3 && (p.u - 1) % p.k == 0, p, "needs u = 1 mod k");
  need(p.g >= 3 && p.g % 2 == 1, p, "needs odd g >= 3");
  const int x = (p.u - 1) / p.k;
  need(x != 2, p, "x = 2 is excluded");
  const auto inner = partial_ck_factorization_kplus1_times_t(p.k, p.g);
  if (x == 1) return inner;
  return frame_factorization(p.k, x, p.g, inner, ck_factorization_cycle_times_complete(p.k, p.g));
}

// ---- (d) u odd, g = 0 mod k, λ = 2 -------------------------------------------------

Decomposition build_case_uodd_g0modk_l2(const Params& p) {
  need(p.lambda == 2 && p.k >= 4 && p.k % 2 == 0, p, "needs λ = 2 and even k");
  need(p.u >= 3 && p.u % 2 == 1 && p.g % p.k == 0, p, "needs odd u and g = 0 mod k");
  const auto near = near_one_factorization(p.u);
  const auto doubled = ck_factorization_complete_doubled(p.k / 2, p.g);
  const auto pair_block = ck_factorization_cycle_times_complete(p.k, 2);
  Decomposition d;
  d.host = share(tensor_complete(p.u, p.g, 2));
  for (const auto& f : near.factors)
    for (const auto& cf : doubled.factors)
      d.add(edges_times_cycles(f, cf, pair_block, f.hole), "near 1-factor x C_k-factor of K_g(2)");
  return d;
}

// ---- (e), (f) u = 4x, g = ky, λ = 2 ----------------------------------------------

Decomposition build_case_u4x(const Params& p) {
  need(p.lambda == 2 && p.k >= 6 && p.k % 2 == 0, p, "needs λ = 2 and even k >= 6");
  need(p.u % 4 == 0 && p.u != 8 && p.g % p.k == 0, p, "needs u = 4x (x != 2) and g = 0 mod k");
  const int x = p.u / 4, y = p.g / p.k;
  const auto triangles = near_cm_factorization_ms1_doubled(3, 1);
  const auto tri_block = ck_factorization_k3_times_kky(p.k, y);
  Decomposition d;
  d.host = share(tensor_complete(p.u, p.g, 2));

  // Triangle factor j of K_4(2) on X_i, times K_{ky}.
  auto inner = [&](int i, const PartialFactor& tf) {
    std::vector<PartialFactor> out;
    const auto parts = parts_of(tf.cycles.front());
    for (const auto& bf : tri_block.factors)
      out.push_back(relabel(bf, [&](Vertex v) {
        return Vertex{4 * i + parts[static_cast<std::size_t>(v.part)], v.slot};
      }, std::nullopt));
    return out;
  };
  if (x == 1) {
    for (const auto& tf : triangles.factors)
      for (auto& f : inner(0, tf)) {
        f.hole = *tf.hole;
        d.add(std::move(f), "triangle x K_ky");
      }
    return d;
  }

  const auto matchings = partial_one_factorization_multipartite(x, 4);
  const auto doubled = ck_factorization_complete_doubled(p.k / 2, p.g);
  const auto pair_block = ck_factorization_cycle_times_complete(p.k, 2);
  // K_x ⊗ K̄_4 vertex (i, w) is part 4i + w of K_u.
  for (int i = 0; i < x; ++i) {
    std::size_t j = 0;
    for (const auto& m : matchings.factors) {
      if (m.hole != i) continue;
      if (j >= triangles.factors.size())
        fail(ErrorKind::ConstructionBug, "more matchings than triangles per hole");
      const auto& tf = triangles.factors[j++];
      const auto in = inner(i, tf);
      // Matching vertices carry the slot w inside the part.
      PartialFactor flat;
      flat.cycle_length = 2;
      for (const auto& e : m.cycles)
        flat.cycles.push_back(Cycle({{4 * e.vertices()[0].part + e.vertices()[0].slot, 0},
                                     {4 * e.vertices()[1].part + e.vertices()[1].slot, 0}}));
      for (std::size_t l = 0; l < doubled.factors.size(); ++l) {
        const auto outer = edges_times_cycles(flat, doubled.factors[l], pair_block, std::nullopt);
        d.add(unite({outer, in[l]}, 4 * i + *tf.hole), "matching x K_ky(2) with triangle x K_ky");
      }
    }
    if (j != triangles.factors.size())
      fail(ErrorKind::ConstructionBug, "matchings and triangles do not pair up");
  }
  return d;
}

// ---- (g)-(j) prime splits, λ = 2 ---------------------------------------------------

Decomposition build_case_primesplit_l2(const Params& p, const PrimeSplit& split) {
  need(p.lambda == 2 && p.k >= 4 && p.k % 2 == 0 && split.r * split.s == p.k, p,
       "needs λ = 2 and a split of k");
  const int r = split.r, s = split.s, u = p.u, g = p.g;
  const auto which = split_l2_case(p.k, u, g, r);
  if (!which) fail(ErrorKind::UnsupportedBlock, to_string(p) + ": no split pattern matches");
  auto host = share(tensor_complete(u, g, 2));
  switch (*which) {
    case 'g':
      if (r == 2) return build_case_uodd_g0modk_l2(p);
      return lift_near(near_c2k_factorization_u2(r / 2, u), ckt_factorization_cycle_times_s(r, s, g),
                       host, "near C_r-factor x K_g, C_rs-factors");
    case 'h':
      return lift_near(near_cm_factorization_ms1_doubled(r, (u - 1) / r),
                       cycle_times_complete_factorization(r, g, s), host,
                       "near C_r-factor x K_g, C_rs-factors");
    case 'i':
      return lift_near(near_c2k_factorization_u2(r / 2, u), blown_cycle_factorization(r, s, g / s),
                       host, "near C_r-factor x K_g, blown C_rs-factors");
    default:
      break;
  }
  // 'j': g = s mod 2s.
  if (r > 2)
    return lift_near(near_c2k_factorization_u2(r / 2, u), cycle_times_complete_factorization(r, g, s),
                     host, "near C_r-factor x K_g, C_rs-factors");
  const auto near = near_one_factorization(u);
  const auto cs = cs_factorization_complete(s, g);
  const auto pair_block = hamilton_decomp_cycle_times_complete(s, 2);
  Decomposition d;
  d.host = host;
  for (const auto& f : near.factors)
    for (int copy = 0; copy < 2; ++copy)
      for (const auto& cf : cs.factors)
        d.add(edges_times_cycles(f, cf, pair_block, f.hole), "near 1-factor x C_s-factor, C_2s");
  return d;
}

// ---- (b) prime split, λ = 1 ----------------------------------------------------------

Decomposition build_case_primesplit_l1(const Params& p, const PrimeSplit& split) {
  need(p.lambda == 1 && split.r * split.s == p.k, p, "needs λ = 1 and a split of k");
  const int r = split.r, s = split.s;
  need(r % 4 == 0 && s >= 3 && s % 2 == 1, p, "needs r = 0 mod 4 and odd s >= 3");
  need(p.u >= 3 && (p.u - 1) % r == 0 && (p.u - 1) / r != 2, p, "needs u = rx + 1, x != 2");
  need(p.g % (2 * s) == s, p, "needs g = s mod 2s");
  const int x = (p.u - 1) / r, m = p.g / s;
  auto host = share(tensor_complete(p.u, p.g, 1));

  // Coarse part on K_u x K_m (C_r cycles), blown by K̄_s.
  Decomposition coarse;
  if (m >= 3) {
    const auto inner = partial_ck_factorization_kplus1_times_t(r, m);
    coarse = x == 1 ? inner
                    : frame_factorization(r, x, m, inner, ck_factorization_cycle_times_complete(r, m));
  }
  // Holes: m copies of K_u x K_s with C_rs cycles.
  const auto lifted = partial_ckt_factorization_kplus1_times_t(r, s);
  const auto fill = x == 1 ? lifted
                           : frame_factorization(r, x, s, lifted, ckt_factorization_cycle_times_t(r, s));
  return blow_and_fill(coarse, s, fill, m, std::move(host));
}

// ---- dispatcher ------------------------------------------------------------------------

FeasibilityError::FeasibilityError(Feasibility f)
    : Error(f.verdict == Verdict::OpenException ? ErrorKind::ExceptionalCase
            : f.verdict == Verdict::UnsupportedCase ? ErrorKind::UnsupportedBlock
                                                    : ErrorKind::ParameterDomain,
            f.describe()),
      f_(std::move(f)) {}

namespace {

Decomposition build_plan(const Params& base, const CasePlan& plan) {
  switch (plan.label) {
    case 'a': return build_case_l1(base);
    case 'b': return build_case_primesplit_l1(base, *plan.split);
    case 'c': return build_case_u1modk_l2(base);
    case 'd': return build_case_uodd_g0modk_l2(base);
    case 'e':
    case 'f': return build_case_u4x(base);
    default: return build_case_primesplit_l2(base, *plan.split);
  }
}

}  // namespace

Decomposition build_arcs(const Params& p, bool verify) {
  auto feas = check_feasibility(p);
  if (feas.verdict != Verdict::Feasible) throw FeasibilityError(std::move(feas));
  Decomposition d;
  d.host = share(tensor_complete(p.u, p.g, p.lambda));
  for (std::size_t i = 0; i < feas.parts.size(); ++i) {
    const auto& plan = feas.parts[i];
    const Params base{plan.lambda, p.k, p.u, p.g};
    const auto one = build_plan(base, plan);
    const std::string tag = std::string("case ") + plan.label + ": ";
    for (int c = 0; c < feas.copies[i]; ++c)
      for (std::size_t f = 0; f < one.factors.size(); ++f)
        d.add(one.factors[f], tag + one.provenance[f]);
  }
  if (verify)
    if (auto report = verify_arcs(d, p); !report)
      fail(ErrorKind::ConstructionBug, to_string(p) + " failed verification: " + report.describe());
  return d;
}

}  // namespace cycleframe
