#include "cycleframe/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cycleframe {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Backtracking over cycles. Each cycle starts at the lowest uncovered vertex of
// the current factor and is closed only when its second vertex is smaller than
// its last, so every cycle is generated once. Factors with equal spans are
// ordered by the smaller neighbour of their common minimum vertex.
class CycleFactorSearch {
 public:
  CycleFactorSearch(const CycleFactorProblem& p, std::uint64_t budget)
      : p_(p), n_(p.num_vertices), len_(p.cycle_length), budget_(budget),
        mult_(p.multiplicity), adj_(static_cast<std::size_t>(n_), 0),
        solution_(p.spans.size()), first_neighbor_(p.spans.size(), -1) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (a != b && mult_[idx(a, b)] > 0) adj_[static_cast<std::size_t>(a)] |= bit(b);
  }

  CycleFactorOutcome run() {
    CycleFactorOutcome out;
    bool found = p_.spans.empty() || start_cycle(0, 0);
    out.nodes = nodes_;
    if (found) {
      out.status = SearchStatus::Found;
      out.factors = solution_;
    } else {
      out.status = aborted_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return out;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

  void use(int a, int b) {
    if (--mult_[idx(a, b)] == 0) {
      adj_[static_cast<std::size_t>(a)] &= ~bit(b);
      adj_[static_cast<std::size_t>(b)] &= ~bit(a);
    }
    mult_[idx(b, a)] = mult_[idx(a, b)];
  }

  void unuse(int a, int b) {
    if (mult_[idx(a, b)]++ == 0) {
      adj_[static_cast<std::size_t>(a)] |= bit(b);
      adj_[static_cast<std::size_t>(b)] |= bit(a);
    }
    mult_[idx(b, a)] = mult_[idx(a, b)];
  }

  // Every uncovered vertex of the current factor still needs enough live edges.
  bool feasible(std::size_t f, std::uint64_t covered) const {
    const std::uint64_t open_set = p_.spans[f] & ~covered;
    std::uint64_t reachable = open_set;
    if (!path_.empty()) reachable |= bit(path_.front()) | bit(path_.back());
    const int need = len_ == 2 ? 1 : 2;
    for (std::uint64_t rest = open_set; rest; rest &= rest - 1) {
      const int y = std::countr_zero(rest);
      if (std::popcount(adj_[static_cast<std::size_t>(y)] & reachable & ~bit(y)) < need)
        return false;
    }
    return true;
  }

  bool start_cycle(std::size_t f, std::uint64_t covered) {
    if (covered == p_.spans[f]) {
      if (f + 1 == p_.spans.size()) return true;
      return start_cycle(f + 1, 0);
    }
    const int v = std::countr_zero(p_.spans[f] & ~covered);
    path_.assign(1, v);
    const bool ok = extend(f, covered | bit(v));
    if (!ok) path_.clear();
    return ok;
  }

  bool close_and_continue(std::size_t f, std::uint64_t covered) {
    solution_[f].push_back(path_);
    path_.clear();
    if (start_cycle(f, covered)) return true;
    path_ = solution_[f].back();
    solution_[f].pop_back();
    return false;
  }

  bool extend(std::size_t f, std::uint64_t covered) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const int w = path_.back();
    const int v0 = path_.front();
    const int length = static_cast<int>(path_.size());

    if (len_ == 2 && length == 2) return close_and_continue(f, covered);
    if (length == len_) {
      if (!(adj_[static_cast<std::size_t>(w)] & bit(v0)) || path_[1] > path_.back()) return false;
      use(w, v0);
      if (close_and_continue(f, covered)) return true;
      unuse(w, v0);
      return false;
    }

    std::uint64_t cand = adj_[static_cast<std::size_t>(w)] & p_.spans[f] & ~covered;
    const bool first_step_of_factor = length == 1 && solution_[f].empty();
    int min_first = -1;
    if (first_step_of_factor && f > 0 && p_.spans[f] == p_.spans[f - 1])
      min_first = first_neighbor_[f - 1];
    if (len_ > 2 && length == len_ - 1) cand &= adj_[static_cast<std::size_t>(v0)] | bit(v0);

    for (; cand; cand &= cand - 1) {
      const int x = std::countr_zero(cand);
      if (x < min_first) continue;
      if (len_ > 2 && length == len_ - 1 && !(adj_[static_cast<std::size_t>(x)] & bit(v0)))
        continue;
      use(w, x);
      path_.push_back(x);
      if (first_step_of_factor) first_neighbor_[f] = x;
      const std::uint64_t next = covered | bit(x);
      if (feasible(f, next) && extend(f, next)) return true;
      path_.pop_back();
      unuse(w, x);
      if (aborted_) return false;
    }
    return false;
  }

  const CycleFactorProblem& p_;
  int n_;
  int len_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> mult_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> path_;
  std::vector<std::vector<std::vector<int>>> solution_;
  std::vector<int> first_neighbor_;
};

}  // namespace

CycleFactorOutcome search_cycle_factors(const CycleFactorProblem& problem,
                                        std::uint64_t node_budget) {
  require(problem.num_vertices >= 1 && problem.num_vertices <= 64,
          "exact cover search handles at most 64 vertices");
  require(problem.cycle_length >= 2, "cycle length must be at least 2");
  require(problem.multiplicity.size() ==
              static_cast<std::size_t>(problem.num_vertices * problem.num_vertices),
          "multiplicity matrix has the wrong size");
  for (auto span : problem.spans)
    if (span == 0 || std::popcount(span) % problem.cycle_length != 0) {
      CycleFactorOutcome out;
      out.status = SearchStatus::Exhausted;
      return out;
    }
  return CycleFactorSearch(problem, node_budget).run();
}

std::optional<Decomposition> search_decomposition(std::shared_ptr<const MultiGraph> host,
                                                  int cycle_length,
                                                  const std::vector<std::optional<int>>& holes,
                                                  std::uint64_t node_budget, SearchStatus* status,
                                                  std::uint64_t* nodes) {
  const int n = host->num_vertices();
  require(n <= 64, "exact cover search handles at most 64 vertices");
  CycleFactorProblem problem;
  problem.num_vertices = n;
  problem.cycle_length = cycle_length;
  problem.multiplicity.assign(static_cast<std::size_t>(n * n), 0);
  for (const auto& [e, m] : host->edges()) {
    const int a = host->index(e.first), b = host->index(e.second);
    problem.multiplicity[static_cast<std::size_t>(a * n + b)] = m;
    problem.multiplicity[static_cast<std::size_t>(b * n + a)] = m;
  }
  for (const auto& hole : holes) {
    std::uint64_t span = 0;
    for (int i = 0; i < n; ++i)
      if (!hole || host->vertex(i).part != *hole) span |= bit(i);
    problem.spans.push_back(span);
  }
  // Group equal spans so the ordering symmetry applies.
  std::vector<std::size_t> order(holes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return holes[a].value_or(-1) < holes[b].value_or(-1);
  });
  CycleFactorProblem sorted = problem;
  for (std::size_t i = 0; i < order.size(); ++i) sorted.spans[i] = problem.spans[order[i]];

  auto outcome = search_cycle_factors(sorted, node_budget);
  if (status) *status = outcome.status;
  if (nodes) *nodes = outcome.nodes;
  if (outcome.status != SearchStatus::Found) return std::nullopt;

  Decomposition d;
  d.host = std::move(host);
  std::vector<PartialFactor> factors(holes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    PartialFactor pf;
    pf.hole = holes[order[i]];
    pf.cycle_length = cycle_length;
    for (const auto& cyc : outcome.factors[i]) {
      std::vector<Vertex> vs;
      for (int v : cyc) vs.push_back(d.host->vertex(v));
      pf.cycles.emplace_back(std::move(vs));
    }
    pf.normalize();
    factors[order[i]] = std::move(pf);
  }
  for (auto& f : factors) d.add(std::move(f), "search");
  return d;
}

// ---- distance-vector transversals -------------------------------------------

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const TransversalProblem& p, std::uint64_t budget)
      : p_(p), budget_(budget), count_(p.values.size()),
        used_(static_cast<std::size_t>(p.length), 0),
        vectors_(count_, DistanceVector{std::vector<int>(static_cast<std::size_t>(p.length), 0)}) {}

  std::optional<std::vector<DistanceVector>> run() {
    for (std::size_t i = 0; i < count_; ++i) {
      vectors_[i].distances[0] = signed_value(0, p_.values[i]);
      used_[0] |= bit(p_.values[i]);
    }
    if (fill(0, 1, first_entry(0))) return vectors_;
    return std::nullopt;
  }

 private:
  int mod(int x) const { return ((x % p_.modulus) + p_.modulus) % p_.modulus; }
  int signed_value(int pos, int v) const {
    return p_.signs.empty() ? v : mod(p_.signs[static_cast<std::size_t>(pos)] * v);
  }
  int first_entry(std::size_t vec) const {
    return vec < count_ ? vectors_[vec].distances[0] : 0;
  }

  bool fill(std::size_t vec, int pos, int partial_sum) {
    if (vec == count_) return true;
    if (++nodes_ > budget_) return false;
    if (pos == p_.length) {
      if (!p_.accept_sum(mod(partial_sum))) return false;
      const std::size_t next = vec + 1;
      return fill(next, 1, first_entry(next));
    }
    const int first = p_.values[vec];
    const int preferred =
        (p_.signs.empty() && p_.length % 2 == 0 && pos % 2 == 1) ? mod(-first) : first;
    std::vector<int> order;
    order.reserve(p_.values.size());
    order.push_back(preferred);
    for (int v : p_.values)
      if (v != preferred) order.push_back(v);
    auto& mask = used_[static_cast<std::size_t>(pos)];
    for (int v : order) {
      if (std::find(p_.values.begin(), p_.values.end(), v) == p_.values.end()) continue;
      if (mask & bit(v)) continue;
      mask |= bit(v);
      const int entry = signed_value(pos, v);
      vectors_[vec].distances[static_cast<std::size_t>(pos)] = entry;
      if (fill(vec, pos + 1, partial_sum + entry)) return true;
      mask &= ~bit(v);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const TransversalProblem& p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t count_;
  std::vector<std::uint64_t> used_;
  std::vector<DistanceVector> vectors_;
};

}  // namespace

std::optional<std::vector<DistanceVector>> find_distance_transversal(
    const TransversalProblem& problem, std::uint64_t node_budget) {
  require(problem.length >= 2, "transversal vectors need length >= 2");
  require(problem.modulus >= 1 && problem.modulus <= 64, "modulus must lie in [1, 64]");
  for (int v : problem.values) require(v >= 0 && v < problem.modulus, "value out of range");
  require(static_cast<bool>(problem.accept_sum), "missing sum predicate");
  require(problem.signs.empty() || static_cast<int>(problem.signs.size()) == problem.length,
          "one sign per position");
  return TransversalSearch(problem, node_budget).run();
}

// ---- rotational bases ---------------------------------------------------------

namespace {

class DifferenceSearch {
 public:
  DifferenceSearch(const DifferenceProblem& p, std::uint64_t budget)
      : p_(p), n_(p.modulus), budget_(budget),
        class_left_(static_cast<std::size_t>(n_ / 2 + 1), p.class_multiplicity),
        used_(static_cast<std::size_t>(n_ + 1), false) {
    for (int x : p.excluded) used_[static_cast<std::size_t>(x)] = true;
    if (!p.with_infinity) used_[static_cast<std::size_t>(n_)] = true;
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (next_cycle()) return cycles_;
    return std::nullopt;
  }

 private:
  int diff_class(int a, int b) const {
    const int d = ((a - b) % n_ + n_) % n_;
    return std::min(d, n_ - d);
  }
  bool is_inf(int v) const { return v == n_; }

  bool edge_ok(int a, int b) const {
    if (is_inf(a) || is_inf(b)) return true;
    return class_left_[static_cast<std::size_t>(diff_class(a, b))] > 0;
  }
  void take(int a, int b, int delta) {
    if (is_inf(a) || is_inf(b)) return;
    class_left_[static_cast<std::size_t>(diff_class(a, b))] += delta;
  }

  bool next_cycle() {
    int start = -1;
    for (int v = 0; v <= n_; ++v)
      if (!used_[static_cast<std::size_t>(v)]) {
        start = v;
        break;
      }
    if (start < 0) return true;
    used_[static_cast<std::size_t>(start)] = true;
    path_.assign(1, start);
    if (extend()) return true;
    used_[static_cast<std::size_t>(start)] = false;
    path_.clear();
    return false;
  }

  bool extend() {
    if (++nodes_ > budget_) return false;
    const int w = path_.back();
    if (static_cast<int>(path_.size()) == p_.cycle_length) {
      const int v0 = path_.front();
      if (path_[1] > path_.back() || !edge_ok(w, v0)) return false;
      take(w, v0, -1);
      cycles_.push_back(path_);
      const auto saved = path_;
      if (next_cycle()) return true;
      path_ = saved;
      cycles_.pop_back();
      take(w, v0, +1);
      return false;
    }
    for (int x = 0; x <= n_; ++x) {
      if (used_[static_cast<std::size_t>(x)] || !edge_ok(w, x)) continue;
      take(w, x, -1);
      used_[static_cast<std::size_t>(x)] = true;
      path_.push_back(x);
      if (extend()) return true;
      path_.pop_back();
      used_[static_cast<std::size_t>(x)] = false;
      take(w, x, +1);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const DifferenceProblem& p_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> class_left_;
  std::vector<bool> used_;
  std::vector<int> path_;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_difference_base(const DifferenceProblem& problem,
                                                                  std::uint64_t node_budget) {
  require(problem.modulus >= 3 && problem.modulus % 2 == 1, "difference modulus must be odd");
  require(problem.cycle_length >= 3, "cycle length must be at least 3");
  int vertices = problem.modulus - static_cast<int>(problem.excluded.size()) +
                 (problem.with_infinity ? 1 : 0);
  if (vertices % problem.cycle_length != 0) return std::nullopt;
  return DifferenceSearch(problem, node_budget).run();
}

}  // namespace cycleframe
