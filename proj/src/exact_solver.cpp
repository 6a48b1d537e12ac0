#include "hopforce/exact_solver.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "hopforce/errors.hpp"

namespace hopforce {

std::size_t solver_limit() {
  if (const char* env = std::getenv("HOPFORCE_SOLVER_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw ConfigError(std::string("HOPFORCE_SOLVER_LIMIT is not a number: ") + env);
    return v > 64 ? 64 : static_cast<std::size_t>(v);
  }
  return kDefaultSolverLimit;
}

ExactSolver::ExactSolver(const Graph& g, std::size_t limit) : graph_(&g), n_(g.order()) {
  if (limit > 64) limit = 64;
  if (n_ > limit)
    throw InstanceTooLarge("exact solver: n=" + std::to_string(n_) + " exceeds limit " + std::to_string(limit));
  all_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  neighbors_.assign(n_, 0);
  second_.assign(n_, 0);
  for (VertexId v = 0; v < n_; ++v) {
    for (VertexId u : g.neighbors(v)) neighbors_[v] |= 1ULL << u;
    for (VertexId w : g.second_neighborhood(v)) second_[v] |= 1ULL << w;
  }
}

std::uint64_t ExactSolver::mask_of(const VertexSet& s) const {
  if (s.universe() != n_) throw std::invalid_argument("vertex set universe does not match the graph");
  std::uint64_t m = 0;
  for (VertexId v : s.members()) m |= 1ULL << v;
  return m;
}

bool ExactSolver::feasible(std::uint64_t blue, std::uint64_t extinct) {
  if (blue == all_) return true;
  const Key key{blue, extinct};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = false;
  std::uint64_t sources = blue & ~extinct;
  while (sources && !result) {
    const int x = std::countr_zero(sources);
    sources &= sources - 1;
    if (neighbors_[x] & ~blue) continue;
    std::uint64_t targets = second_[x] & ~blue;
    while (targets) {
      const int y = std::countr_zero(targets);
      targets &= targets - 1;
      if (feasible(blue | (1ULL << y), extinct | (1ULL << x))) {
        result = true;
        break;
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

bool ExactSolver::is_feasible(const VertexSet& initial_blue) { return feasible(mask_of(initial_blue), 0); }

std::optional<std::vector<Hop>> ExactSolver::winning_trace(const VertexSet& initial_blue) {
  std::uint64_t blue = mask_of(initial_blue);
  std::uint64_t extinct = 0;
  if (!feasible(blue, extinct)) return std::nullopt;
  std::vector<Hop> trace;
  while (blue != all_) {
    bool advanced = false;
    std::uint64_t sources = blue & ~extinct;
    while (sources && !advanced) {
      const int x = std::countr_zero(sources);
      sources &= sources - 1;
      if (neighbors_[x] & ~blue) continue;
      std::uint64_t targets = second_[x] & ~blue;
      while (targets) {
        const int y = std::countr_zero(targets);
        targets &= targets - 1;
        if (feasible(blue | (1ULL << y), extinct | (1ULL << x))) {
          trace.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y)});
          blue |= 1ULL << y;
          extinct |= 1ULL << x;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) throw InvariantViolation("exact solver: feasible state without a feasible successor");
  }
  return trace;
}

ExactResult ExactSolver::solve() {
  for (std::size_t k = 0; k <= n_; ++k) {
    // Gosper's hack over k-subsets of n bits, in increasing mask order.
    std::uint64_t subset = k == 0 ? 0 : (k == 64 ? ~0ULL : (1ULL << k) - 1);
    for (;;) {
      if (feasible(subset, 0)) {
        ExactResult r;
        r.hopping_number = k;
        r.optimal_blue = VertexSet(n_);
        for (std::uint64_t m = subset; m; m &= m - 1) r.optimal_blue.insert(static_cast<VertexId>(std::countr_zero(m)));
        r.trace = *winning_trace(r.optimal_blue);
        return r;
      }
      if (k == 0 || k == n_) break;
      const std::uint64_t c = subset & (~subset + 1);
      const std::uint64_t r = subset + c;
      if (r == 0 || (r & ~all_)) break;
      const std::uint64_t next = (((r ^ subset) >> 2) / c) | r;
      if (next & ~all_) break;
      subset = next;
    }
  }
  throw InvariantViolation("exact solver: V itself reported infeasible");
}

bool is_feasible(const Graph& g, const VertexSet& initial_blue) { return ExactSolver(g).is_feasible(initial_blue); }

std::size_t hopping_number(const Graph& g) { return ExactSolver(g).solve().hopping_number; }

ExactResult solve_exact(const Graph& g) { return ExactSolver(g).solve(); }

Partition partition_witness(const Graph& g, const VertexSet& initial_blue, std::span<const Hop> trace) {
  const std::size_t n = g.order();
  const std::size_t k = initial_blue.size();
  if (trace.size() != n - k) throw std::invalid_argument("partition witness needs a successful run (|trace| = n - k)");
  const std::size_t t = (n - k) / 2;
  HopState state(g, initial_blue);
  for (std::size_t i = 0; i < t; ++i) state.apply_hop(trace[i].source, trace[i].target);
  Partition p{state.extinct(), state.white(), VertexSet(n)};
  for (VertexId v = 0; v < n; ++v)
    if (!p.s.contains(v) && !p.t.contains(v)) p.u.insert(v);
  return p;
}

}  // namespace hopforce
