#include "hopforce/strategies.hpp"

#include <algorithm>
#include <optional>

#include "hopforce/errors.hpp"

namespace hopforce {

HamiltonRun hamilton_hop_strategy(const ContiguousGraph& cg) {
  const Graph& g = cg.graph;
  const std::size_t n = g.order();
  if (g.degree() < 3) throw ConfigError("Hamilton-hop strategy needs d >= 3");
  const auto& order = cg.hamilton_order;

  HamiltonRun run;
  StrategyResult& res = run.result;
  res.b1 = VertexSet(n);
  std::vector<char> blue(n, 0);
  auto charge = [&](VertexId v) {
    if (blue[v]) return;
    blue[v] = 1;
    res.b1.insert(v);
  };

  charge(order[0]);
  for (VertexId u : g.neighbors(order[0])) charge(u);

  // 0-based: step i moves v_{i+1} = order[i] through order[i + 1].
  const std::size_t steps = n >= 3 ? n - 3 : 0;
  run.failed.assign(steps, 0);
  for (std::size_t i = 0; i < steps; ++i) {
    const VertexId source = order[i];
    const VertexId through = order[i + 1];
    const VertexId next = order[i + 2];

    std::optional<VertexId> target;
    if (!blue[next]) {
      target = next;
    } else {
      VertexId best = static_cast<VertexId>(n);
      for (VertexId w : cg.rg_neighbors(through))
        if (!blue[w] && w < best) best = w;
      if (best < n) target = best;
    }

    if (target) {
      blue[*target] = 1;
      res.hops.push_back({source, *target});
    } else {
      run.failed[i] = 1;
      ++res.failed_attempts;
    }
    for (VertexId u : g.neighbors(through)) charge(u);
  }

  res.b1_size = res.b1.size();
  res.success = std::all_of(blue.begin(), blue.end(), [](char c) { return c != 0; });
  return run;
}

namespace {

// Vertices bucketed by unmatched degree with O(1) uniform pick and move.
class DegreeBuckets {
 public:
  DegreeBuckets(std::size_t n, int max_degree) : members_(max_degree + 1), slot_(n, 0), degree_(n, 0) {}

  void set(VertexId v, int degree) {
    if (degree_[v] > 0) remove(v);
    degree_[v] = degree;
    if (degree > 0) {
      slot_[v] = members_[degree].size();
      members_[degree].push_back(v);
    }
  }

  std::size_t count(int degree) const { return members_[degree].size(); }

  VertexId pick(int degree, Rng& rng) const {
    const auto& bucket = members_[degree];
    return bucket[uniform_index(rng, bucket.size())];
  }

 private:
  void remove(VertexId v) {
    auto& bucket = members_[degree_[v]];
    const VertexId last = bucket.back();
    bucket[slot_[v]] = last;
    slot_[last] = slot_[v];
    bucket.pop_back();
  }

  std::vector<std::vector<VertexId>> members_;
  std::vector<std::size_t> slot_;
  std::vector<int> degree_;
};

}  // namespace

GreedyRun degree_greedy_strategy(std::size_t n, Rng& rng, bool validate) {
  constexpr int kDegree = 3;
  if ((n * kDegree) % 2 != 0) throw ConfigError("degree-greedy needs 3n even");

  LazyPairing pairing(n, kDegree);
  DegreeBuckets buckets(n, kDegree);
  for (VertexId v = 0; v < n; ++v) buckets.set(v, kDegree);

  GreedyRun run;
  StrategyResult& res = run.result;
  res.b1 = VertexSet(n);
  std::vector<char> blue(n, 0);
  std::array<std::size_t, 4> census{0, 0, 0, n};

  auto charge = [&](VertexId v) {
    if (blue[v]) return;
    blue[v] = 1;
    res.b1.insert(v);
  };
  auto recount = [&](VertexId v, int before) {
    const int now = static_cast<int>(pairing.unmatched_in(v));
    --census[before];
    ++census[now];
    buckets.set(v, now);
  };
  // Matches point p and keeps the census and buckets in sync; returns the
  // vertex owning the mate.
  auto expose = [&](PointId p) {
    const VertexId a = pairing.bucket_of(p);
    const int a_before = static_cast<int>(pairing.unmatched_in(a));
    const VertexId b = pairing.bucket_of(pairing.expose(p, rng));
    recount(a, a_before);
    if (b != a) recount(b, static_cast<int>(pairing.unmatched_in(b)) + 1);
    return b;
  };

  run.trajectory.steps.push_back({0, census, 0, 0, false, false});

  std::vector<VertexId> candidates;
  for (std::size_t t = 1;; ++t) {
    int r = 0;
    for (int k = 1; k <= kDegree; ++k)
      if (buckets.count(k) > 0) {
        r = k;
        break;
      }
    if (r == 0) break;
    const bool degree_one_available = buckets.count(1) > 0;
    const VertexId alpha = buckets.pick(r, rng);
    charge(alpha);

    // Expose every remaining point of alpha; new neighbours turn blue.
    candidates.clear();
    while (pairing.unmatched_in(alpha) > 0) {
      const VertexId u = expose(pairing.unmatched_point_of(alpha));
      if (u == alpha) continue;  // loop: nothing to hop through
      charge(u);
      if (std::find(candidates.begin(), candidates.end(), u) == candidates.end()) candidates.push_back(u);
    }

    // Probe neighbours with fewer unmatched points first (ties uniformly),
    // and each neighbour point by point, until a white vertex turns up.
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::stable_sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
      return pairing.unmatched_in(a) < pairing.unmatched_in(b);
    });
    bool hopped = false;
    for (VertexId u : candidates) {
      while (!hopped && pairing.unmatched_in(u) > 0) {
        const VertexId w = expose(pairing.unmatched_point_of(u));
        if (!blue[w]) {
          blue[w] = 1;
          res.hops.push_back({alpha, w});
          hopped = true;
        }
      }
      if (hopped) break;
    }
    if (!hopped) ++res.failed_attempts;

    run.trajectory.steps.push_back({t, census, res.hops.size(), r, degree_one_available, hopped});
  }

  res.b1_size = res.b1.size();
  res.success = std::all_of(blue.begin(), blue.end(), [](char c) { return c != 0; });

  run.graph = pairing_to_graph(std::move(pairing).finish(rng));
  if (validate) {
    HopState state(run.graph, res.b1);
    for (const Hop& h : res.hops) {
      if (state.illegal_reason(h.source, h.target)) {
        ++run.replay_failures;
        continue;
      }
      state.apply_hop(h.source, h.target);
    }
    if (!state.complete()) ++run.replay_failures;
  }
  return run;
}

}  // namespace hopforce
