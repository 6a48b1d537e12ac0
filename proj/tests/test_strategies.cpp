#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hopforce/errors.hpp"
#include "hopforce/strategies.hpp"

using namespace hopforce;

TEST_CASE("Hamilton-hop output replays to a complete colouring") {
  Rng rng = make_stream(41, 0);
  for (std::size_t d : {3u, 4u, 5u}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = 10 + 2 * uniform_index(rng, 40);
      const ContiguousGraph cg = sample_contiguous(n, d, rng);
      const HamiltonRun run = hamilton_hop_strategy(cg);
      const StrategyResult& r = run.result;
      CHECK(r.success);
      CHECK(r.b1_size == r.b1.size());
      CHECK(r.b1_size + r.hops.size() == n);
      CHECK(r.failed_attempts + r.hops.size() == n - 3);
      HopState end(cg.graph, r.b1);
      for (const Hop& h : r.hops) {
        const auto why = end.illegal_reason(h.source, h.target);
        REQUIRE_MESSAGE(!why, *why);
        end.apply_hop(h.source, h.target);
      }
      CHECK(end.complete());
    }
  }
}

TEST_CASE("Hamilton-hop prefers the next cycle vertex") {
  // Whenever v_t does not hop to v_{t+2}, that vertex was already blue: in B_1
  // or the target of an earlier hop.
  Rng rng = make_stream(42, 0);
  const std::size_t n = 200;
  const ContiguousGraph cg = sample_contiguous(n, 3, rng);
  const HamiltonRun run = hamilton_hop_strategy(cg);
  VertexSet reached = run.result.b1;
  std::size_t h = 0;
  for (std::size_t i = 0; i + 3 < n; ++i) {
    const VertexId next = cg.hamilton_order[i + 2];
    if (run.failed[i]) {
      CHECK(reached.contains(next));
      continue;
    }
    const Hop& hop = run.result.hops[h++];
    CHECK(hop.source == cg.hamilton_order[i]);
    if (hop.target != next) CHECK(reached.contains(next));
    reached.insert(hop.target);
  }
}

TEST_CASE("d = 3 Hamilton-hop failure count matches the exact expectation") {
  // P(v_t fails) = t^2 / ((n-1)(n-3)); compare with the direct sum.
  const std::size_t n = 400;
  double expected = 0.0;
  for (std::size_t t = 1; t <= n - 3; ++t)
    expected += static_cast<double>(t * t) / static_cast<double>((n - 1) * (n - 3));
  Rng rng = make_stream(43, 0);
  const int trials = 3000;
  double sum = 0.0;
  double sumsq = 0.0;
  for (int i = 0; i < trials; ++i) {
    const HamiltonRun run = hamilton_hop_strategy(sample_contiguous(n, 3, rng));
    const double x = static_cast<double>(run.result.failed_attempts);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sumsq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - expected) < 3.5 * se);
  // The closed form of sum t^2 for t = 1..n-3.
  CHECK(expected * static_cast<double>((n - 1) * (n - 3)) ==
        doctest::Approx(static_cast<double>((n - 3) * (n - 2) * (2 * n - 5)) / 6.0));
}

TEST_CASE("Hamilton-hop rejects d < 3") {
  ContiguousGraph cg;
  cg.graph = cycle_graph(5);
  CHECK_THROWS_AS(hamilton_hop_strategy(cg), ConfigError);
}

TEST_CASE("degree-greedy produces legal hops on the realised graph") {
  Rng rng = make_stream(44, 0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + 2 * uniform_index(rng, 60);
    const GreedyRun run = degree_greedy_strategy(n, rng);
    CHECK(run.replay_failures == 0);
    CHECK(run.result.success);
    CHECK(run.result.b1_size + run.result.hops.size() == n);
    CHECK(run.graph.is_regular());
    CHECK(run.graph.degree() == 3);
  }
}

TEST_CASE("degree-greedy census bookkeeping") {
  Rng rng = make_stream(45, 0);
  const std::size_t n = 2000;
  const GreedyRun run = degree_greedy_strategy(n, rng);
  const auto& steps = run.trajectory.steps;
  REQUIRE(steps.size() > 1);
  CHECK(steps[0].census == std::array<std::size_t, 4>{0, 0, 0, n});
  // The first step exposes all three points of a fresh vertex.
  CHECK(steps[1].selected_degree == 3);
  CHECK(steps[1].census[0] >= 1);
  for (std::size_t k = 1; k < steps.size(); ++k) {
    const auto& c = steps[k].census;
    CHECK(c[0] + c[1] + c[2] + c[3] == n);
    // Points are exposed in pairs.
    CHECK((c[1] + 2 * c[2] + 3 * c[3]) % 2 == 0);
    // The chosen vertex has the smallest positive unmatched degree.
    const auto& prev = steps[k - 1].census;
    int lowest = 0;
    for (int r = 1; r <= 3 && lowest == 0; ++r)
      if (prev[r] > 0) lowest = r;
    CHECK(steps[k].selected_degree == lowest);
    CHECK(steps[k].degree_one_available == (prev[1] > 0));
    CHECK(steps[k].hops_so_far == steps[k - 1].hops_so_far + (steps[k].hopped ? 1 : 0));
  }
  const auto& last = steps.back().census;
  CHECK(last[0] == n);
}

TEST_CASE("degree-greedy is reproducible and rejects odd n") {
  Rng a = make_stream(46, 3);
  Rng b = make_stream(46, 3);
  CHECK(degree_greedy_strategy(500, a).result.hops == degree_greedy_strategy(500, b).result.hops);
  CHECK_THROWS_AS(degree_greedy_strategy(501, a), ConfigError);
}
