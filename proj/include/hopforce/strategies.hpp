#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hopforce/graph.hpp"
#include "hopforce/hop_engine.hpp"
#include "hopforce/random_models.hpp"
#include "hopforce/rng.hpp"

namespace hopforce {

struct StrategyResult {
  VertexSet b1;
  std::size_t b1_size = 0;
  std::vector<Hop> hops;
  // Steps at which the designated vertex could not hop.
  std::size_t failed_attempts = 0;
  bool success = false;
};

struct HamiltonRun {
  StrategyResult result;
  // failed[t-1] == 1 iff v_t could not hop through v_{t+1}, t = 1..n-3.
  std::vector<std::uint8_t> failed;
};

// Online strategy on the contiguous model: v_1 and its neighbours start blue;
// for t = 1..n-3, v_t hops through v_{t+1} to v_{t+2} if white, otherwise to
// the lowest-indexed white RG-neighbour of v_{t+1}; then the remaining white
// neighbours of v_{t+1} are added to B_1.
HamiltonRun hamilton_hop_strategy(const ContiguousGraph& cg);

// Census after a step: census[i] = number of vertices with i unmatched points.
struct GreedyStep {
  std::size_t t = 0;
  std::array<std::size_t, 4> census{};
  std::size_t hops_so_far = 0;
  int selected_degree = 0;    // unmatched degree of alpha_t (0 for the initial record)
  bool degree_one_available = false;  // Y_1 > 0 when alpha_t was chosen
  bool hopped = false;
};

struct GreedyTrajectory {
  std::vector<GreedyStep> steps;  // steps[0] is the state before any step
};

struct GreedyRun {
  StrategyResult result;
  GreedyTrajectory trajectory;
  Graph graph;  // realised multigraph once every point is matched
  std::size_t replay_failures = 0;
};

// Degree-greedy process for random cubic graphs on a lazily exposed pairing.
// Each step takes a uniform vertex of minimum positive unmatched degree,
// exposes its remaining points (new white neighbours join B_1) and tries a
// single hop through its neighbours. When `validate` is set the resulting
// (B_1, hops) is replayed on the realised graph through the hop engine.
GreedyRun degree_greedy_strategy(std::size_t n, Rng& rng, bool validate = true);

}  // namespace hopforce
