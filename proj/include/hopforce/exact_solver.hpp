#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hopforce/graph.hpp"
#include "hopforce/hop_engine.hpp"

namespace hopforce {

inline constexpr std::size_t kDefaultSolverLimit = 24;

// Vertex cap for the exhaustive solver: HOPFORCE_SOLVER_LIMIT if set,
// otherwise 24. Never above 64 (states are 64-bit masks).
std::size_t solver_limit();

struct ExactResult {
  std::size_t hopping_number = 0;
  VertexSet optimal_blue;
  std::vector<Hop> trace;
};

// Depth-first search over game states (blue, extinct), memoised across every
// initial set examined by the same solver instance.
class ExactSolver {
 public:
  explicit ExactSolver(const Graph& g, std::size_t limit = solver_limit());

  bool is_feasible(const VertexSet& initial_blue);

  // A hop sequence that colours everything blue, if one exists.
  std::optional<std::vector<Hop>> winning_trace(const VertexSet& initial_blue);

  ExactResult solve();

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    std::uint64_t blue;
    std::uint64_t extinct;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.blue * 0x9e3779b97f4a7c15ULL ^ k.extinct);
    }
  };

  bool feasible(std::uint64_t blue, std::uint64_t extinct);
  std::uint64_t mask_of(const VertexSet& s) const;

  const Graph* graph_;
  std::size_t n_;
  std::uint64_t all_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint64_t> second_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

bool is_feasible(const Graph& g, const VertexSet& initial_blue);
std::size_t hopping_number(const Graph& g);
ExactResult solve_exact(const Graph& g);

struct Partition {
  VertexSet s;  // extinct after the replayed prefix
  VertexSet t;  // still white
  VertexSet u;  // everything else
};

// Replays floor((n-k)/2) hops of a successful run from an initial set of size
// k. No edge joins S and T. When n-k is odd, |T| = |S| + 1.
Partition partition_witness(const Graph& g, const VertexSet& initial_blue, std::span<const Hop> trace);

}  // namespace hopforce
