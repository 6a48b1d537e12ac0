#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "hopforce/graph.hpp"

namespace hopforce {

enum class VertexStatus { white, dormant, active, extinct };

const char* to_string(VertexStatus s);

struct Hop {
  VertexId source;
  VertexId target;

  friend bool operator==(const Hop&, const Hop&) = default;
};

// State of a sequential hopping game. A value type: copying it forks the game.
//
// Invariants: blue and white partition V, extinct is a subset of blue, no
// edge joins an extinct vertex to a white one, and |extinct| == |trace|.
class HopState {
 public:
  HopState(const Graph& g, VertexSet initial_blue);

  const Graph& graph() const { return *graph_; }
  const VertexSet& initial_blue() const { return initial_blue_; }
  const VertexSet& blue() const { return blue_; }
  const VertexSet& extinct() const { return extinct_; }
  VertexSet white() const { return blue_.complement(); }
  std::size_t white_count() const { return graph_->order() - blue_.size(); }
  const std::vector<Hop>& trace() const { return trace_; }
  std::size_t step() const { return trace_.size(); }
  bool complete() const { return white_count() == 0; }

  bool is_blue(VertexId v) const { return blue_.contains(v); }
  bool is_white(VertexId v) const { return !blue_.contains(v); }
  bool is_extinct(VertexId v) const { return extinct_.contains(v); }

  VertexStatus status(VertexId v) const;
  std::vector<VertexId> active_set() const;
  std::vector<Hop> legal_hops() const;

  // Why (x, y) is not a legal hop, or nullopt if it is.
  std::optional<const char*> illegal_reason(VertexId x, VertexId y) const;

  // Throws HopIllegal when the move breaks the rule.
  void apply_hop(VertexId x, VertexId y);

  // Full O(|E|) check of the invariants above; throws InvariantViolation.
  void check_invariants() const;

  // (blue, extinct) determines every future legal move.
  friend bool operator==(const HopState& a, const HopState& b) {
    return a.graph_ == b.graph_ && a.blue_ == b.blue_ && a.extinct_ == b.extinct_;
  }

 private:
  bool all_neighbors_blue(VertexId v) const;
  bool has_white_second_neighbor(VertexId v) const;

  const Graph* graph_;
  VertexSet initial_blue_;
  VertexSet blue_;
  VertexSet extinct_;
  std::vector<Hop> trace_;
};

HopState apply_hop(HopState s, VertexId x, VertexId y);

// Chooses the next move among the (non-empty) legal ones; returning nullopt
// stops the run early. The engine never breaks ties itself.
using Policy = std::function<std::optional<Hop>(const HopState&, std::span<const Hop>)>;

HopState run_policy(const Graph& g, VertexSet initial_blue, const Policy& policy);

// Policy that always takes the first legal move (sources and targets in
// increasing index order).
Policy first_move_policy();

// Re-applies a recorded trace; throws HopIllegal on the first bad hop.
HopState replay(const Graph& g, VertexSet initial_blue, std::span<const Hop> trace);

// {"initial_blue": [...], "hops": [{"step", "source", "target"}, ...]}
nlohmann::json trace_to_json(const VertexSet& initial_blue, std::span<const Hop> trace);

}  // namespace hopforce
