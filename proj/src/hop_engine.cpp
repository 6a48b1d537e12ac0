#include "hopforce/hop_engine.hpp"

#include <string>

#include "hopforce/errors.hpp"

namespace hopforce {

const char* to_string(VertexStatus s) {
  switch (s) {
    case VertexStatus::white: return "white";
    case VertexStatus::dormant: return "dormant";
    case VertexStatus::active: return "active";
    case VertexStatus::extinct: return "extinct";
  }
  return "?";
}

HopState::HopState(const Graph& g, VertexSet initial_blue)
    : graph_(&g), initial_blue_(std::move(initial_blue)), blue_(initial_blue_), extinct_(g.order()) {
  if (initial_blue_.universe() != g.order()) throw std::invalid_argument("initial blue set has the wrong universe");
}

bool HopState::all_neighbors_blue(VertexId v) const {
  for (VertexId u : graph_->neighbors(v))
    if (!blue_.contains(u)) return false;
  return true;
}

bool HopState::has_white_second_neighbor(VertexId v) const {
  // Only called when all neighbours are blue, so any white vertex reached in
  // two steps is at distance exactly two.
  for (VertexId u : graph_->neighbors(v))
    for (VertexId w : graph_->neighbors(u))
      if (w != v && !blue_.contains(w)) return true;
  return false;
}

VertexStatus HopState::status(VertexId v) const {
  if (v >= graph_->order()) throw std::out_of_range("invalid vertex id " + std::to_string(v));
  if (!blue_.contains(v)) return VertexStatus::white;
  if (extinct_.contains(v)) return VertexStatus::extinct;
  if (all_neighbors_blue(v) && has_white_second_neighbor(v)) return VertexStatus::active;
  return VertexStatus::dormant;
}

std::vector<VertexId> HopState::active_set() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph_->order(); ++v)
    if (status(v) == VertexStatus::active) out.push_back(v);
  return out;
}

std::vector<Hop> HopState::legal_hops() const {
  std::vector<Hop> out;
  for (VertexId x : active_set())
    for (VertexId y : graph_->second_neighborhood(x))
      if (!blue_.contains(y)) out.push_back({x, y});
  return out;
}

std::optional<const char*> HopState::illegal_reason(VertexId x, VertexId y) const {
  const std::size_t n = graph_->order();
  if (x >= n || y >= n) return "vertex id out of range";
  if (!blue_.contains(x)) return "source is white";
  if (extinct_.contains(x)) return "source already hopped";
  if (!all_neighbors_blue(x)) return "source has a white neighbour";
  if (blue_.contains(y)) return "target is already blue";
  if (y == x || graph_->adjacent(x, y)) return "target is not at distance two";
  bool via = false;
  for (VertexId u : graph_->neighbors(x))
    if (graph_->adjacent(u, y)) {
      via = true;
      break;
    }
  if (!via) return "target is not at distance two";
  return std::nullopt;
}

void HopState::apply_hop(VertexId x, VertexId y) {
  if (auto why = illegal_reason(x, y))
    throw HopIllegal("illegal hop " + std::to_string(x) + " -> " + std::to_string(y) + ": " + *why);
  blue_.insert(y);
  extinct_.insert(x);
  trace_.push_back({x, y});
}

void HopState::check_invariants() const {
  const std::size_t n = graph_->order();
  if (blue_.universe() != n || extinct_.universe() != n) throw InvariantViolation("set universe mismatch");
  for (VertexId v = 0; v < n; ++v) {
    if (extinct_.contains(v) && !blue_.contains(v)) throw InvariantViolation("extinct vertex is not blue");
    if (!extinct_.contains(v)) continue;
    for (VertexId u : graph_->neighbors(v))
      if (!blue_.contains(u))
        throw InvariantViolation("edge between extinct " + std::to_string(v) + " and white " + std::to_string(u));
  }
  if (extinct_.size() != trace_.size()) throw InvariantViolation("|extinct| != |trace|");
  if (white_count() + trace_.size() != n - initial_blue_.size()) throw InvariantViolation("|W| != |W_1| - |trace|");
}

HopState apply_hop(HopState s, VertexId x, VertexId y) {
  s.apply_hop(x, y);
  return s;
}

HopState run_policy(const Graph& g, VertexSet initial_blue, const Policy& policy) {
  HopState state(g, std::move(initial_blue));
  for (;;) {
    const auto moves = state.legal_hops();
    if (moves.empty()) return state;
    const auto choice = policy(state, moves);
    if (!choice) return state;
    state.apply_hop(choice->source, choice->target);
  }
}

Policy first_move_policy() {
  return [](const HopState&, std::span<const Hop> moves) -> std::optional<Hop> { return moves.front(); };
}

HopState replay(const Graph& g, VertexSet initial_blue, std::span<const Hop> trace) {
  HopState state(g, std::move(initial_blue));
  for (const Hop& h : trace) state.apply_hop(h.source, h.target);
  return state;
}

nlohmann::json trace_to_json(const VertexSet& initial_blue, std::span<const Hop> trace) {
  nlohmann::json hops = nlohmann::json::array();
  std::size_t step = 1;
  for (const Hop& h : trace) hops.push_back({{"step", step++}, {"source", h.source}, {"target", h.target}});
  return {{"initial_blue", initial_blue.members()}, {"hops", std::move(hops)}};
}

}  // namespace hopforce
