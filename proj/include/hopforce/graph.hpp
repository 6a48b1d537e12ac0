#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace hopforce {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
};

// Dense bitset over vertex indices [0, n). Membership and insertion are O(1);
// the population count is maintained incrementally.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
  bool insert(VertexId v);
  bool erase(VertexId v);

  std::vector<VertexId> members() const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Constant-degree (multi)graph. Adjacency is stored as a multiset per vertex:
// a parallel edge repeats the neighbour and a loop lists the vertex twice, so
// every vertex of a d-regular graph has exactly d entries. The declared degree
// is kept even when the graph turns out not to be regular (see is_regular).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::size_t degree, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t degree() const { return degree_; }
  std::size_t edge_count() const { return edge_count_; }
  bool is_simple() const { return simple_; }

  // Every vertex has exactly degree() endpoints (loops count twice).
  bool is_regular() const;

  std::size_t endpoint_count(VertexId v) const;

  // Multiset of neighbour entries, loops included; sorted.
  std::span<const VertexId> adjacency(VertexId v) const;

  // Distinct neighbours, sorted, never containing v itself.
  std::span<const VertexId> neighbors(VertexId v) const;

  // Vertices at distance exactly two, sorted.
  std::vector<VertexId> second_neighborhood(VertexId v) const;

  bool adjacent(VertexId u, VertexId v) const;

  // Each edge once, loops as (v, v), parallel edges repeated.
  std::vector<Edge> edges() const;

 private:
  void check_vertex(VertexId v) const;

  std::size_t degree_ = 0;
  std::size_t edge_count_ = 0;
  bool simple_ = true;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<std::size_t> distinct_offsets_;
  std::vector<VertexId> distinct_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

// Number of connected components (plain BFS).
std::size_t component_count(const Graph& g);

// Edge-list text format: first line "n d", then one "u v" line per edge.
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g,
                     std::optional<std::span<const VertexId>> hamilton_order = std::nullopt);

}  // namespace hopforce
