#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hopforce/graph.hpp"
#include "hopforce/rng.hpp"

namespace hopforce {

using PointId = std::uint32_t;

// A perfect matching on d*n labelled points; point p lives in bucket p / d.
class Pairing {
 public:
  Pairing(std::size_t buckets, std::size_t points_per_bucket, std::vector<PointId> mate);

  std::size_t buckets() const { return buckets_; }
  std::size_t points_per_bucket() const { return per_bucket_; }
  std::size_t point_count() const { return mate_.size(); }
  PointId mate(PointId p) const { return mate_[p]; }
  VertexId bucket_of(PointId p) const { return static_cast<VertexId>(p / per_bucket_); }

 private:
  std::size_t buckets_;
  std::size_t per_bucket_;
  std::vector<PointId> mate_;
};

// Configuration-model pairing whose pairs are revealed on demand. Exposing a
// point matches it with a uniformly random other unmatched point, which gives
// the same law as a uniform perfect matching regardless of exposure order.
class LazyPairing {
 public:
  LazyPairing(std::size_t buckets, std::size_t points_per_bucket);

  std::size_t buckets() const { return buckets_; }
  std::size_t points_per_bucket() const { return per_bucket_; }
  std::size_t unmatched_points() const { return free_.size(); }
  std::size_t unmatched_in(VertexId bucket) const { return unmatched_[bucket]; }
  bool is_matched(PointId p) const { return mate_[p] != kUnmatched; }
  VertexId bucket_of(PointId p) const { return static_cast<VertexId>(p / per_bucket_); }

  // Some unmatched point of the bucket (the lowest-indexed one).
  PointId unmatched_point_of(VertexId bucket) const;
  PointId lowest_unmatched_point() const;

  // Match p (unmatched) to a uniform unmatched point != p; returns the mate.
  PointId expose(PointId p, Rng& rng);

  // Exposes everything left, lowest-indexed point first.
  Pairing finish(Rng& rng) &&;

 private:
  static constexpr PointId kUnmatched = static_cast<PointId>(-1);
  void remove_free(PointId p);

  std::size_t buckets_;
  std::size_t per_bucket_;
  std::vector<PointId> mate_;
  std::vector<PointId> free_;
  std::vector<std::size_t> position_;
  std::vector<std::uint8_t> unmatched_;
};

Pairing sample_pairing(std::size_t n, std::size_t d, Rng& rng);

Graph pairing_to_graph(const Pairing& p);

struct SimpleSample {
  Graph graph;
  std::size_t rejections = 0;
};

// Rejection sampling over pairings: uniform over simple d-regular graphs.
SimpleSample sample_simple_regular_counted(std::size_t n, std::size_t d, Rng& rng);
Graph sample_simple_regular(std::size_t n, std::size_t d, Rng& rng);

enum class EdgeLabel { hamilton, random_part };

struct LabeledEdge {
  Edge edge;
  EdgeLabel label;
};

// Hamilton cycle (v_0, ..., v_{n-1}) plus an independent (d-2)-regular pairing
// on the same vertices. Multi-edges between the two parts are kept.
struct ContiguousGraph {
  Graph graph;
  std::vector<VertexId> hamilton_order;
  std::vector<LabeledEdge> edges;
  // RG-neighbour multiset per vertex (loops listed twice), CSR layout.
  std::vector<std::size_t> rg_offsets;
  std::vector<VertexId> rg_adjacency;

  std::span<const VertexId> rg_neighbors(VertexId v) const {
    return {rg_adjacency.data() + rg_offsets[v], rg_offsets[v + 1] - rg_offsets[v]};
  }
  std::size_t hc_endpoint_count(VertexId v) const;
  std::size_t rg_endpoint_count(VertexId v) const { return rg_offsets[v + 1] - rg_offsets[v]; }
};

ContiguousGraph sample_contiguous(std::size_t n, std::size_t d, Rng& rng);

// Number of cycles (loops and double edges included) of a random 2-regular
// pairing on n buckets, generated by following paths point by point.
std::size_t count_cycles_2regular(std::size_t n, Rng& rng);

// sum_{i=1}^{n} 1/(2n-2i+1) = H_{2n} - H_n / 2.
double expected_cycle_count(std::size_t n);

}  // namespace hopforce
