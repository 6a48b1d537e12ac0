#include "hopforce/random_models.hpp"

#include <stdexcept>
#include <string>

#include "hopforce/errors.hpp"

namespace hopforce {

Pairing::Pairing(std::size_t buckets, std::size_t points_per_bucket, std::vector<PointId> mate)
    : buckets_(buckets), per_bucket_(points_per_bucket), mate_(std::move(mate)) {
  if (mate_.size() != buckets_ * per_bucket_) throw std::invalid_argument("pairing: wrong number of points");
  for (PointId p = 0; p < mate_.size(); ++p) {
    const PointId q = mate_[p];
    if (q >= mate_.size() || q == p || mate_[q] != p)
      throw std::invalid_argument("pairing: mate array is not a fixed-point-free involution");
  }
}

LazyPairing::LazyPairing(std::size_t buckets, std::size_t points_per_bucket)
    : buckets_(buckets), per_bucket_(points_per_bucket) {
  if (per_bucket_ > 255) throw ConfigError("pairing: degree too large");
  const std::size_t points = buckets * points_per_bucket;
  if (points % 2 != 0)
    throw ConfigError("pairing: d*n must be even (n=" + std::to_string(buckets) +
                      ", d=" + std::to_string(points_per_bucket) + ")");
  mate_.assign(points, kUnmatched);
  free_.resize(points);
  position_.resize(points);
  for (PointId p = 0; p < points; ++p) {
    free_[p] = p;
    position_[p] = p;
  }
  unmatched_.assign(buckets, static_cast<std::uint8_t>(points_per_bucket));
}

PointId LazyPairing::unmatched_point_of(VertexId bucket) const {
  const PointId first = static_cast<PointId>(bucket * per_bucket_);
  for (PointId p = first; p < first + per_bucket_; ++p)
    if (mate_[p] == kUnmatched) return p;
  throw std::logic_error("bucket has no unmatched point");
}

PointId LazyPairing::lowest_unmatched_point() const {
  // free_ is not kept sorted, so this is a linear scan.
  PointId best = kUnmatched;
  for (PointId p : free_)
    if (p < best) best = p;
  return best;
}

void LazyPairing::remove_free(PointId p) {
  const std::size_t i = position_[p];
  const PointId last = free_.back();
  free_[i] = last;
  position_[last] = i;
  free_.pop_back();
  --unmatched_[bucket_of(p)];
}

PointId LazyPairing::expose(PointId p, Rng& rng) {
  if (mate_[p] != kUnmatched) throw std::logic_error("expose: point already matched");
  remove_free(p);
  const PointId q = free_[uniform_index(rng, free_.size())];
  remove_free(q);
  mate_[p] = q;
  mate_[q] = p;
  return q;
}

Pairing LazyPairing::finish(Rng& rng) && {
  // Walk points in index order; each unmatched one is exposed in turn, which
  // is the lowest-indexed-first rule.
  for (PointId p = 0; p < mate_.size(); ++p)
    if (mate_[p] == kUnmatched) expose(p, rng);
  return Pairing(buckets_, per_bucket_, std::move(mate_));
}

Pairing sample_pairing(std::size_t n, std::size_t d, Rng& rng) {
  return LazyPairing(n, d).finish(rng);
}

Graph pairing_to_graph(const Pairing& p) {
  std::vector<Edge> edges;
  edges.reserve(p.point_count() / 2);
  for (PointId a = 0; a < p.point_count(); ++a) {
    const PointId b = p.mate(a);
    if (a < b) edges.push_back({p.bucket_of(a), p.bucket_of(b)});
  }
  return Graph(p.buckets(), p.points_per_bucket(), edges);
}

SimpleSample sample_simple_regular_counted(std::size_t n, std::size_t d, Rng& rng) {
  if ((n * d) % 2 != 0) throw ConfigError("simple regular graph needs d*n even");
  if (n <= d) throw ConfigError("simple d-regular graph needs n > d");
  SimpleSample out;
  for (;;) {
    Graph g = pairing_to_graph(sample_pairing(n, d, rng));
    if (g.is_simple()) {
      out.graph = std::move(g);
      return out;
    }
    ++out.rejections;
  }
}

Graph sample_simple_regular(std::size_t n, std::size_t d, Rng& rng) {
  return sample_simple_regular_counted(n, d, rng).graph;
}

std::size_t ContiguousGraph::hc_endpoint_count(VertexId v) const {
  std::size_t count = 0;
  for (const LabeledEdge& e : edges) {
    if (e.label != EdgeLabel::hamilton) continue;
    count += (e.edge.u == v) + (e.edge.v == v);
  }
  return count;
}

ContiguousGraph sample_contiguous(std::size_t n, std::size_t d, Rng& rng) {
  if (d < 3) throw ConfigError("contiguous model needs d >= 3");
  if (n < 3) throw ConfigError("contiguous model needs n >= 3 for a Hamilton cycle");
  if (((d - 2) * n) % 2 != 0) throw ConfigError("contiguous model needs (d-2)*n even");

  ContiguousGraph cg;
  cg.hamilton_order.resize(n);
  for (VertexId v = 0; v < n; ++v) cg.hamilton_order[v] = v;

  std::vector<Edge> all;
  all.reserve(n * d / 2);
  for (VertexId v = 0; v < n; ++v) {
    const Edge e{v, static_cast<VertexId>((v + 1) % n)};
    all.push_back(e);
    cg.edges.push_back({e, EdgeLabel::hamilton});
  }

  const Pairing rg = sample_pairing(n, d - 2, rng);
  std::vector<std::size_t> counts(n, 0);
  for (PointId a = 0; a < rg.point_count(); ++a) {
    const PointId b = rg.mate(a);
    if (a > b) continue;
    const Edge e{rg.bucket_of(a), rg.bucket_of(b)};
    all.push_back(e);
    cg.edges.push_back({e, EdgeLabel::random_part});
    ++counts[e.u];
    ++counts[e.v];
  }
  cg.rg_offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) cg.rg_offsets[v + 1] = cg.rg_offsets[v] + counts[v];
  cg.rg_adjacency.resize(cg.rg_offsets[n]);
  std::vector<std::size_t> fill(cg.rg_offsets.begin(), cg.rg_offsets.end() - 1);
  for (const LabeledEdge& le : cg.edges) {
    if (le.label != EdgeLabel::random_part) continue;
    cg.rg_adjacency[fill[le.edge.u]++] = le.edge.v;
    cg.rg_adjacency[fill[le.edge.v]++] = le.edge.u;
  }
  cg.graph = Graph(n, d, all);
  return cg;
}

std::size_t count_cycles_2regular(std::size_t n, Rng& rng) {
  if (n == 0) return 0;
  LazyPairing pairing(n, 2);
  auto sibling = [](PointId p) { return p ^ 1U; };
  std::size_t cycles = 0;
  PointId next_start = 0;
  while (pairing.unmatched_points() > 0) {
    while (pairing.is_matched(next_start)) ++next_start;
    // Open path with free ends `start_end` and `cursor`; each exposure closes
    // the cycle exactly when it hits start_end.
    const PointId start_end = sibling(next_start);
    PointId cursor = next_start;
    for (;;) {
      const PointId mate = pairing.expose(cursor, rng);
      if (mate == start_end) {
        ++cycles;
        break;
      }
      cursor = sibling(mate);
    }
  }
  return cycles;
}

double expected_cycle_count(std::size_t n) {
  double sum = 0.0;
  // smallest terms first
  for (std::size_t i = 1; i <= n; ++i) sum += 1.0 / static_cast<double>(2 * n - 2 * i + 1);
  return sum;
}

}  // namespace hopforce
