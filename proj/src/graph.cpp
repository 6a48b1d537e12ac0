#include "hopforce/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hopforce/errors.hpp"

namespace hopforce {

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) {
    if (v >= universe) throw std::out_of_range("vertex id " + std::to_string(v) + " outside set universe");
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (VertexId v = 0; v < universe; ++v) s.insert(v);
  return s;
}

bool VertexSet::insert(VertexId v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = 1ULL << (v & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool VertexSet::erase(VertexId v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = 1ULL << (v & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<VertexId>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (VertexId v = 0; v < universe_; ++v)
    if (!contains(v)) out.insert(v);
  return out;
}

Graph::Graph(std::size_t n, std::size_t degree, std::span<const Edge> edges)
    : degree_(degree), edge_count_(edges.size()) {
  std::vector<std::size_t> counts(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint outside [0, n)");
    ++counts[e.u];
    ++counts[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + counts[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
    if (e.u == e.v) simple_ = false;
  }

  distinct_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    VertexId prev = static_cast<VertexId>(-1);
    bool have_prev = false;
    for (auto it = first; it != last; ++it) {
      if (have_prev && *it == prev) {
        if (*it != v) simple_ = false;
        continue;
      }
      have_prev = true;
      prev = *it;
      if (*it != v) distinct_.push_back(*it);
    }
    distinct_offsets_[v + 1] = distinct_.size();
  }
}

void Graph::check_vertex(VertexId v) const {
  if (v >= order()) throw std::out_of_range("invalid vertex id " + std::to_string(v));
}

bool Graph::is_regular() const {
  for (VertexId v = 0; v < order(); ++v)
    if (endpoint_count(v) != degree_) return false;
  return true;
}

std::size_t Graph::endpoint_count(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const VertexId> Graph::adjacency(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {distinct_.data() + distinct_offsets_[v], distinct_offsets_[v + 1] - distinct_offsets_[v]};
}

std::vector<VertexId> Graph::second_neighborhood(VertexId v) const {
  const auto first = neighbors(v);
  std::vector<VertexId> out;
  for (VertexId u : first)
    for (VertexId w : neighbors(u))
      if (w != v && !std::binary_search(first.begin(), first.end(), w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < order(); ++v) {
    const auto adj = adjacency(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const VertexId w = adj[i];
      if (w > v) {
        out.push_back({v, w});
      } else if (w == v) {
        // a loop shows up as two consecutive entries
        out.push_back({v, v});
        ++i;
      }
    }
  }
  return out;
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  return Graph(n, 2, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, n == 0 ? 0 : n - 1, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, 2, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});            // outer cycle
    edges.push_back({i, i + 5});                  // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});    // inner pentagram
  }
  return Graph(10, 3, edges);
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack;
  std::size_t components = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_data_line(line)) throw ConfigError("edge list: missing header line 'n d'");
  std::istringstream header(line);
  long long n = -1;
  long long d = -1;
  if (!(header >> n >> d) || n < 0 || d < 0) throw ConfigError("edge list: malformed header '" + line + "'");
  std::vector<Edge> edges;
  while (next_data_line(line)) {
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v)) throw ConfigError("edge list: malformed edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ConfigError("edge list: endpoint out of range in '" + line + "'");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Graph(static_cast<std::size_t>(n), static_cast<std::size_t>(d), edges);
}

void write_edge_list(std::ostream& out, const Graph& g, std::optional<std::span<const VertexId>> hamilton_order) {
  out << g.order() << ' ' << g.degree() << '\n';
  if (hamilton_order) {
    out << "# hamilton:";
    for (VertexId v : *hamilton_order) out << ' ' << v;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace hopforce
