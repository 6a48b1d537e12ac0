#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "hopforce/errors.hpp"
#include "hopforce/graph.hpp"

using namespace hopforce;

TEST_CASE("vertex set tracks membership and size") {
  VertexSet s(130);
  CHECK(s.empty());
  CHECK(s.insert(0));
  CHECK(s.insert(64));
  CHECK(s.insert(129));
  CHECK_FALSE(s.insert(64));
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<VertexId>{0, 64, 129});
  CHECK(s.erase(64));
  CHECK_FALSE(s.erase(64));
  CHECK(s.size() == 2);
  const VertexSet c = s.complement();
  CHECK(c.size() == 128);
  CHECK_FALSE(c.contains(0));
  CHECK(c.contains(64));
  CHECK(VertexSet::full(130).size() == 130);
  const std::vector<VertexId> bad{200};
  CHECK_THROWS_AS(VertexSet(130, bad), std::out_of_range);
}

TEST_CASE("loops count twice and parallel edges repeat") {
  const std::vector<Edge> edges{{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 0}};
  // vertex 0: loop (2) + 1 + 2 ; vertex 1: 0,2,2 ; vertex 2: 1,1,0
  Graph g(3, 4, edges);
  CHECK_FALSE(g.is_simple());
  CHECK(g.endpoint_count(0) == 4);
  CHECK(g.endpoint_count(1) == 3);
  CHECK_FALSE(g.is_regular());
  CHECK(g.adjacency(0).size() == 4);
  CHECK(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<VertexId>{1, 2});
  CHECK(std::vector<VertexId>(g.neighbors(1).begin(), g.neighbors(1).end()) == std::vector<VertexId>{0, 2});
  CHECK(g.edges().size() == edges.size());
  CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
}

TEST_CASE("second neighbourhood is distance exactly two") {
  const Graph c6 = cycle_graph(6);
  CHECK(c6.second_neighborhood(0) == std::vector<VertexId>{2, 4});
  const Graph p = petersen_graph();
  CHECK(p.is_simple());
  CHECK(p.is_regular());
  // Petersen has diameter 2 and girth 5: every non-neighbour is at distance 2.
  for (VertexId v = 0; v < 10; ++v) CHECK(p.second_neighborhood(v).size() == 6);
  const Graph k4 = complete_graph(4);
  CHECK(k4.second_neighborhood(0).empty());
}

TEST_CASE("edge list round trip preserves the multigraph") {
  const std::vector<Edge> edges{{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 3}, {2, 3}};
  const Graph g(4, 3, edges);
  std::ostringstream out;
  const std::vector<VertexId> order{0, 1, 2, 3};
  write_edge_list(out, g, std::span<const VertexId>(order));
  CHECK(out.str().rfind("4 3\n# hamilton: 0 1 2 3\n", 0) == 0);
  std::istringstream in(out.str());
  const Graph h = read_edge_list(in);
  CHECK(h.order() == 4);
  CHECK(h.degree() == 3);
  for (VertexId v = 0; v < 4; ++v) {
    const auto a = g.adjacency(v);
    const auto b = h.adjacency(v);
    CHECK(std::vector<VertexId>(a.begin(), a.end()) == std::vector<VertexId>(b.begin(), b.end()));
  }
}

TEST_CASE("malformed edge lists are configuration errors") {
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_edge_list(empty), ConfigError);
  std::istringstream bad_row("3 2\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(bad_row), ConfigError);
  std::istringstream out_of_range("3 2\n0 3\n");
  CHECK_THROWS_AS(read_edge_list(out_of_range), ConfigError);
}

TEST_CASE("component count") {
  CHECK(component_count(cycle_graph(7)) == 1);
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  CHECK(component_count(Graph(6, 2, two_triangles)) == 2);
}
