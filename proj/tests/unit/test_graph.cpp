#include "doctest.h"

#include "corpus.hpp"
#include "dalli/graph.hpp"

using namespace dalli;

namespace {
GraphError::Kind error_kind(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> forbidden = {}) {
  try {
    Graph::build(n, edges, forbidden);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected GraphError");
  return GraphError::Kind::OutOfRange;
}
}  // namespace

TEST_CASE("path on three vertices") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = Graph::build(3, edges);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.has_forbidden());
  CHECK(g.is_connected());
}

TEST_CASE("build rejects malformed input with distinct kinds") {
  CHECK(error_kind(2, {{0, 0}}) == GraphError::Kind::SelfLoop);
  CHECK(error_kind(3, {{0, 1}, {1, 0}}) == GraphError::Kind::DuplicateEdge);
  CHECK(error_kind(3, {{0, 1}, {0, 1}}) == GraphError::Kind::DuplicateEdge);
  CHECK(error_kind(2, {{0, 2}}) == GraphError::Kind::OutOfRange);
  CHECK(error_kind(2, {{-1, 1}}) == GraphError::Kind::OutOfRange);
  CHECK(error_kind(2, {{0, 1}}, {5}) == GraphError::Kind::OutOfRange);
}

TEST_CASE("nine-vertex hub example degrees") {
  const Graph g = corpus::hub_nine();
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 15);
  CHECK(g.degree(4) == 5);  // v5
  CHECK(g.degree(0) == 2);  // v1
  CHECK(g.max_degree() == 5);
}

TEST_CASE("adjacency is symmetric and sorted across the small corpus") {
  for (const auto& inst : corpus::exhaustive_small(6)) {
    const Graph& g = inst.graph;
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(static_cast<Vertex>(v));
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) CHECK(g.adjacent(u, static_cast<Vertex>(v)));
      degree_sum += nb.size();
    }
    CHECK(degree_sum == 2 * g.edge_count());
    const auto edges = g.edges();
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    for (const auto& e : edges) CHECK(e.u < e.v);
  }
}

TEST_CASE("forbidden flags") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const std::vector<Vertex> forbidden{2, 2};
  const Graph g = Graph::build(3, edges, forbidden);
  CHECK(g.is_forbidden(2));
  CHECK_FALSE(g.is_forbidden(0));
  CHECK(g.forbidden() == VertexSet{2});
}

TEST_CASE("disconnected graphs are allowed") {
  const std::vector<Edge> edges{{0, 1}};
  const Graph g = Graph::build(3, edges);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("vertex set helpers") {
  CHECK(make_vertex_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
  const Graph g = corpus::path(3);
  const std::vector<Vertex> bad{0, 3};
  CHECK_THROWS_AS(require_vertices(g, bad), std::invalid_argument);
}
