#include "dalli/graph.hpp"

#include <algorithm>
#include <queue>

namespace dalli {

Graph Graph::build(std::size_t n, std::span<const Edge> edges,
                   std::span<const Vertex> forbidden) {
  Graph g;
  g.adjacency_.assign(n, {});
  g.forbidden_flags_.assign(n, 0);

  auto in_range = [n](Vertex v) {
    return v >= 0 && static_cast<std::size_t>(v) < n;
  };
  for (const Edge& e : edges) {
    if (!in_range(e.u) || !in_range(e.v)) {
      throw GraphError(GraphError::Kind::OutOfRange,
                       "edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") has an endpoint outside [0," +
                           std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(v) + "," +
                           std::to_string(*dup) + ")");
    }
    g.max_degree_ = std::max(g.max_degree_, adj.size());
  }
  g.edge_count_ = edges.size();

  for (Vertex f : forbidden) {
    if (!in_range(f)) {
      throw GraphError(GraphError::Kind::OutOfRange,
                       "forbidden vertex " + std::to_string(f) + " out of range");
    }
    g.forbidden_flags_[f] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.forbidden_flags_[v]) g.forbidden_.push_back(static_cast<Vertex>(v));
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == n;
}

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void require_vertices(const Graph& g, std::span<const Vertex> ids) {
  for (Vertex v : ids) {
    if (!g.contains(v)) {
      throw std::invalid_argument("vertex id " + std::to_string(v) +
                                  " out of range");
    }
  }
}

}  // namespace dalli
