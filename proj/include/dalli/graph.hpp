#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dalli {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, OutOfRange };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Immutable simple undirected graph with optional forbidden-vertex flags.
///
/// Forbidden vertices are ordinary vertices: they contribute to degrees and
/// neighbourhoods, but no alliance may contain them.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws GraphError on self-loops, duplicate edges
  /// (in either orientation) and out-of-range endpoints; forbidden ids are
  /// range-checked too.
  static Graph build(std::size_t n, std::span<const Edge> edges,
                     std::span<const Vertex> forbidden = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Neighbours of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

  bool is_forbidden(Vertex v) const { return forbidden_flags_.at(v) != 0; }
  const VertexSet& forbidden() const noexcept { return forbidden_; }
  bool has_forbidden() const noexcept { return !forbidden_.empty(); }

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.forbidden_ == b.forbidden_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> forbidden_flags_;
  VertexSet forbidden_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// Sorts and deduplicates ids into a VertexSet.
VertexSet make_vertex_set(std::vector<Vertex> ids);

/// Throws std::invalid_argument unless every id is a vertex of g.
void require_vertices(const Graph& g, std::span<const Vertex> ids);

}  // namespace dalli
