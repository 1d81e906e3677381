#pragma once

#include <optional>
#include <vector>

#include "dalli/graph.hpp"

namespace dalli {

inline constexpr int kUnreachable = -1;

/// Breadth-first search tree rooted at one vertex. Neighbours are scanned in
/// ascending order, so parents are deterministic.
struct BfsTree {
  Vertex root = 0;
  std::vector<int> distance;   // kUnreachable when not reached
  std::vector<Vertex> parent;  // -1 for the root and unreached vertices

  /// Vertices of the tree path root -> target, root first.
  std::vector<Vertex> path_to(Vertex target) const;
};

BfsTree bfs_tree(const Graph& g, Vertex root);

/// Hop distances from v; unreachable vertices get kUnreachable.
std::vector<int> distances_from(const Graph& g, Vertex v);

struct Cycle {
  int length = 0;
  VertexSet vertices;  // sorted
};

/// Shortest simple cycle through v, or nullopt if v lies on no cycle.
std::optional<Cycle> shortest_cycle_through(const Graph& g, Vertex v);

/// Length of the shortest cycle of g; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Two internally vertex-disjoint paths from a common root to distinct
/// endpoints.
struct PathPair {
  Vertex root = 0;
  Vertex endpoint_x = 0;
  Vertex endpoint_y = 0;
  std::vector<Vertex> path_x;  // root ... endpoint_x
  std::vector<Vertex> path_y;  // root ... endpoint_y
  int total_vertices = 0;      // |path_x u path_y|

  VertexSet vertex_set() const;
};

/// Pair of internally disjoint paths from v to two distinct targets with the
/// fewest vertices in total, or nullopt if none exists. v must not be a
/// target.
std::optional<PathPair> min_disjoint_path_pair(const Graph& g, Vertex v,
                                               const VertexSet& targets);

}  // namespace dalli
