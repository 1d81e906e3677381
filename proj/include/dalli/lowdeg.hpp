#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "dalli/alliance.hpp"
#include "dalli/graph.hpp"

namespace dalli {

/// Shape of a per-vertex candidate, in tie-break order.
enum class CandidateKind { Singleton = 0, Path = 1, Cycle = 2, PathPair = 3 };

std::string_view to_string(CandidateKind kind);

/// Smallest candidate alliance containing `root`.
struct SubproblemResult {
  Vertex root = 0;
  std::optional<int> best_size;
  VertexSet witness;
  CandidateKind kind = CandidateKind::Singleton;
};

class DegreeBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kLowDegreeLimit = 5;

/// Candidates by degree of v: d <= 1 gives {v}; d in {2,3} compares the
/// shortest path to the nearest other vertex of degree <= 3 with the
/// shortest cycle through v; d in {4,5} compares the cheapest pair of
/// disjoint paths to two such vertices with the shortest cycle.
/// Throws DegreeBoundError when max degree exceeds 5.
SubproblemResult solve_subproblem(const Graph& g, Vertex v);

/// Minimum defensive alliance for max degree <= 5: the best subproblem over
/// all vertices, verified before return. Graphs with forbidden vertices are
/// rejected.
AllianceSolution solve_min_alliance_lowdeg(const Graph& g);

}  // namespace dalli
