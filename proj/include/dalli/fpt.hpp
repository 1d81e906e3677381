#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dalli/alliance.hpp"
#include "dalli/graph.hpp"
#include "dalli/structure.hpp"

namespace dalli {

/// ceil((d(u)+1)/2) - |N[u] ∩ P|; non-positive means already protected.
/// Throws std::invalid_argument unless u ∈ P.
int demand(const Graph& g, Vertex u, std::span<const Vertex> P);

/// Count choices for one clique group (clique set `class_id`, size l).
struct GroupCombinations {
  int class_id = 0;
  int clique_size = 0;
  int clique_count = 0;
  std::uint64_t combinations = 0;
};

struct FptStats {
  std::uint64_t guesses = 0;      // guesses enumerated, pruned or not
  std::uint64_t ilp_solves = 0;
  std::vector<GroupCombinations> groups;  // twin cover only
};

/// Minimum defensive alliance given a clique modulator D: every choice of
/// P = S ∩ D and of empty twin classes becomes a small ILP over per-class
/// pick counts. Throws PartitionError if V \ D is not a clique and
/// std::invalid_argument on graphs with forbidden vertices.
AllianceSolution solve_dtc(const Graph& g, std::span<const Vertex> D,
                           FptStats* stats = nullptr);

/// Minimum defensive alliance given a twin cover T: the best single-clique
/// alliance versus an enumeration over P = S ∩ T and full/partial clique
/// counts per (clique set, size), with an ILP for the partial fill levels.
/// Throws PartitionError if T is not a twin cover.
AllianceSolution solve_twincover(const Graph& g, std::span<const Vertex> T,
                                 FptStats* stats = nullptr);

/// Moves picks between same-size cliques of one clique set until each
/// (set, size) group has at most l-1 partially picked cliques: the least
/// filled partial clique is emptied into the fullest ones. Size, validity
/// and S ∩ T are preserved. Throws std::invalid_argument if S is not a
/// valid alliance or the partition is not in cliques-remainder mode.
VertexSet normalize_partial_cliques(const Graph& g, const TwinPartition& partition,
                                    std::span<const Vertex> S);

}  // namespace dalli
