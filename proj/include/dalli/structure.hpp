#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dalli/graph.hpp"

namespace dalli {

/// Minimum D with |D| <= k_max such that V \ D induces a clique; among
/// minimum sets the lexicographically smallest. nullopt when none fits.
std::optional<VertexSet> distance_to_clique_set(const Graph& g, std::size_t k_max);

/// Minimum twin cover with |T| <= k_max, lexicographically smallest among
/// minimum ones. Only edges whose endpoints differ in closed neighbourhood
/// need covering.
std::optional<VertexSet> twin_cover_set(const Graph& g, std::size_t k_max);

bool is_clique_modulator(const Graph& g, std::span<const Vertex> modulator);

/// V \ T is a disjoint union of cliques and every clique has one adjacency
/// pattern into T.
bool is_twin_cover(const Graph& g, std::span<const Vertex> cover);

enum class PartitionMode { CliqueRemainder, CliquesRemainder };

struct TwinClass {
  int id = 0;
  VertexSet members;
  VertexSet signature;  // neighbours in the modulator
  // Cliques-remainder mode only: size -> cliques of that size, each sorted,
  // listed by smallest member.
  std::map<int, std::vector<VertexSet>> cliques_by_size;
};

struct TwinPartition {
  VertexSet modulator;
  std::vector<TwinClass> classes;  // ordered by smallest member
  PartitionMode mode = PartitionMode::CliqueRemainder;
  int max_clique_size = 0;  // z; cliques-remainder mode only
};

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Groups V \ D by adjacency signature. Throws PartitionError unless the
/// remainder is a clique.
TwinPartition partition_twin_classes(const Graph& g, std::span<const Vertex> modulator);

/// Splits V \ T into its clique components and groups them into clique sets
/// by signature. Throws PartitionError unless T is a twin cover.
TwinPartition partition_clique_sets(const Graph& g, std::span<const Vertex> cover);

}  // namespace dalli
