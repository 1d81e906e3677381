#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dalli/graph.hpp"

namespace dalli {

/// Minimum |N[v] ∩ S| that protects a member of degree `degree`:
/// ceil((degree + 1) / 2). Every solver and encoding uses this one rule.
constexpr int protection_threshold(int degree) { return (degree + 2) / 2; }

struct Violation {
  Vertex vertex = 0;
  int inside = 0;    // |N[v] ∩ S|
  int required = 0;  // protection_threshold(d(v))

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AllianceSolution {
  VertexSet members;
  std::size_t size = 0;
  bool valid = false;
  std::vector<Violation> violations;
};

/// Checks the defensive-alliance condition. Invalid sets are a result, not an
/// error; ids must be vertices of g. Members may be given in any order.
AllianceSolution verify_alliance(const Graph& g, std::vector<Vertex> members);

class SearchGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BruteForceOptions {
  std::optional<std::size_t> size_cap;
  std::size_t max_vertices = 24;  // hard ceiling is 64
};

/// Exhaustive minimum defensive alliance over connected vertex subsets that
/// avoid forbidden vertices, by increasing size; ties go to the
/// lexicographically smallest set. nullopt when nothing fits under size_cap.
std::optional<AllianceSolution> brute_force_min_alliance(
    const Graph& g, const BruteForceOptions& options = {});

}  // namespace dalli
