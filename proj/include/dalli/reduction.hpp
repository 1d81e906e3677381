#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "dalli/alliance.hpp"
#include "dalli/graph.hpp"

namespace dalli {

/// Target ids of the four copies of one source vertex and its selector s.
struct CopyIds {
  std::array<Vertex, 4> v{};
  std::array<Vertex, 4> u{};
  std::array<Vertex, 4> w{};
  Vertex s = 0;
};

/// Dominating Set on a cubic graph turned into Defensive Alliance.
///
/// Layout of target ids: source vertex i owns 13i..13i+12 in the order
/// v0..v3, u0..u3, w0..w3, s. Forbidden vertices follow from 13n, 32 per
/// source vertex: two for each v copy, then three for each u copy, then
/// three for each w copy. Each forbidden vertex has exactly one edge.
struct ReductionInstance {
  Graph source;
  std::size_t k = 0;
  Graph target;
  std::size_t k_prime = 0;  // 4n + 8k
  std::vector<CopyIds> vertex_map;
  std::size_t forbidden_count = 0;
};

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ReductionError when the source is not 3-regular, carries
/// forbidden flags, or k is outside [1, n].
ReductionInstance build_reduction(const Graph& source, std::size_t k);

bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

/// All copy-0 triangles, every copy of each dominating vertex, and the
/// selectors of the rest: 4n + 8|DS| vertices. Throws ReductionError when
/// the set does not dominate or exceeds k.
AllianceSolution alliance_from_dominating_set(const ReductionInstance& inst,
                                              std::span<const Vertex> dominating_set);

/// Source vertices whose nine copies (j = 1..3) all lie in the alliance.
/// Throws ReductionError when the alliance is invalid or larger than k';
/// throws VerificationFailure if the recovered set fails to dominate or is
/// larger than k.
VertexSet extract_dominating_set(const ReductionInstance& inst,
                                 std::span<const Vertex> alliance);

/// Moore-type lower bound on the order of a graph with minimum degree r and
/// girth g, floored. Throws std::invalid_argument unless r >= 3, g >= 3.
mpz_class moore_bound(int r, int g);

struct GadgetBounds {
  int r = 0;
  std::size_t vertices = 0;
  int girth = 0;                 // least g with g >= (4/3) log_{r-1} |V|
  mpz_class moore_lower_bound;   // moore_bound(r, girth)
  mpz_class msmd3_lower_bound;   // moore_bound(3, girth)
  mpq_class c{2871, 10000};
  mpq_class exponent{871, 250};  // the rounded 1/c used for size estimates
};

/// Throws std::invalid_argument unless r >= 3 and vertices >= 1.
GadgetBounds gadget_bounds(int r, std::size_t vertices);

/// Largest N with N <= ((k'+1)/c)^exponent, evaluated exactly.
mpz_class gadget_size_estimate(std::size_t k_prime);

}  // namespace dalli
