#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "dalli/graph.hpp"

namespace dalli {

/// Random connected graph: random spanning tree plus extra edges, every
/// degree at most max_degree. extra_edges < 0 draws a count in [0, n].
struct DegreeCappedSpec {
  int n = 0;
  int max_degree = 5;
  int extra_edges = -1;
};

/// Random simple connected 3-regular graph from the pairing model.
struct CubicSpec {
  int n = 0;
};

/// A clique plus `outside` extra vertices with random attachments; the
/// distance to clique is at most `outside`.
struct CliquePlusAttachmentsSpec {
  int clique_size = 0;
  int outside = 0;
};

/// Cover vertices plus cliques, each clique joined to a random subset of at
/// least min_attach cover vertices; the twin cover number is at most
/// cover_size.
struct TwinCoverSpec {
  int cover_size = 0;
  int clique_count = 0;
  int max_clique = 1;
  int min_attach = 1;
};

using GeneratorSpec = std::variant<DegreeCappedSpec, CubicSpec,
                                   CliquePlusAttachmentsSpec, TwinCoverSpec>;

class InvalidGeneratorSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic for a fixed (spec, seed). Throws InvalidGeneratorSpec for
/// infeasible requests such as a cubic graph on an odd number of vertices.
Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

/// Text form used by the command line, e.g. "cubic:n=8",
/// "degcap:n=12,dmax=5,extra=4", "clique:c=8,k=3",
/// "twincover:t=3,cliques=5,zmax=4,amin=2".
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

}  // namespace dalli
