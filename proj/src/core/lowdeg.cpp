#include "dalli/lowdeg.hpp"

#include <string>
#include <tuple>

#include "dalli/errors.hpp"
#include "dalli/paths.hpp"

namespace dalli {

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::Singleton: return "singleton";
    case CandidateKind::Path: return "path";
    case CandidateKind::Cycle: return "cycle";
    case CandidateKind::PathPair: return "path-pair";
  }
  return "unknown";
}

namespace {

void require_low_degree(const Graph& g) {
  if (g.max_degree() > kLowDegreeLimit) {
    throw DegreeBoundError("max degree " + std::to_string(g.max_degree()) +
                           " exceeds " + std::to_string(kLowDegreeLimit));
  }
}

bool better(const SubproblemResult& a, const SubproblemResult& b) {
  if (!b.best_size) return a.best_size.has_value();
  if (!a.best_size) return false;
  return std::tie(*a.best_size, a.kind, a.witness) <
         std::tie(*b.best_size, b.kind, b.witness);
}

void offer(SubproblemResult& best, CandidateKind kind, VertexSet witness) {
  SubproblemResult candidate;
  candidate.root = best.root;
  candidate.best_size = static_cast<int>(witness.size());
  candidate.kind = kind;
  candidate.witness = std::move(witness);
  if (better(candidate, best)) best = std::move(candidate);
}

SubproblemResult solve_one(const Graph& g, Vertex v) {
  SubproblemResult best;
  best.root = v;
  const std::size_t d = g.degree(v);
  if (d <= 1) {
    offer(best, CandidateKind::Singleton, {v});
    return best;
  }

  if (d <= 3) {
    // Nearest other vertex of degree <= 3; BFS order breaks distance ties
    // toward the smaller id.
    BfsTree tree = bfs_tree(g, v);
    Vertex nearest = -1;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      const Vertex xv = static_cast<Vertex>(x);
      if (xv == v || g.degree(xv) > 3 || tree.distance[xv] == kUnreachable) continue;
      if (nearest == -1 || tree.distance[xv] < tree.distance[nearest]) nearest = xv;
    }
    if (nearest != -1) offer(best, CandidateKind::Path, make_vertex_set(tree.path_to(nearest)));
  } else {
    VertexSet low;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (static_cast<Vertex>(x) != v && g.degree(static_cast<Vertex>(x)) <= 3) {
        low.push_back(static_cast<Vertex>(x));
      }
    }
    if (auto pair = min_disjoint_path_pair(g, v, low)) {
      offer(best, CandidateKind::PathPair, pair->vertex_set());
    }
  }

  if (auto cycle = shortest_cycle_through(g, v)) {
    offer(best, CandidateKind::Cycle, cycle->vertices);
  }
  return best;
}

}  // namespace

SubproblemResult solve_subproblem(const Graph& g, Vertex v) {
  require_low_degree(g);
  if (!g.contains(v)) throw std::out_of_range("vertex out of range");
  return solve_one(g, v);
}

AllianceSolution solve_min_alliance_lowdeg(const Graph& g) {
  require_low_degree(g);
  if (g.has_forbidden()) {
    throw std::invalid_argument("low-degree solver does not support forbidden vertices");
  }
  SubproblemResult best;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    SubproblemResult candidate = solve_one(g, static_cast<Vertex>(v));
    if (better(candidate, best)) best = std::move(candidate);
  }
  if (!best.best_size) return verify_alliance(g, {});
  AllianceSolution solution = verify_alliance(g, best.witness);
  if (!solution.valid) {
    throw VerificationFailure("low-degree solver produced an invalid witness");
  }
  return solution;
}

}  // namespace dalli
