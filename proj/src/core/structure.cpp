#include "dalli/structure.hpp"

#include <algorithm>

namespace dalli {
namespace {

// Enumerates vertex covers of `edges` by branching on the first uncovered
// edge. Every minimum cover is reachable, so the smallest feasible budget
// yields all minimum covers and we keep the lexicographically least.
class CoverSearch {
 public:
  CoverSearch(std::size_t n, std::vector<Edge> edges)
      : edges_(std::move(edges)), in_(n, 0) {}

  std::optional<VertexSet> minimum(std::size_t k_max) {
    for (std::size_t budget = 0; budget <= k_max; ++budget) {
      best_.reset();
      budget_ = budget;
      branch(0, 0);
      if (best_) return best_;
    }
    return std::nullopt;
  }

 private:
  void branch(std::size_t from, std::size_t used) {
    while (from < edges_.size() && (in_[edges_[from].u] || in_[edges_[from].v])) ++from;
    if (from == edges_.size()) {
      VertexSet cover;
      for (std::size_t v = 0; v < in_.size(); ++v)
        if (in_[v]) cover.push_back(static_cast<Vertex>(v));
      if (!best_ || cover < *best_) best_ = std::move(cover);
      return;
    }
    if (used == budget_) return;
    for (Vertex x : {edges_[from].u, edges_[from].v}) {
      in_[x] = 1;
      branch(from + 1, used + 1);
      in_[x] = 0;
    }
  }

  std::vector<Edge> edges_;
  std::vector<char> in_;
  std::size_t budget_ = 0;
  std::optional<VertexSet> best_;
};

bool true_twins(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v) || g.degree(u) != g.degree(v)) return false;
  VertexSet a(g.neighbors(u).begin(), g.neighbors(u).end());
  VertexSet b(g.neighbors(v).begin(), g.neighbors(v).end());
  a.push_back(u);
  b.push_back(v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> ids) {
  require_vertices(g, ids);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : ids) in[v] = 1;
  return in;
}

VertexSet signature_of(const Graph& g, Vertex v, const std::vector<char>& in_modulator) {
  VertexSet sig;
  for (Vertex u : g.neighbors(v))
    if (in_modulator[u]) sig.push_back(u);
  return sig;
}

// Connected components of G - modulator, each sorted, listed by smallest
// member.
std::vector<VertexSet> remainder_components(const Graph& g, const std::vector<char>& in_modulator) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (in_modulator[s] || seen[s]) continue;
    VertexSet comp{static_cast<Vertex>(s)};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (in_modulator[w] || seen[w]) continue;
        seen[w] = 1;
        comp.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

}  // namespace

std::optional<VertexSet> distance_to_clique_set(const Graph& g, std::size_t k_max) {
  std::vector<Edge> missing;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b)) missing.push_back({a, b});
  return CoverSearch(g.vertex_count(), std::move(missing)).minimum(k_max);
}

std::optional<VertexSet> twin_cover_set(const Graph& g, std::size_t k_max) {
  std::vector<Edge> needed;
  for (const Edge& e : g.edges())
    if (!true_twins(g, e.u, e.v)) needed.push_back(e);
  auto cover = CoverSearch(g.vertex_count(), std::move(needed)).minimum(k_max);
  if (cover && !is_twin_cover(g, *cover)) {
    throw std::logic_error("twin cover search produced an invalid cover");
  }
  return cover;
}

bool is_clique_modulator(const Graph& g, std::span<const Vertex> modulator) {
  const auto in = membership(g, modulator);
  VertexSet rest;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) rest.push_back(static_cast<Vertex>(v));
  return is_clique(g, rest);
}

bool is_twin_cover(const Graph& g, std::span<const Vertex> cover) {
  const auto in = membership(g, cover);
  for (const auto& comp : remainder_components(g, in)) {
    if (!is_clique(g, comp)) return false;
    const VertexSet sig = signature_of(g, comp.front(), in);
    for (Vertex v : comp)
      if (signature_of(g, v, in) != sig) return false;
  }
  return true;
}

TwinPartition partition_twin_classes(const Graph& g, std::span<const Vertex> modulator) {
  if (!is_clique_modulator(g, modulator)) {
    throw PartitionError("vertices outside the modulator do not form a clique");
  }
  const auto in = membership(g, modulator);
  TwinPartition out;
  out.modulator = make_vertex_set({modulator.begin(), modulator.end()});
  out.mode = PartitionMode::CliqueRemainder;
  std::map<VertexSet, std::size_t> index;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    VertexSet sig = signature_of(g, static_cast<Vertex>(v), in);
    auto [it, fresh] = index.try_emplace(sig, out.classes.size());
    if (fresh) {
      TwinClass c;
      c.id = static_cast<int>(out.classes.size());
      c.signature = std::move(sig);
      out.classes.push_back(std::move(c));
    }
    out.classes[it->second].members.push_back(static_cast<Vertex>(v));
  }
  return out;
}

TwinPartition partition_clique_sets(const Graph& g, std::span<const Vertex> cover) {
  if (!is_twin_cover(g, cover)) throw PartitionError("not a twin cover");
  const auto in = membership(g, cover);
  TwinPartition out;
  out.modulator = make_vertex_set({cover.begin(), cover.end()});
  out.mode = PartitionMode::CliquesRemainder;
  std::map<VertexSet, std::size_t> index;
  for (auto& clique : remainder_components(g, in)) {
    VertexSet sig = signature_of(g, clique.front(), in);
    auto [it, fresh] = index.try_emplace(sig, out.classes.size());
    if (fresh) {
      TwinClass c;
      c.id = static_cast<int>(out.classes.size());
      c.signature = std::move(sig);
      out.classes.push_back(std::move(c));
    }
    TwinClass& c = out.classes[it->second];
    const int size = static_cast<int>(clique.size());
    out.max_clique_size = std::max(out.max_clique_size, size);
    c.members.insert(c.members.end(), clique.begin(), clique.end());
    c.cliques_by_size[size].push_back(std::move(clique));
  }
  for (auto& c : out.classes) std::sort(c.members.begin(), c.members.end());
  return out;
}

}  // namespace dalli
