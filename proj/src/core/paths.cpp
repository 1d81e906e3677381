#include "dalli/paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dalli {

std::vector<Vertex> BfsTree::path_to(Vertex target) const {
  if (distance.at(target) == kUnreachable) return {};
  std::vector<Vertex> path;
  for (Vertex x = target; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// BFS that pretends the edge (skip_a, skip_b) is absent.
BfsTree bfs_without_edge(const Graph& g, Vertex root, Vertex skip_a,
                         Vertex skip_b) {
  const std::size_t n = g.vertex_count();
  BfsTree tree;
  tree.root = root;
  tree.distance.assign(n, kUnreachable);
  tree.parent.assign(n, -1);
  std::queue<Vertex> queue;
  tree.distance[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if ((u == skip_a && w == skip_b) || (u == skip_b && w == skip_a)) continue;
      if (tree.distance[w] != kUnreachable) continue;
      tree.distance[w] = tree.distance[u] + 1;
      tree.parent[w] = u;
      queue.push(w);
    }
  }
  return tree;
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

BfsTree bfs_tree(const Graph& g, Vertex root) {
  require_vertex(g, root);
  return bfs_without_edge(g, root, -1, -1);
}

std::vector<int> distances_from(const Graph& g, Vertex v) {
  return bfs_tree(g, v).distance;
}

std::optional<Cycle> shortest_cycle_through(const Graph& g, Vertex v) {
  require_vertex(g, v);
  std::optional<Cycle> best;
  // Every cycle through v leaves v along some edge (v,u) and returns to v
  // without it, so the shortest cycle using (v,u) is that edge plus a
  // shortest u-v path in g - (v,u).
  for (Vertex u : g.neighbors(v)) {
    BfsTree tree = bfs_without_edge(g, u, v, u);
    if (tree.distance[v] == kUnreachable) continue;
    Cycle candidate;
    candidate.length = tree.distance[v] + 1;
    candidate.vertices = make_vertex_set(tree.path_to(v));
    if (!best || candidate.length < best->length ||
        (candidate.length == best->length &&
         candidate.vertices < best->vertices)) {
      best = std::move(candidate);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto cycle = shortest_cycle_through(g, static_cast<Vertex>(v));
    if (cycle && (!best || cycle->length < *best)) best = cycle->length;
  }
  return best;
}

VertexSet PathPair::vertex_set() const {
  std::vector<Vertex> all(path_x.begin(), path_x.end());
  all.insert(all.end(), path_y.begin(), path_y.end());
  return make_vertex_set(std::move(all));
}

namespace {

// Small successive-shortest-path min-cost flow; Bellman-Ford keeps it exact
// with the negative residual costs and deterministic in arc order.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : head_(nodes, -1) {}

  int add_arc(int from, int to, int capacity, int cost) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, cost, head_[from]});
    head_[from] = id;
    arcs_.push_back({from, 0, -cost, head_[to]});
    head_[to] = id + 1;
    return id;
  }

  // Pushes up to `units` units from source to sink; returns units sent.
  int run(int source, int sink, int units) {
    const int nodes = static_cast<int>(head_.size());
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    int sent = 0;
    while (sent < units) {
      std::vector<int> dist(nodes, kInf);
      std::vector<int> via(nodes, -1);
      dist[source] = 0;
      for (int round = 0; round < nodes; ++round) {
        bool changed = false;
        for (int x = 0; x < nodes; ++x) {
          if (dist[x] == kInf) continue;
          for (int a = head_[x]; a != -1; a = arcs_[a].next) {
            const Arc& arc = arcs_[a];
            if (arc.capacity > 0 && dist[x] + arc.cost < dist[arc.to]) {
              dist[arc.to] = dist[x] + arc.cost;
              via[arc.to] = a;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] == kInf) break;
      for (int x = sink; x != source;) {
        int a = via[x];
        arcs_[a].capacity -= 1;
        arcs_[a ^ 1].capacity += 1;
        x = arcs_[a ^ 1].to;
      }
      ++sent;
    }
    return sent;
  }

  // Flow on a forward arc id returned by add_arc.
  int flow(int arc_id) const { return arcs_[arc_id ^ 1].capacity; }
  int target(int arc_id) const { return arcs_[arc_id].to; }

 private:
  struct Arc {
    int to;
    int capacity;
    int cost;
    int next;
  };
  std::vector<Arc> arcs_;
  std::vector<int> head_;
};

}  // namespace

std::optional<PathPair> min_disjoint_path_pair(const Graph& g, Vertex v,
                                               const VertexSet& targets) {
  require_vertex(g, v);
  require_vertices(g, targets);
  if (std::binary_search(targets.begin(), targets.end(), v)) {
    throw std::invalid_argument("root vertex must not be a target");
  }
  if (targets.size() < 2) return std::nullopt;

  // Vertex x splits into in-node 2x and out-node 2x+1 joined by a unit
  // capacity, unit cost arc; the root is entered never and left twice.
  const int n = static_cast<int>(g.vertex_count());
  const int sink = 2 * n;
  MinCostFlow flow(2 * n + 1);
  std::vector<std::vector<int>> out_arcs(n);
  for (Vertex x = 0; x < n; ++x) {
    if (x != v) flow.add_arc(2 * x, 2 * x + 1, 1, 1);
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.neighbors(x)) {
      if (y == v) continue;
      out_arcs[x].push_back(flow.add_arc(2 * x + 1, 2 * y, 1, 0));
    }
  }
  std::vector<int> sink_arc(n, -1);
  for (Vertex t : targets) sink_arc[t] = flow.add_arc(2 * t + 1, sink, 1, 0);

  if (flow.run(2 * v + 1, sink, 2) < 2) return std::nullopt;

  // Decompose: from the root follow saturated arcs until a used sink arc.
  std::vector<std::vector<Vertex>> paths;
  for (int first : out_arcs[v]) {
    if (flow.flow(first) == 0) continue;
    std::vector<Vertex> path{v};
    Vertex x = flow.target(first) / 2;
    while (true) {
      path.push_back(x);
      if (sink_arc[x] != -1 && flow.flow(sink_arc[x]) == 1) break;
      Vertex next = -1;
      for (int a : out_arcs[x]) {
        if (flow.flow(a) == 1) {
          next = flow.target(a) / 2;
          break;
        }
      }
      if (next == -1) throw std::logic_error("flow decomposition failed");
      x = next;
    }
    paths.push_back(std::move(path));
  }
  if (paths.size() != 2) throw std::logic_error("expected two flow paths");
  if (paths[0].back() > paths[1].back()) std::swap(paths[0], paths[1]);

  PathPair pair;
  pair.root = v;
  pair.endpoint_x = paths[0].back();
  pair.endpoint_y = paths[1].back();
  pair.path_x = std::move(paths[0]);
  pair.path_y = std::move(paths[1]);
  pair.total_vertices =
      static_cast<int>(pair.path_x.size() + pair.path_y.size()) - 1;
  return pair;
}

}  // namespace dalli
