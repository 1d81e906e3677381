#include "dalli/generate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace dalli {
namespace {

// mt19937_64 output is fully specified by the standard; the distributions
// are not, so draws go through these helpers to keep corpora portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Random relabelling so planted structure does not sit on fixed ids.
Graph relabelled(int n, const std::vector<Edge>& edges, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    Vertex a = perm[e.u], b = perm[e.v];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return Graph::build(static_cast<std::size_t>(n), out);
}

Graph generate_degree_capped(const DegreeCappedSpec& spec, Rng& rng) {
  if (spec.n < 1) throw InvalidGeneratorSpec("degcap: n must be >= 1");
  if (spec.max_degree < 1 || (spec.max_degree == 1 && spec.n > 2)) {
    throw InvalidGeneratorSpec("degcap: no connected graph with that degree cap");
  }
  const int n = spec.n;
  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (degree[u] < spec.max_degree) open.push_back(u);
    }
    int u = open[rng.uniform(0, static_cast<int>(open.size()) - 1)];
    edges.insert({u, v});
    ++degree[u];
    ++degree[v];
  }
  const int extra = spec.extra_edges >= 0 ? spec.extra_edges : rng.uniform(0, n);
  for (int added = 0, attempts = 0; added < extra && attempts < 50 * (extra + 1);
       ++attempts) {
    int a = rng.uniform(0, n - 1);
    int b = rng.uniform(0, n - 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (degree[a] >= spec.max_degree || degree[b] >= spec.max_degree) continue;
    if (!edges.insert({a, b}).second) continue;
    ++degree[a];
    ++degree[b];
    ++added;
  }
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.push_back({a, b});
  return relabelled(n, list, rng);
}

Graph generate_cubic(const CubicSpec& spec, Rng& rng) {
  if (spec.n % 2 != 0) {
    throw InvalidGeneratorSpec("cubic: n must be even (3n/2 edges)");
  }
  if (spec.n < 4) throw InvalidGeneratorSpec("cubic: n must be >= 4");
  const int n = spec.n;
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    rng.shuffle(points);
    std::set<std::pair<int, int>> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int a = points[i], b = points[i + 1];
      if (a == b) simple = false;
      else if (!edges.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
    }
    if (!simple) continue;
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.push_back({a, b});
    Graph g = Graph::build(static_cast<std::size_t>(n), list);
    if (g.is_connected()) return g;
  }
  throw InvalidGeneratorSpec("cubic: pairing model did not produce a simple "
                             "connected graph");
}

Graph generate_clique_plus(const CliquePlusAttachmentsSpec& spec, Rng& rng) {
  if (spec.clique_size < 1 || spec.outside < 0) {
    throw InvalidGeneratorSpec("clique: need c >= 1 and k >= 0");
  }
  const int c = spec.clique_size;
  const int n = c + spec.outside;
  std::vector<Edge> edges;
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) edges.push_back({a, b});
  for (int x = c; x < n; ++x) {
    bool attached = false;
    for (int a = 0; a < c; ++a) {
      if (rng.coin()) {
        edges.push_back({a, x});
        attached = true;
      }
    }
    if (!attached) edges.push_back({rng.uniform(0, c - 1), x});
    for (int y = c; y < x; ++y) {
      if (rng.coin()) edges.push_back({y, x});
    }
  }
  return relabelled(n, edges, rng);
}

Graph generate_twin_cover(const TwinCoverSpec& spec, Rng& rng) {
  if (spec.cover_size < 1 || spec.clique_count < 0 || spec.max_clique < 1 ||
      spec.min_attach < 1 || spec.min_attach > spec.cover_size) {
    throw InvalidGeneratorSpec("twincover: need t >= 1, cliques >= 0, zmax >= 1, 1 <= amin <= t");
  }
  const int t = spec.cover_size;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> edges;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (rng.coin()) edges.push_back({a, b});
    int next = t;
    for (int q = 0; q < spec.clique_count; ++q) {
      const int size = rng.uniform(1, spec.max_clique);
      std::vector<char> joined(t, 0);
      int joined_count = 0;
      for (int a = 0; a < t; ++a) {
        if (rng.coin()) {
          joined[a] = 1;
          ++joined_count;
        }
      }
      while (joined_count < spec.min_attach) {
        const int a = rng.uniform(0, t - 1);
        if (!joined[a]) {
          joined[a] = 1;
          ++joined_count;
        }
      }
      std::vector<int> signature;
      for (int a = 0; a < t; ++a)
        if (joined[a]) signature.push_back(a);
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < i; ++j) edges.push_back({next + j, next + i});
        for (int a : signature) edges.push_back({a, next + i});
      }
      next += size;
    }
    Graph g = relabelled(next, edges, rng);
    if (g.is_connected()) return g;
  }
  throw InvalidGeneratorSpec("twincover: could not draw a connected instance");
}

std::map<std::string, int> parse_fields(std::string_view body) {
  std::map<std::string, int> out;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidGeneratorSpec("expected key=value, got '" + std::string(item) + "'");
    }
    std::string key(item.substr(0, eq));
    std::string_view value = item.substr(eq + 1);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw InvalidGeneratorSpec("bad integer for '" + key + "'");
    }
    out[key] = parsed;
  }
  return out;
}

int take(std::map<std::string, int>& fields, const std::string& key,
         std::optional<int> fallback = std::nullopt) {
  auto it = fields.find(key);
  if (it == fields.end()) {
    if (fallback) return *fallback;
    throw InvalidGeneratorSpec("missing field '" + key + "'");
  }
  int v = it->second;
  fields.erase(it);
  return v;
}

}  // namespace

Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DegreeCappedSpec>) return generate_degree_capped(s, rng);
        else if constexpr (std::is_same_v<T, CubicSpec>) return generate_cubic(s, rng);
        else if constexpr (std::is_same_v<T, CliquePlusAttachmentsSpec>) return generate_clique_plus(s, rng);
        else return generate_twin_cover(s, rng);
      },
      spec);
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string kind(text.substr(0, colon));
  auto fields = parse_fields(colon == std::string_view::npos ? std::string_view{}
                                                             : text.substr(colon + 1));
  GeneratorSpec spec;
  if (kind == "degcap") {
    DegreeCappedSpec s;
    s.n = take(fields, "n");
    s.max_degree = take(fields, "dmax", 5);
    s.extra_edges = take(fields, "extra", -1);
    spec = s;
  } else if (kind == "cubic") {
    spec = CubicSpec{take(fields, "n")};
  } else if (kind == "clique") {
    CliquePlusAttachmentsSpec s;
    s.clique_size = take(fields, "c");
    s.outside = take(fields, "k");
    spec = s;
  } else if (kind == "twincover") {
    TwinCoverSpec s;
    s.cover_size = take(fields, "t");
    s.clique_count = take(fields, "cliques");
    s.max_clique = take(fields, "zmax", 1);
    s.min_attach = take(fields, "amin", 1);
    spec = s;
  } else {
    throw InvalidGeneratorSpec("unknown generator '" + kind + "'");
  }
  if (!fields.empty()) {
    throw InvalidGeneratorSpec("unknown field '" + fields.begin()->first + "'");
  }
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DegreeCappedSpec>) {
          return "degcap:n=" + std::to_string(s.n) + ",dmax=" + std::to_string(s.max_degree) +
                 ",extra=" + std::to_string(s.extra_edges);
        } else if constexpr (std::is_same_v<T, CubicSpec>) {
          return "cubic:n=" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, CliquePlusAttachmentsSpec>) {
          return "clique:c=" + std::to_string(s.clique_size) + ",k=" + std::to_string(s.outside);
        } else {
          return "twincover:t=" + std::to_string(s.cover_size) + ",cliques=" +
                 std::to_string(s.clique_count) + ",zmax=" + std::to_string(s.max_clique) +
                 ",amin=" + std::to_string(s.min_attach);
        }
      },
      spec);
}

}  // namespace dalli
