#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dalli/generate.hpp"

namespace corpus {

using dalli::Edge;
using dalli::Graph;

Graph from_one_indexed(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.push_back({a - 1, b - 1});
  return Graph::build(static_cast<std::size_t>(n), list);
}

Graph hub_nine() {
  return from_one_indexed(9, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {5, 8},
                              {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

Graph cubic_six() {
  return from_one_indexed(6, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::build(static_cast<std::size_t>(n), e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::build(static_cast<std::size_t>(n), e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph::build(static_cast<std::size_t>(n), e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::build(static_cast<std::size_t>(leaves + 1), e);
}

namespace {

// Graphs on n <= 8 vertices as upper-triangle bit strings.
using Code = std::uint64_t;

int bit_index(int a, int b) {  // a < b
  return b * (b - 1) / 2 + a;
}

Code canonical(int n, Code code) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code best = ~Code{0};
  do {
    Code c = 0;
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a)
        if (code >> bit_index(a, b) & 1U) {
          const int x = std::min(perm[a], perm[b]);
          const int y = std::max(perm[a], perm[b]);
          c |= Code{1} << bit_index(x, y);
        }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph decode(int n, Code code) {
  std::vector<Edge> e;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a)
      if (code >> bit_index(a, b) & 1U) e.push_back({a, b});
  return Graph::build(static_cast<std::size_t>(n), e);
}

std::vector<Code> extend(int n, const std::vector<Code>& smaller) {
  // Adding vertex n-1 keeps earlier bit positions, so codes extend in place.
  std::vector<Code> out;
  for (Code base : smaller)
    for (Code nbrs = 0; nbrs < (Code{1} << (n - 1)); ++nbrs) {
      Code c = base;
      for (int a = 0; a < n - 1; ++a)
        if (nbrs >> a & 1U) c |= Code{1} << bit_index(a, n - 1);
      out.push_back(c);
    }
  return out;
}

void keep(std::vector<Instance>& out, const std::string& id, Graph g) {
  if (g.is_connected() && g.max_degree() <= 5) out.push_back({id, std::move(g)});
}

}  // namespace

std::vector<Instance> exhaustive_small(int max_n) {
  std::vector<Instance> out;
  std::vector<Code> classes{0};  // n = 1
  keep(out, "iso-1-0", decode(1, 0));
  for (int n = 2; n <= std::min(max_n, 6); ++n) {
    std::set<Code> seen;
    for (Code c : extend(n, classes)) seen.insert(canonical(n, c));
    classes.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      keep(out, "iso-" + std::to_string(n) + "-" + std::to_string(i), decode(n, classes[i]));
    }
  }
  if (max_n >= 7) {
    const auto seven = extend(7, classes);
    for (std::size_t i = 0; i < seven.size(); ++i) {
      keep(out, "ext-7-" + std::to_string(i), decode(7, seven[i]));
    }
  }
  return out;
}

std::vector<Instance> random_low_degree(std::size_t count, int lo, int hi, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(i % static_cast<std::size_t>(hi - lo + 1));
    // Vary density so that degree-4 and degree-5 vertices show up often.
    const int extra = i % 3 == 0 ? -1 : (i % 3 == 1 ? n : 2 * n);
    dalli::DegreeCappedSpec spec{n, 5, extra};
    out.push_back({"degcap-" + std::to_string(i), dalli::generate(spec, seed + i)});
  }
  return out;
}

std::vector<Instance> clique_plus(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int outside = 1 + static_cast<int>(i % 3);
    const int clique = 2 + static_cast<int>((i / 3) % static_cast<std::size_t>(13 - outside));
    dalli::CliquePlusAttachmentsSpec spec{clique, outside};
    out.push_back({"clique-" + std::to_string(i), dalli::generate(spec, seed + i)});
  }
  return out;
}

std::vector<Instance> twin_cover(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  std::uint64_t draw = seed;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const int t = 1 + static_cast<int>(i % 3);
    const int max_clique = 1 + static_cast<int>((i / 3) % 4);
    const int cliques = 1 + static_cast<int>((i / 12) % static_cast<std::size_t>((14 - t) / max_clique));
    // Half the draws join every clique to the whole cover, which rules out
    // cheap leaf alliances and exercises the partial-clique ILP.
    const int min_attach = (i / 2) % 2 == 0 ? 1 : t;
    dalli::TwinCoverSpec spec{t, cliques, max_clique, min_attach};
    Graph g = dalli::generate(spec, draw++);
    if (g.vertex_count() > 14) continue;
    out.push_back({"twincover-" + std::to_string(out.size()), std::move(g)});
  }
  return out;
}

std::vector<Instance> cubic(std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 4 + 2 * static_cast<int>(i % 5);
    out.push_back({"cubic-" + std::to_string(i), dalli::generate(dalli::CubicSpec{n}, seed + i)});
  }
  return out;
}

}  // namespace corpus
