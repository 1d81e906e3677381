#include "dalli/alliance.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace dalli {

AllianceSolution verify_alliance(const Graph& g, std::vector<Vertex> members) {
  require_vertices(g, members);
  AllianceSolution out;
  out.members = make_vertex_set(std::move(members));
  out.size = out.members.size();

  bool touches_forbidden = false;
  for (Vertex v : out.members) {
    if (g.is_forbidden(v)) touches_forbidden = true;
    int inside = 1;
    for (Vertex u : g.neighbors(v)) {
      if (std::binary_search(out.members.begin(), out.members.end(), u)) ++inside;
    }
    const int required = protection_threshold(static_cast<int>(g.degree(v)));
    if (inside < required) out.violations.push_back({v, inside, required});
  }
  out.valid = !out.members.empty() && out.violations.empty() && !touches_forbidden;
  return out;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// For equal-size sets, the sorted sequences first differ at the smallest
// element of the symmetric difference.
bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

class ConnectedSubsetSearch {
 public:
  explicit ConnectedSubsetSearch(const Graph& g) : n_(static_cast<int>(g.vertex_count())) {
    adj_.assign(n_, 0);
    need_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
      need_[v] = protection_threshold(static_cast<int>(g.degree(v))) - 1;
      if (g.is_forbidden(v)) continue;
      allowed_ |= bit(v);
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
    }
    for (int v = 0; v < n_; ++v) adj_[v] &= allowed_;
  }

  // Smallest valid set of exactly `size` vertices, if any.
  std::optional<Mask> best_of_size(int size) {
    target_ = size;
    found_ = false;
    best_ = 0;
    for (int seed = 0; seed < n_; ++seed) {
      if (!(allowed_ & bit(seed))) continue;
      above_seed_ = allowed_ & ~((bit(seed) << 1) - 1);
      extend(bit(seed), adj_[seed] & above_seed_, adj_[seed] | bit(seed), 1);
    }
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  bool protects(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (std::popcount(adj_[v] & s) < need_[v]) return false;
    }
    return true;
  }

  // ESU-style enumeration: each connected set is produced once, from its
  // smallest vertex.
  void extend(Mask sub, Mask ext, Mask closed, int size) {
    if (size == target_) {
      if (protects(sub) && (!found_ || lex_less(sub, best_))) {
        best_ = sub;
        found_ = true;
      }
      return;
    }
    while (ext) {
      int w = std::countr_zero(ext);
      ext &= ext - 1;
      Mask fresh = adj_[w] & ~closed & above_seed_;
      extend(sub | bit(w), ext | fresh, closed | adj_[w] | bit(w), size + 1);
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> need_;
  Mask allowed_ = 0;
  Mask above_seed_ = 0;
  int target_ = 0;
  bool found_ = false;
  Mask best_ = 0;
};

}  // namespace

std::optional<AllianceSolution> brute_force_min_alliance(
    const Graph& g, const BruteForceOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.max_vertices || n > 64) {
    throw SearchGuardExceeded("brute force limited to " +
                              std::to_string(std::min<std::size_t>(options.max_vertices, 64)) +
                              " vertices, graph has " + std::to_string(n));
  }
  const std::size_t cap = std::min(n, options.size_cap.value_or(n));
  ConnectedSubsetSearch search(g);
  for (std::size_t size = 1; size <= cap; ++size) {
    if (auto best = search.best_of_size(static_cast<int>(size))) {
      std::vector<Vertex> members;
      for (Mask rest = *best; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
      return verify_alliance(g, std::move(members));
    }
  }
  return std::nullopt;
}

}  // namespace dalli
