#include "dalli/fpt.hpp"

#include <algorithm>
#include <optional>

#include "dalli/errors.hpp"
#include "dalli/ilp.hpp"

namespace dalli {
namespace {

constexpr std::size_t kMaxModulator = 20;

void reject_forbidden(const Graph& g) {
  if (g.has_forbidden()) {
    throw std::invalid_argument("structural solvers do not support forbidden vertices");
  }
}

int count_in(const VertexSet& set, const std::vector<char>& flags) {
  int c = 0;
  for (Vertex v : set) c += flags[v];
  return c;
}

// Keeps the smallest candidate, then the lexicographically smallest.
class Best {
 public:
  bool admits(std::size_t lower_bound) const { return !set_ || lower_bound <= set_->size(); }

  void offer(const Graph& g, VertexSet s) {
    std::sort(s.begin(), s.end());
    if (!verify_alliance(g, s).valid) {
      throw VerificationFailure("structural solver materialized an invalid alliance");
    }
    if (!set_ || s.size() < set_->size() || (s.size() == set_->size() && s < *set_)) {
      set_ = std::move(s);
    }
  }

  AllianceSolution finish(const Graph& g) const {
    return verify_alliance(g, set_ ? *set_ : VertexSet{});
  }

 private:
  std::optional<VertexSet> set_;
};

VertexSet subset_of(const VertexSet& base, std::uint64_t mask) {
  VertexSet out;
  for (std::size_t b = 0; b < base.size(); ++b)
    if (mask >> b & 1U) out.push_back(base[b]);
  return out;
}

}  // namespace

int demand(const Graph& g, Vertex u, std::span<const Vertex> P) {
  require_vertices(g, P);
  if (!g.contains(u) || std::find(P.begin(), P.end(), u) == P.end()) {
    throw std::invalid_argument("demand is defined only for members of P");
  }
  const VertexSet p = make_vertex_set({P.begin(), P.end()});
  int inside = 1;  // u itself
  for (Vertex w : g.neighbors(u))
    if (std::binary_search(p.begin(), p.end(), w)) ++inside;
  return protection_threshold(static_cast<int>(g.degree(u))) - inside;
}

AllianceSolution solve_dtc(const Graph& g, std::span<const Vertex> modulator, FptStats* stats) {
  reject_forbidden(g);
  const TwinPartition part = partition_twin_classes(g, modulator);
  const VertexSet& D = part.modulator;
  const std::size_t t = part.classes.size();
  if (D.size() > kMaxModulator || t > kMaxModulator) {
    throw std::invalid_argument("distance-to-clique guess space too large");
  }

  std::vector<int> class_threshold(t);
  for (std::size_t i = 0; i < t; ++i) {
    class_threshold[i] = protection_threshold(static_cast<int>(g.degree(part.classes[i].members.front())));
  }

  Best best;
  std::vector<char> in_p(g.vertex_count(), 0);
  const std::uint64_t all_null = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t pmask = 0; pmask < (std::uint64_t{1} << D.size()); ++pmask) {
    const VertexSet P = subset_of(D, pmask);
    std::fill(in_p.begin(), in_p.end(), 0);
    for (Vertex v : P) in_p[v] = 1;
    std::vector<int> p_adj(t);
    for (std::size_t i = 0; i < t; ++i) p_adj[i] = count_in(part.classes[i].signature, in_p);

    std::vector<Integer> demand_rhs;
    for (Vertex u : P) demand_rhs.push_back(demand(g, u, P));

    for (std::uint64_t null_mask = 0; null_mask <= all_null; ++null_mask) {
      if (pmask == 0 && null_mask == all_null) continue;
      if (stats) ++stats->guesses;
      const std::size_t picked_classes = t - static_cast<std::size_t>(__builtin_popcountll(null_mask));
      if (!best.admits(P.size() + picked_classes)) continue;

      IlpProblem ilp;
      ilp.var_count = t;
      ilp.objective.assign(t, 1);
      for (std::size_t i = 0; i < t; ++i) {
        const bool null = null_mask >> i & 1U;
        ilp.bounds.push_back({null ? 0 : 1, null ? 0 : static_cast<Integer>(part.classes[i].members.size())});
      }
      for (std::size_t k = 0; k < P.size(); ++k) {
        LinearConstraint c{std::vector<Integer>(t, 0), demand_rhs[k]};
        for (std::size_t i = 0; i < t; ++i) {
          const auto& sig = part.classes[i].signature;
          if (std::binary_search(sig.begin(), sig.end(), P[k])) c.coefficients[i] = 1;
        }
        ilp.constraints.push_back(std::move(c));
      }
      for (std::size_t i = 0; i < t; ++i) {
        if (null_mask >> i & 1U) continue;
        ilp.constraints.push_back({std::vector<Integer>(t, 1), class_threshold[i] - p_adj[i]});
      }

      if (stats) ++stats->ilp_solves;
      const IlpSolution sol = solve_ilp(ilp);
      if (sol.status != IlpStatus::Optimal) continue;
      if (!best.admits(P.size() + static_cast<std::size_t>(sol.objective_value))) continue;

      VertexSet s = P;
      for (std::size_t i = 0; i < t; ++i) {
        const auto& members = part.classes[i].members;
        s.insert(s.end(), members.begin(), members.begin() + sol.assignment[i]);
      }
      best.offer(g, std::move(s));
    }
  }
  return best.finish(g);
}

AllianceSolution solve_twincover(const Graph& g, std::span<const Vertex> cover, FptStats* stats) {
  reject_forbidden(g);
  const TwinPartition part = partition_clique_sets(g, cover);
  const VertexSet& T = part.modulator;
  if (T.size() > kMaxModulator) throw std::invalid_argument("twin cover too large");

  Best best;

  // A clique at least as large as its set's cover neighbourhood holds an
  // alliance by itself; the smallest such clique is the best of those.
  for (const auto& c : part.classes) {
    const int t_i = static_cast<int>(c.signature.size());
    for (const auto& [l, cliques] : c.cliques_by_size) {
      if (l < t_i) continue;
      const int need = protection_threshold(l - 1 + t_i);
      best.offer(g, VertexSet(cliques.front().begin(), cliques.front().begin() + need));
      break;
    }
  }

  // Any alliance touching such a clique is no smaller than the candidate
  // above, so the enumeration only places picks in the smaller cliques.
  struct Group {
    std::size_t class_index;
    int l;
    const std::vector<VertexSet>* cliques;
    std::vector<std::pair<int, int>> options;  // (full, partial)
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    const auto& c = part.classes[i];
    const int t_i = static_cast<int>(c.signature.size());
    for (const auto& [l, cliques] : c.cliques_by_size) {
      if (l >= t_i) continue;
      Group grp{i, l, &cliques, {}};
      const int m = static_cast<int>(cliques.size());
      for (int partial = 0; partial <= std::min(l - 1, m); ++partial)
        for (int full = 0; full + partial <= m; ++full) grp.options.emplace_back(full, partial);
      if (stats) {
        stats->groups.push_back({c.id, l, m, grp.options.size()});
      }
      groups.push_back(std::move(grp));
    }
  }

  std::vector<char> in_p(g.vertex_count(), 0);
  std::vector<std::size_t> choice(groups.size());
  for (std::uint64_t pmask = 0; pmask < (std::uint64_t{1} << T.size()); ++pmask) {
    const VertexSet P = subset_of(T, pmask);
    std::fill(in_p.begin(), in_p.end(), 0);
    for (Vertex v : P) in_p[v] = 1;
    std::vector<int> p_adj(part.classes.size());
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      p_adj[i] = count_in(part.classes[i].signature, in_p);
    }
    std::vector<Integer> demand_rhs;
    for (Vertex u : P) demand_rhs.push_back(demand(g, u, P));

    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      if (stats) ++stats->guesses;
      bool empty = P.empty();
      bool full_ok = true;
      std::size_t lower_bound = P.size();
      std::size_t partial_vars = 0;
      for (std::size_t q = 0; q < groups.size(); ++q) {
        const auto& grp = groups[q];
        const auto [full, partial] = grp.options[choice[q]];
        if (full + partial > 0) empty = false;
        const int t_i = static_cast<int>(part.classes[grp.class_index].signature.size());
        const int need = protection_threshold(grp.l - 1 + t_i);
        if (full > 0 && grp.l + p_adj[grp.class_index] < need) full_ok = false;
        lower_bound += static_cast<std::size_t>(full * grp.l + partial);
        partial_vars += static_cast<std::size_t>(partial);
      }

      if (!empty && full_ok && best.admits(lower_bound)) {
        IlpProblem ilp;
        ilp.var_count = partial_vars;
        ilp.objective.assign(partial_vars, 1);
        std::vector<std::size_t> var_begin(groups.size());
        std::size_t next = 0;
        Integer fixed = static_cast<Integer>(P.size());
        for (std::size_t q = 0; q < groups.size(); ++q) {
          const auto& grp = groups[q];
          const auto [full, partial] = grp.options[choice[q]];
          fixed += full * grp.l;
          var_begin[q] = next;
          const int t_i = static_cast<int>(part.classes[grp.class_index].signature.size());
          const int need = protection_threshold(grp.l - 1 + t_i);
          for (int k = 0; k < partial; ++k, ++next) {
            ilp.bounds.push_back({1, grp.l - 1});
            LinearConstraint c{std::vector<Integer>(partial_vars, 0), need - p_adj[grp.class_index]};
            c.coefficients[next] = 1;
            ilp.constraints.push_back(std::move(c));
          }
        }
        for (std::size_t k = 0; k < P.size(); ++k) {
          LinearConstraint c{std::vector<Integer>(partial_vars, 0), demand_rhs[k]};
          for (std::size_t q = 0; q < groups.size(); ++q) {
            const auto& grp = groups[q];
            const auto& sig = part.classes[grp.class_index].signature;
            if (!std::binary_search(sig.begin(), sig.end(), P[k])) continue;
            const auto [full, partial] = grp.options[choice[q]];
            c.rhs -= full * grp.l;
            for (int j = 0; j < partial; ++j) c.coefficients[var_begin[q] + j] = 1;
          }
          ilp.constraints.push_back(std::move(c));
        }

        if (stats) ++stats->ilp_solves;
        const IlpSolution sol = solve_ilp(ilp);
        if (sol.status == IlpStatus::Optimal &&
            best.admits(static_cast<std::size_t>(fixed + sol.objective_value))) {
          VertexSet s = P;
          for (std::size_t q = 0; q < groups.size(); ++q) {
            const auto& grp = groups[q];
            const auto [full, partial] = grp.options[choice[q]];
            const auto& cliques = *grp.cliques;
            for (int k = 0; k < full; ++k) s.insert(s.end(), cliques[k].begin(), cliques[k].end());
            for (int k = 0; k < partial; ++k) {
              const auto& clique = cliques[full + k];
              s.insert(s.end(), clique.begin(), clique.begin() + sol.assignment[var_begin[q] + k]);
            }
          }
          best.offer(g, std::move(s));
        }
      }

      std::size_t q = 0;
      while (q < groups.size() && ++choice[q] == groups[q].options.size()) choice[q++] = 0;
      if (q == groups.size()) break;
    }
  }
  return best.finish(g);
}

VertexSet normalize_partial_cliques(const Graph& g, const TwinPartition& partition,
                                    std::span<const Vertex> S) {
  if (partition.mode != PartitionMode::CliquesRemainder) {
    throw std::invalid_argument("partition must be in cliques-remainder mode");
  }
  require_vertices(g, S);
  if (!verify_alliance(g, {S.begin(), S.end()}).valid) {
    throw std::invalid_argument("normalize_partial_cliques needs a valid alliance");
  }
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : S) in[v] = 1;

  for (const auto& c : partition.classes) {
    for (const auto& [l, cliques] : c.cliques_by_size) {
      while (true) {
        std::vector<std::pair<int, std::size_t>> partial;  // (count, index)
        for (std::size_t k = 0; k < cliques.size(); ++k) {
          const int filled = count_in(cliques[k], in);
          if (filled > 0 && filled < l) partial.emplace_back(filled, k);
        }
        if (partial.size() <= static_cast<std::size_t>(l - 1)) break;
        std::sort(partial.begin(), partial.end());
        auto [moving, source] = partial.front();
        for (Vertex v : cliques[source]) in[v] = 0;
        // Fullest first; among equals, the one listed first.
        std::sort(partial.begin() + 1, partial.end(), [](const auto& a, const auto& b) {
          return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (std::size_t r = 1; r < partial.size() && moving > 0; ++r) {
          for (Vertex v : cliques[partial[r].second]) {
            if (moving == 0) break;
            if (!in[v]) {
              in[v] = 1;
              --moving;
            }
          }
        }
      }
    }
  }
  VertexSet out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace dalli
