#include "dalli/reduction.hpp"

#include <algorithm>

#include "dalli/errors.hpp"

namespace dalli {
namespace {

constexpr int kCoreIds = 13;
constexpr int kForbiddenIds = 32;

CopyIds copy_ids(int i) {
  CopyIds ids;
  const int base = kCoreIds * i;
  for (int j = 0; j < 4; ++j) {
    ids.v[j] = base + j;
    ids.u[j] = base + 4 + j;
    ids.w[j] = base + 8 + j;
  }
  ids.s = base + 12;
  return ids;
}

}  // namespace

ReductionInstance build_reduction(const Graph& source, std::size_t k) {
  const std::size_t n = source.vertex_count();
  if (n == 0) throw ReductionError("source graph is empty");
  if (source.has_forbidden()) throw ReductionError("source graph has forbidden vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (source.degree(static_cast<Vertex>(i)) != 3) throw ReductionError("source graph is not cubic");
  }
  if (k < 1 || k > n) throw ReductionError("k must lie in [1, n]");

  ReductionInstance inst;
  inst.source = source;
  inst.k = k;
  inst.k_prime = 4 * n + 8 * k;
  for (std::size_t i = 0; i < n; ++i) inst.vertex_map.push_back(copy_ids(static_cast<int>(i)));

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const CopyIds& c = inst.vertex_map[i];
    for (int j = 0; j < 4; ++j) {
      edges.push_back({c.v[j], c.u[j]});
      edges.push_back({c.v[j], c.w[j]});
      edges.push_back({c.u[j], c.w[j]});
    }
    edges.push_back({c.v[0], c.u[1]});
    edges.push_back({c.w[1], c.u[2]});
    edges.push_back({c.w[2], c.u[3]});
    if (i + 1 < n) edges.push_back({c.w[0], inst.vertex_map[i + 1].u[0]});
    edges.push_back({c.s, c.v[0]});
  }

  std::vector<std::array<bool, 4>> taken(n, {false, false, false, false});
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex nb : source.neighbors(static_cast<Vertex>(i))) {
      int j = 1;
      while (j <= 3 && taken[nb][j]) ++j;
      // Each vertex has exactly three neighbours, so a free copy remains.
      taken[nb][j] = true;
      edges.push_back({inst.vertex_map[i].s, inst.vertex_map[nb].v[j]});
    }
  }

  Vertex next = static_cast<Vertex>(kCoreIds * n);
  std::vector<Vertex> forbidden;
  auto attach = [&](Vertex at, int count) {
    for (int q = 0; q < count; ++q) {
      edges.push_back({at, next});
      forbidden.push_back(next++);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const CopyIds& c = inst.vertex_map[i];
    for (int j = 0; j < 4; ++j) attach(c.v[j], 2);
    for (int j = 0; j < 4; ++j) attach(c.u[j], 3);
    for (int j = 0; j < 4; ++j) attach(c.w[j], 3);
  }
  inst.forbidden_count = forbidden.size();
  inst.target = Graph::build(static_cast<std::size_t>(next), edges, forbidden);
  return inst;
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
  require_vertices(g, set);
  std::vector<char> covered(g.vertex_count(), 0);
  for (Vertex v : set) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

AllianceSolution alliance_from_dominating_set(const ReductionInstance& inst,
                                              std::span<const Vertex> dominating_set) {
  const VertexSet ds = make_vertex_set({dominating_set.begin(), dominating_set.end()});
  if (!is_dominating_set(inst.source, ds)) throw ReductionError("not a dominating set of the source");
  if (ds.size() > inst.k) throw ReductionError("dominating set larger than k");

  std::vector<Vertex> members;
  for (std::size_t i = 0; i < inst.vertex_map.size(); ++i) {
    const CopyIds& c = inst.vertex_map[i];
    members.insert(members.end(), {c.u[0], c.v[0], c.w[0]});
    if (std::binary_search(ds.begin(), ds.end(), static_cast<Vertex>(i))) {
      for (int j = 1; j <= 3; ++j) members.insert(members.end(), {c.u[j], c.v[j], c.w[j]});
    } else {
      members.push_back(c.s);
    }
  }
  return verify_alliance(inst.target, std::move(members));
}

VertexSet extract_dominating_set(const ReductionInstance& inst, std::span<const Vertex> alliance) {
  require_vertices(inst.target, alliance);
  const AllianceSolution check = verify_alliance(inst.target, {alliance.begin(), alliance.end()});
  if (!check.valid) throw ReductionError("alliance is not valid on the target graph");
  if (check.size > inst.k_prime) throw ReductionError("alliance larger than k'");

  std::vector<char> in(inst.target.vertex_count(), 0);
  for (Vertex v : check.members) in[v] = 1;
  VertexSet out;
  for (std::size_t i = 0; i < inst.vertex_map.size(); ++i) {
    const CopyIds& c = inst.vertex_map[i];
    bool all = true;
    for (int j = 1; j <= 3; ++j) all = all && in[c.u[j]] && in[c.v[j]] && in[c.w[j]];
    if (all) out.push_back(static_cast<Vertex>(i));
  }
  if (!is_dominating_set(inst.source, out) || out.size() > inst.k) {
    throw VerificationFailure("extracted set is not a dominating set of size at most k");
  }
  return out;
}

mpz_class moore_bound(int r, int g) {
  if (r < 3 || g < 3) throw std::invalid_argument("moore_bound needs r >= 3 and g >= 3");
  mpz_class power;
  mpz_class numerator;
  if (g % 2 == 1) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>((g - 1) / 2));
    numerator = r * power - 2;
  } else {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(g / 2));
    numerator = 2 * power - 2;
  }
  mpz_class out;
  mpz_fdiv_q_ui(out.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(r - 2));
  return out;
}

GadgetBounds gadget_bounds(int r, std::size_t vertices) {
  if (r < 3 || vertices < 1) throw std::invalid_argument("gadget_bounds needs r >= 3 and |V| >= 1");
  GadgetBounds b;
  b.r = r;
  b.vertices = vertices;
  // g >= (4/3) log_{r-1} |V|  <=>  (r-1)^(3g) >= |V|^4
  mpz_class target;
  mpz_class n = static_cast<unsigned long>(vertices);
  mpz_pow_ui(target.get_mpz_t(), n.get_mpz_t(), 4);
  int g = 0;
  mpz_class lhs = 1;
  mpz_class step;
  mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(r - 1), 3);
  while (lhs < target) {
    lhs *= step;
    ++g;
  }
  b.girth = std::max(g, 3);
  b.moore_lower_bound = moore_bound(r, b.girth);
  b.msmd3_lower_bound = moore_bound(3, b.girth);
  return b;
}

mpz_class gadget_size_estimate(std::size_t k_prime) {
  const GadgetBounds defaults{};
  const mpz_class& c_num = defaults.c.get_num();
  const mpz_class& c_den = defaults.c.get_den();
  const unsigned long e_num = defaults.exponent.get_num().get_ui();
  const unsigned long e_den = defaults.exponent.get_den().get_ui();

  // N <= ((k'+1)/c)^(p/q)  <=>  N^q * c_num^p <= ((k'+1) * c_den)^p
  mpz_class base = mpz_class(static_cast<unsigned long>(k_prime + 1)) * c_den;
  mpz_class rhs;
  mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), e_num);
  mpz_class c_pow;
  mpz_pow_ui(c_pow.get_mpz_t(), c_num.get_mpz_t(), e_num);

  auto fits = [&](const mpz_class& N) {
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), N.get_mpz_t(), e_den);
    return lhs * c_pow <= rhs;
  };
  mpz_class lo = 0;
  mpz_class hi = 1;
  while (fits(hi)) hi *= 2;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (fits(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace dalli
