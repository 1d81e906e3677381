#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "dalli/alliance.hpp"
#include "dalli/ilp.hpp"
#include "oracles.hpp"

using namespace dalli;

namespace {

IlpProblem random_problem(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  IlpProblem p;
  p.var_count = static_cast<std::size_t>(pick(1, 4));
  for (std::size_t j = 0; j < p.var_count; ++j) {
    const int lo = pick(-3, 3);
    p.bounds.push_back({lo, lo + pick(0, 6)});
    p.objective.push_back(pick(-4, 6));
  }
  const int rows = pick(0, 4);
  for (int r = 0; r < rows; ++r) {
    LinearConstraint c;
    for (std::size_t j = 0; j < p.var_count; ++j) c.coefficients.push_back(pick(-5, 5));
    c.rhs = pick(-8, 12);
    p.constraints.push_back(std::move(c));
  }
  return p;
}

bool satisfies(const IlpProblem& p, const std::vector<Integer>& x) {
  for (std::size_t j = 0; j < p.var_count; ++j)
    if (x[j] < p.bounds[j].lower || x[j] > p.bounds[j].upper) return false;
  for (const auto& c : p.constraints) {
    Integer lhs = 0;
    for (std::size_t j = 0; j < p.var_count; ++j) lhs += c.coefficients[j] * x[j];
    if (lhs < c.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small worked problems") {
  IlpProblem a;
  a.var_count = 1;
  a.objective = {1};
  a.bounds = {{0, 10}};
  a.constraints = {{{1}, 3}};
  const IlpSolution sa = solve_ilp(a);
  REQUIRE(sa.status == IlpStatus::Optimal);
  CHECK(sa.assignment == std::vector<Integer>{3});

  IlpProblem b;
  b.var_count = 2;
  b.objective = {1, 1};
  b.bounds = {{0, 1}, {0, 5}};
  b.constraints = {{{1, 1}, 3}};
  const IlpSolution sb = solve_ilp(b);
  REQUIRE(sb.status == IlpStatus::Optimal);
  CHECK(sb.objective_value == 3);

  IlpProblem c;
  c.var_count = 1;
  c.objective = {1};
  c.bounds = {{0, 2}};
  c.constraints = {{{1}, 3}};
  CHECK(solve_ilp(c).status == IlpStatus::Infeasible);
}

TEST_CASE("fractional relaxations are branched to integers") {
  // 2x + 2y >= 3 has relaxation 3/2 but integer optimum 2.
  IlpProblem p;
  p.var_count = 2;
  p.objective = {1, 1};
  p.bounds = {{0, 3}, {0, 3}};
  p.constraints = {{{2, 2}, 3}};
  const IlpSolution s = solve_ilp(p);
  CHECK(s.objective_value == 2);
  CHECK(satisfies(p, s.assignment));
}

TEST_CASE("malformed problems are rejected") {
  IlpProblem p;
  p.var_count = 2;
  p.objective = {1};
  p.bounds = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(solve_ilp(p), std::invalid_argument);
  p.objective = {1, 1};
  p.bounds = {{0, 1}, {2, 1}};
  CHECK_THROWS_AS(solve_ilp(p), std::invalid_argument);
  p.bounds = {{0, 1}, {0, 1}};
  p.constraints = {{{1}, 0}};
  CHECK_THROWS_AS(solve_ilp(p), std::invalid_argument);
}

TEST_CASE("matches grid enumeration on random problems") {
  std::mt19937_64 rng(20240601);
  int feasible = 0;
  for (int round = 0; round < 400; ++round) {
    const IlpProblem p = random_problem(rng);
    const oracle::GridResult want = oracle::grid_ilp(p);
    const IlpSolution got = solve_ilp(p);
    REQUIRE((got.status == IlpStatus::Optimal) == want.feasible);
    if (!want.feasible) continue;
    ++feasible;
    CHECK(got.objective_value == want.objective);
    CHECK(satisfies(p, got.assignment));
    Integer z = 0;
    for (std::size_t j = 0; j < p.var_count; ++j) z += p.objective[j] * got.assignment[j];
    CHECK(z == got.objective_value);
  }
  CHECK(feasible > 100);
}

TEST_CASE("node relaxations bound the integer optimum of their box") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 150; ++round) {
    const IlpProblem p = random_problem(rng);
    IlpOptions opt;
    opt.on_node = [&](const IlpNodeEvent& e) {
      bool empty = false;
      for (const auto& b : e.bounds) empty = empty || b.lower > b.upper;
      IlpProblem sub = p;
      if (!empty) sub.bounds = e.bounds;
      const oracle::GridResult inside = empty ? oracle::GridResult{} : oracle::grid_ilp(sub);
      if (!e.feasible) {
        CHECK_FALSE(inside.feasible);
      } else if (inside.feasible) {
        CHECK(e.relaxation <= Rational(inside.objective));
      }
    };
    solve_ilp(p, opt);
  }
}

TEST_CASE("budgets") {
  IlpProblem p = encode_min_alliance_ilp(corpus::cycle(9));
  IlpOptions opt;
  opt.max_nodes = 1;
  CHECK_THROWS_AS(solve_ilp(p, opt), IlpBudgetExceeded);
  IlpOptions timed;
  timed.time_limit = std::chrono::steady_clock::duration::zero();
  CHECK_THROWS_AS(solve_ilp(p, timed), IlpBudgetExceeded);
}

TEST_CASE("alliance encoding examples") {
  CHECK(solve_ilp(encode_min_alliance_ilp(corpus::path(1))).objective_value == 1);
  CHECK(solve_ilp(encode_min_alliance_ilp(corpus::cycle(4))).objective_value == 2);
  CHECK(solve_ilp(encode_min_alliance_ilp(corpus::complete(4))).objective_value == 2);
  const IlpProblem k3 = encode_min_alliance_ilp(corpus::complete(3));
  CHECK(k3.var_count == 3);
  CHECK(k3.constraints.size() == 4);
  CHECK(k3.constraints[0].coefficients == std::vector<Integer>{-1, 2, 2});
}

TEST_CASE("alliance encoding honours forbidden vertices") {
  // Path a-b-c with a forbidden: only {c} is a single-vertex alliance.
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const std::vector<Vertex> forbidden{0};
  const Graph g = Graph::build(3, edges, forbidden);
  const IlpProblem p = encode_min_alliance_ilp(g);
  CHECK(p.bounds[0].upper == 0);
  const IlpSolution s = solve_ilp(p);
  CHECK(s.objective_value == 1);
  CHECK(s.assignment == std::vector<Integer>{0, 0, 1});
}

TEST_CASE("alliance encoding equals brute force") {
  auto graphs = corpus::exhaustive_small(6);
  for (auto& extra : corpus::random_low_degree(60, 8, 12, 404)) graphs.push_back(std::move(extra));
  for (auto& extra : corpus::clique_plus(40, 505)) graphs.push_back(std::move(extra));
  for (const auto& inst : graphs) {
    const auto want = brute_force_min_alliance(inst.graph);
    const IlpSolution got = solve_ilp(encode_min_alliance_ilp(inst.graph));
    REQUIRE(want.has_value());
    REQUIRE(got.status == IlpStatus::Optimal);
    CHECK_MESSAGE(static_cast<std::size_t>(got.objective_value) == want->size, inst.id);
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < got.assignment.size(); ++v)
      if (got.assignment[v]) members.push_back(static_cast<Vertex>(v));
    CHECK(verify_alliance(inst.graph, members).valid);
  }
}

TEST_CASE("LP text export") {
  const std::string text = to_lp_format(encode_min_alliance_ilp(corpus::path(2)));
  CHECK(text ==
        "Minimize\n obj: x1 + x2\n"
        "Subject To\n c1: 2 x2 >= 0\n c2: 2 x1 >= 0\n c3: x1 + x2 >= 1\n"
        "Bounds\n 0 <= x1 <= 1\n 0 <= x2 <= 1\n"
        "General\n x1 x2\nEnd\n");
}
