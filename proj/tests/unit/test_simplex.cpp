#include "doctest.h"

#include "dalli/simplex.hpp"

using namespace dalli;

TEST_CASE("single variable") {
  LpProblem p;
  p.rows = {{2}};
  p.rhs = {3};
  p.cost = {1};
  p.lower = {0};
  p.upper = {10};
  const LpResult r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x[0] == Rational(3, 2));
  CHECK(r.objective == Rational(3, 2));
}

TEST_CASE("infeasible through bounds") {
  LpProblem p;
  p.rows = {{1, 1}};
  p.rhs = {5};
  p.cost = {1, 1};
  p.lower = {0, 0};
  p.upper = {2, 2};
  CHECK(solve_lp(p).status == LpStatus::Infeasible);
}

TEST_CASE("fractional optimum of a covering problem") {
  // Triangle vertex cover relaxation: every edge covered, optimum 3/2.
  LpProblem p;
  p.rows = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  p.rhs = {1, 1, 1};
  p.cost = {1, 1, 1};
  p.lower = {0, 0, 0};
  p.upper = {1, 1, 1};
  const LpResult r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rational(3, 2));
}

TEST_CASE("negative costs push variables to upper bounds") {
  LpProblem p;
  p.rows = {{1, -1}};
  p.rhs = {-3};
  p.cost = {-1, 2};
  p.lower = {0, 0};
  p.upper = {4, 9};
  // maximize x0 - 2 x1 with x1 <= x0 + 3: best is x0 = 4, x1 = 0.
  const LpResult r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == -4);
}

TEST_CASE("no rows") {
  LpProblem p;
  p.cost = {3, -1};
  p.lower = {1, -2};
  p.upper = {5, 7};
  const LpResult r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == 3 - 7);
}

TEST_CASE("malformed problems are rejected") {
  LpProblem p;
  p.cost = {1};
  p.lower = {2};
  p.upper = {1};
  CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
  p.upper = {3};
  p.rows = {{1, 2}};
  p.rhs = {0};
  CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
}
