#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace dalli {

using Rational = mpq_class;

/// minimize cost·x  subject to  rows·x >= rhs,  lower <= x <= upper.
/// Bounds must be finite with lower <= upper.
struct LpProblem {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> cost;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

enum class LpStatus { Optimal, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  std::uint64_t pivots = 0;
};

/// Exact two-phase bounded-variable primal simplex over the rationals with
/// Bland's rule. Returns an optimal basic solution.
LpResult solve_lp(const LpProblem& problem);

}  // namespace dalli
