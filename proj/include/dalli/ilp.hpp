#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dalli/graph.hpp"
#include "dalli/simplex.hpp"

namespace dalli {

using Integer = std::int64_t;

/// coefficients · x >= rhs
struct LinearConstraint {
  std::vector<Integer> coefficients;
  Integer rhs = 0;
};

struct VariableBounds {
  Integer lower = 0;
  Integer upper = 0;
};

/// Minimize objective · x over integer x within box bounds.
struct IlpProblem {
  std::size_t var_count = 0;
  std::vector<Integer> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBounds> bounds;

  /// Throws std::invalid_argument on length mismatches or lower > upper.
  void validate() const;
};

enum class IlpStatus { Optimal, Infeasible };

struct IlpSolution {
  IlpStatus status = IlpStatus::Infeasible;
  std::vector<Integer> assignment;
  Integer objective_value = 0;
  std::uint64_t nodes = 0;
};

/// One explored branch-and-bound node whose relaxation was solved.
struct IlpNodeEvent {
  std::vector<VariableBounds> bounds;  // after propagation
  bool feasible = false;
  Rational relaxation;  // valid when feasible
};

class IlpBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IlpOptions {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  std::optional<std::chrono::steady_clock::duration> time_limit;
  std::function<void(const IlpNodeEvent&)> on_node;
};

/// Exact branch and bound: rational simplex relaxations, activity-based
/// bound propagation, depth first on the lowest-index fractional variable
/// with the floor branch first. Throws IlpBudgetExceeded when a budget in
/// `options` runs out.
IlpSolution solve_ilp(const IlpProblem& problem, const IlpOptions& options = {});

/// 0-1 program whose optimum is the minimum defensive alliance size:
/// for every v, 2·sum_{u in N[v]} x_u >= (d(v)+1)·x_v; sum x >= 1;
/// x_v = 0 on forbidden vertices; minimize sum x. Variable i is vertex i.
IlpProblem encode_min_alliance_ilp(const Graph& g);

/// CPLEX-LP style text for cross-checking with external solvers.
std::string to_lp_format(const IlpProblem& problem);

}  // namespace dalli
