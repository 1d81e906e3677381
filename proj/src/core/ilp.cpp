#include "dalli/ilp.hpp"

#include <sstream>

namespace dalli {

void IlpProblem::validate() const {
  if (objective.size() != var_count || bounds.size() != var_count) {
    throw std::invalid_argument("objective/bounds length must equal var_count");
  }
  for (const auto& c : constraints) {
    if (c.coefficients.size() != var_count) {
      throw std::invalid_argument("constraint length must equal var_count");
    }
  }
  for (const auto& b : bounds) {
    if (b.lower > b.upper) throw std::invalid_argument("variable bound lower > upper");
  }
}

namespace {

using Wide = __int128;

Wide floor_div(Wide a, Wide b) {  // b > 0
  Wide q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) {  // b > 0
  Wide q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

// Tightens bounds from each row's maximum activity until nothing moves.
bool propagate(const IlpProblem& p, std::vector<VariableBounds>& b) {
  for (int round = 0; round < 100; ++round) {
    bool changed = false;
    for (const auto& c : p.constraints) {
      Wide max_activity = 0;
      for (std::size_t j = 0; j < p.var_count; ++j) {
        const Wide a = c.coefficients[j];
        if (a > 0) max_activity += a * b[j].upper;
        else if (a < 0) max_activity += a * b[j].lower;
      }
      if (max_activity < c.rhs) return false;
      for (std::size_t j = 0; j < p.var_count; ++j) {
        const Wide a = c.coefficients[j];
        if (a == 0) continue;
        const Wide rest = max_activity - (a > 0 ? a * b[j].upper : a * b[j].lower);
        if (a > 0) {
          const Wide lo = ceil_div(Wide(c.rhs) - rest, a);
          if (lo > b[j].lower) {
            b[j].lower = static_cast<Integer>(lo);
            changed = true;
          }
        } else {
          const Wide hi = floor_div(rest - Wide(c.rhs), -a);
          if (hi < b[j].upper) {
            b[j].upper = static_cast<Integer>(hi);
            changed = true;
          }
        }
        if (b[j].lower > b[j].upper) return false;
      }
    }
    if (!changed) break;
  }
  return true;
}

struct Relaxation {
  bool feasible = false;
  std::vector<Rational> x;  // full length
  Rational objective;
};

// Solves the relaxation over the free variables only; fixed variables and
// rows that can no longer be violated are folded away.
Relaxation relax(const IlpProblem& p, const std::vector<VariableBounds>& b) {
  std::vector<std::size_t> free_vars;
  std::vector<long> position(p.var_count, -1);
  Rational constant = 0;
  for (std::size_t j = 0; j < p.var_count; ++j) {
    if (b[j].lower < b[j].upper) {
      position[j] = static_cast<long>(free_vars.size());
      free_vars.push_back(j);
    } else if (p.objective[j] != 0) {
      constant += Rational(p.objective[j]) * Rational(b[j].lower);
    }
  }

  LpProblem lp;
  for (std::size_t j : free_vars) {
    lp.cost.push_back(p.objective[j]);
    lp.lower.push_back(b[j].lower);
    lp.upper.push_back(b[j].upper);
  }
  for (const auto& c : p.constraints) {
    Wide rhs = c.rhs;
    Wide min_activity = 0;
    std::vector<Integer> row(free_vars.size(), 0);
    for (std::size_t j = 0; j < p.var_count; ++j) {
      const Integer a = c.coefficients[j];
      if (a == 0) continue;
      if (position[j] < 0) {
        rhs -= Wide(a) * b[j].lower;
      } else {
        row[position[j]] = a;
        min_activity += Wide(a) * (a > 0 ? b[j].lower : b[j].upper);
      }
    }
    if (min_activity >= rhs) continue;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(static_cast<Integer>(rhs));
  }

  LpResult result = solve_lp(lp);
  Relaxation out;
  if (result.status != LpStatus::Optimal) return out;
  out.feasible = true;
  out.x.resize(p.var_count);
  for (std::size_t j = 0; j < p.var_count; ++j) {
    out.x[j] = position[j] < 0 ? Rational(b[j].lower) : result.x[position[j]];
  }
  out.objective = result.objective + constant;
  return out;
}

Integer ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<Integer>(r.get_si());
}

Integer floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<Integer>(r.get_si());
}

}  // namespace

IlpSolution solve_ilp(const IlpProblem& problem, const IlpOptions& options) {
  problem.validate();
  const auto started = std::chrono::steady_clock::now();

  IlpSolution best;
  std::optional<Integer> incumbent;
  std::vector<std::vector<VariableBounds>> stack{problem.bounds};

  while (!stack.empty()) {
    std::vector<VariableBounds> bounds = std::move(stack.back());
    stack.pop_back();
    ++best.nodes;
    if (options.max_nodes != 0 && best.nodes > options.max_nodes) {
      throw IlpBudgetExceeded("branch and bound node budget exhausted");
    }
    if (options.time_limit &&
        std::chrono::steady_clock::now() - started > *options.time_limit) {
      throw IlpBudgetExceeded("branch and bound time budget exhausted");
    }

    IlpNodeEvent event;
    Relaxation relaxation;
    if (propagate(problem, bounds)) relaxation = relax(problem, bounds);
    if (options.on_node) {
      event.bounds = bounds;
      event.feasible = relaxation.feasible;
      if (relaxation.feasible) event.relaxation = relaxation.objective;
      options.on_node(event);
    }
    if (!relaxation.feasible) continue;

    // Integer objective coefficients make every integer point's value an
    // integer, so the node bound rounds up.
    const Integer node_bound = ceil_of(relaxation.objective);
    if (incumbent && node_bound >= *incumbent) continue;

    std::optional<std::size_t> fractional;
    for (std::size_t j = 0; j < problem.var_count; ++j) {
      if (relaxation.x[j].get_den() != 1) {
        fractional = j;
        break;
      }
    }
    if (!fractional) {
      incumbent = node_bound;
      best.status = IlpStatus::Optimal;
      best.objective_value = node_bound;
      best.assignment.clear();
      for (const auto& v : relaxation.x) best.assignment.push_back(static_cast<Integer>(v.get_num().get_si()));
      continue;
    }

    const std::size_t j = *fractional;
    const Integer down = floor_of(relaxation.x[j]);
    auto ceil_child = bounds;
    ceil_child[j].lower = down + 1;
    auto floor_child = std::move(bounds);
    floor_child[j].upper = down;
    stack.push_back(std::move(ceil_child));
    stack.push_back(std::move(floor_child));
  }
  return best;
}

IlpProblem encode_min_alliance_ilp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IlpProblem p;
  p.var_count = n;
  p.objective.assign(n, 1);
  p.bounds.assign(n, {0, 1});
  for (Vertex f : g.forbidden()) p.bounds[f] = {0, 0};
  for (std::size_t v = 0; v < n; ++v) {
    LinearConstraint c;
    c.coefficients.assign(n, 0);
    const auto degree = static_cast<Integer>(g.degree(static_cast<Vertex>(v)));
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) c.coefficients[u] = 2;
    c.coefficients[v] = 2 - (degree + 1);
    c.rhs = 0;
    p.constraints.push_back(std::move(c));
  }
  LinearConstraint nonempty;
  nonempty.coefficients.assign(n, 1);
  nonempty.rhs = 1;
  p.constraints.push_back(std::move(nonempty));
  return p;
}

namespace {

void write_terms(std::ostream& out, const std::vector<Integer>& coefficients) {
  bool first = true;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const Integer a = coefficients[j];
    if (a == 0) continue;
    const Integer mag = a < 0 ? -a : a;
    if (first) out << (a < 0 ? "-" : "");
    else out << (a < 0 ? " - " : " + ");
    if (mag != 1) out << mag << ' ';
    out << 'x' << (j + 1);
    first = false;
  }
  if (first) out << "0 x1";
}

}  // namespace

std::string to_lp_format(const IlpProblem& problem) {
  problem.validate();
  std::ostringstream out;
  out << "Minimize\n obj: ";
  write_terms(out, problem.objective);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    out << " c" << (i + 1) << ": ";
    write_terms(out, problem.constraints[i].coefficients);
    out << " >= " << problem.constraints[i].rhs << '\n';
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < problem.var_count; ++j) {
    out << ' ' << problem.bounds[j].lower << " <= x" << (j + 1) << " <= "
        << problem.bounds[j].upper << '\n';
  }
  out << "General\n";
  for (std::size_t j = 0; j < problem.var_count; ++j) out << " x" << (j + 1);
  out << "\nEnd\n";
  return out.str();
}

}  // namespace dalli
