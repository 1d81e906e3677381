#include "dalli/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace dalli {
namespace {

constexpr std::uint64_t kPivotLimit = 1'000'000;

// Dense tableau over columns [structural | surplus | artificial]. Row i reads
//   x_{basis[i]} + sum_{j nonbasic} T[i][j] x_j = const,
// and beta[i] holds the current value of x_{basis[i]}.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : n_(p.cost.size()), m_(p.rows.size()) {
    std::vector<Rational> residual(m_);
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      residual[i] = p.rhs[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (p.rows[i][j] != 0) residual[i] -= Rational(p.rows[i][j]) * Rational(p.lower[j]);
      }
      if (sgn(residual[i]) > 0) ++artificials;
    }
    cols_ = n_ + m_ + artificials;
    lower_.assign(cols_, 0);
    upper_.assign(cols_, 0);
    upper_finite_.assign(cols_, true);
    at_upper_.assign(cols_, false);
    basic_row_.assign(cols_, -1);
    for (std::size_t j = 0; j < n_; ++j) {
      lower_[j] = p.lower[j];
      upper_[j] = p.upper[j];
    }
    for (std::size_t i = 0; i < m_; ++i) upper_finite_[n_ + i] = false;
    for (std::size_t k = 0; k < artificials; ++k) upper_finite_[n_ + m_ + k] = false;

    table_.assign(m_, std::vector<Rational>(cols_));
    beta_.assign(m_, 0);
    basis_.assign(m_, 0);
    std::size_t next_art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      auto& row = table_[i];
      const std::size_t surplus = n_ + i;
      if (sgn(residual[i]) > 0) {
        // a·x - s + art = b, artificial basic at b - a·lower.
        for (std::size_t j = 0; j < n_; ++j) row[j] = p.rows[i][j];
        row[surplus] = -1;
        row[next_art] = 1;
        basis_[i] = next_art;
        beta_[i] = residual[i];
        ++next_art;
      } else {
        // s - a·x = -b, surplus basic at a·lower - b.
        for (std::size_t j = 0; j < n_; ++j) row[j] = -p.rows[i][j];
        row[surplus] = 1;
        basis_[i] = surplus;
        beta_[i] = -residual[i];
      }
      basic_row_[basis_[i]] = static_cast<long>(i);
    }
    artificial_begin_ = n_ + m_;
  }

  bool has_artificials() const { return cols_ > artificial_begin_; }

  // Minimizes cost over the current feasible basis.
  void optimize(const std::vector<Rational>& cost) {
    reduced_.assign(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(table_[i][j]) != 0) reduced_[j] -= cb * table_[i][j];
      }
    }
    while (true) {
      if (++pivots_ > kPivotLimit) throw std::runtime_error("simplex pivot limit reached");
      std::optional<std::size_t> entering;
      int direction = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (basic_row_[j] >= 0 || is_fixed(j)) continue;
        const int s = sgn(reduced_[j]);
        if (!at_upper_[j] && s < 0) {
          entering = j;
          direction = 1;
          break;
        }
        if (at_upper_[j] && s > 0) {
          entering = j;
          direction = -1;
          break;
        }
      }
      if (!entering) return;
      step(*entering, direction);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(cost[j]) != 0) z += cost[j] * value(j);
    }
    return z;
  }

  // Artificials leave the problem: pinned at zero they can never re-enter.
  void retire_artificials() {
    for (std::size_t j = artificial_begin_; j < cols_; ++j) {
      upper_[j] = 0;
      upper_finite_[j] = true;
      at_upper_[j] = false;
    }
  }

  Rational value(std::size_t j) const {
    if (basic_row_[j] >= 0) return beta_[basic_row_[j]];
    return at_upper_[j] ? upper_[j] : lower_[j];
  }

  std::size_t columns() const { return cols_; }
  std::size_t structural() const { return n_; }
  std::size_t artificial_begin() const { return artificial_begin_; }
  std::uint64_t pivots() const { return pivots_; }

 private:
  bool is_fixed(std::size_t j) const { return upper_finite_[j] && lower_[j] == upper_[j]; }

  void step(std::size_t j, int direction) {
    // Longest move of x_j in `direction` keeping every basic within bounds.
    std::optional<Rational> theta;
    long leave = -1;
    bool leave_to_upper = false;
    if (upper_finite_[j]) theta = upper_[j] - lower_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const int s = sgn(table_[i][j]);
      if (s == 0) continue;
      const std::size_t b = basis_[i];
      // Basic value moves by -direction * T[i][j] per unit step.
      const int rate_sign = -direction * s;
      Rational limit;
      if (rate_sign < 0) {
        limit = (beta_[i] - lower_[b]) / abs(table_[i][j]);
      } else if (upper_finite_[b]) {
        limit = (upper_[b] - beta_[i]) / abs(table_[i][j]);
      } else {
        continue;
      }
      const bool strictly_better = !theta || limit < *theta;
      const bool tie_better = theta && limit == *theta && leave >= 0 &&
                              b < basis_[static_cast<std::size_t>(leave)];
      if (strictly_better || tie_better) {
        theta = limit;
        leave = static_cast<long>(i);
        leave_to_upper = rate_sign > 0;
      }
    }
    if (!theta) throw std::logic_error("linear relaxation is unbounded");

    const Rational& t = *theta;
    if (sgn(t) != 0) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(table_[i][j]) == 0) continue;
        Rational delta = table_[i][j] * t;
        if (direction > 0) beta_[i] -= delta;
        else beta_[i] += delta;
      }
    }
    if (leave < 0) {
      at_upper_[j] = !at_upper_[j];
      return;
    }

    const std::size_t r = static_cast<std::size_t>(leave);
    const std::size_t out = basis_[r];
    Rational entering_value = (at_upper_[j] ? upper_[j] : lower_[j]);
    if (direction > 0) entering_value += t;
    else entering_value -= t;

    pivot(r, j);
    basic_row_[out] = -1;
    at_upper_[out] = leave_to_upper;
    basis_[r] = j;
    basic_row_[j] = static_cast<long>(r);
    at_upper_[j] = false;
    beta_[r] = entering_value;
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = table_[r];
    const Rational piv = prow[j];
    nonzero_.clear();
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] /= piv;
        nonzero_.push_back(k);
      }
    }
    Rational scratch;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      auto& row = table_[i];
      if (sgn(row[j]) == 0) continue;
      const Rational factor = row[j];
      for (std::size_t k : nonzero_) {
        scratch = factor * prow[k];
        row[k] -= scratch;
      }
    }
    if (sgn(reduced_[j]) != 0) {
      const Rational factor = reduced_[j];
      for (std::size_t k : nonzero_) {
        scratch = factor * prow[k];
        reduced_[k] -= scratch;
      }
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t artificial_begin_ = 0;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<long> basic_row_;
  std::vector<Rational> lower_;
  std::vector<Rational> upper_;
  std::vector<bool> upper_finite_;
  std::vector<bool> at_upper_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> nonzero_;
  std::uint64_t pivots_ = 0;
};

void validate(const LpProblem& p) {
  const std::size_t n = p.cost.size();
  if (p.lower.size() != n || p.upper.size() != n || p.rhs.size() != p.rows.size()) {
    throw std::invalid_argument("LP dimensions disagree");
  }
  for (const auto& row : p.rows) {
    if (row.size() != n) throw std::invalid_argument("LP row length mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (p.lower[j] > p.upper[j]) throw std::invalid_argument("LP bound lower > upper");
  }
}

}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  validate(problem);
  Tableau tableau(problem);
  LpResult result;

  if (tableau.has_artificials()) {
    std::vector<Rational> phase_one(tableau.columns(), 0);
    for (std::size_t j = tableau.artificial_begin(); j < tableau.columns(); ++j) phase_one[j] = 1;
    tableau.optimize(phase_one);
    if (sgn(tableau.objective(phase_one)) > 0) {
      result.status = LpStatus::Infeasible;
      result.pivots = tableau.pivots();
      return result;
    }
    tableau.retire_artificials();
  }

  std::vector<Rational> cost(tableau.columns(), 0);
  for (std::size_t j = 0; j < problem.cost.size(); ++j) cost[j] = problem.cost[j];
  tableau.optimize(cost);

  result.status = LpStatus::Optimal;
  result.x.reserve(tableau.structural());
  for (std::size_t j = 0; j < tableau.structural(); ++j) result.x.push_back(tableau.value(j));
  result.objective = tableau.objective(cost);
  result.pivots = tableau.pivots();
  return result;
}

}  // namespace dalli
