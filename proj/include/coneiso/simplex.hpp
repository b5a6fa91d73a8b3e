#pragma once

// Dense two-phase simplex for small linear programs:
//
//   maximize  c^T z   subject to  A z <= b,  z >= 0.
//
// Rows with negative right-hand side get an artificial variable and are
// resolved in phase one. Pivoting follows Bland's rule, so the method
// terminates on degenerate problems.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "coneiso/errors.hpp"

namespace coneiso::lp {

struct Problem {
  std::vector<double> objective;                // c, one entry per variable
  std::vector<std::vector<double>> lhs;         // A, one row per constraint
  std::vector<double> rhs;                      // b
};

struct Solution {
  std::vector<double> variables;
  double objective = 0.0;
  std::size_t pivots = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1), 0.0), cost_(cols + 1, 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  std::vector<double>& cost() { return cost_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Reduced cost row from raw costs: cost_j - sum_i c_{B_i} T_ij.
  void set_costs(std::span<const double> raw) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = raw[j];
    cost_[cols_] = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = raw[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * at(r, j);
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t j = 0; j <= cols_; ++j) at(pr, j) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(r, j) -= f * at(pr, j);
      at(r, pc) = 0.0;
    }
    const double f = cost_[pc];
    if (f != 0.0) {
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= f * at(pr, j);
      cost_[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  // Runs simplex iterations over columns [0, allowed). Returns false if unbounded.
  bool optimize(std::size_t allowed, double eps, std::size_t& pivots) {
    const std::size_t limit = 50 * (rows_ + cols_) + 1000;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost_[j] > eps) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= eps) continue;
        const double ratio = rhs(r) / a;
        if (leave == rows_ || ratio < best - eps) {
          best = ratio;
          leave = r;
        } else if (ratio <= best + eps && basis_[r] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
      ++pivots;
    }
    throw Error(ErrorKind::MaxIterations, "simplex iteration limit reached");
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::vector<double> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves the program. Throws InfeasibleProgram / UnboundedProgram.
inline Solution maximize(const Problem& problem, double eps = 1e-11) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.rhs.size();
  if (problem.lhs.size() != m) {
    throw Error(ErrorKind::DegenerateInput, "constraint matrix and right-hand side disagree in size");
  }
  for (const auto& row : problem.lhs) {
    if (row.size() != n) throw Error(ErrorKind::DegenerateInput, "constraint row has wrong width");
  }

  std::vector<std::size_t> artificial_rows;
  for (std::size_t r = 0; r < m; ++r) {
    if (problem.rhs[r] < 0.0) artificial_rows.push_back(r);
  }
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m;
  const std::size_t cols = n + m + artificial_rows.size();

  detail::Tableau t(m, cols);
  std::size_t next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = problem.rhs[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * problem.lhs[r][j];
    t.at(r, slack0 + r) = sign;
    t.rhs(r) = sign * problem.rhs[r];
    if (sign < 0.0) {
      t.at(r, next_art) = 1.0;
      t.basis()[r] = next_art++;
    } else {
      t.basis()[r] = slack0 + r;
    }
  }

  Solution out;
  if (!artificial_rows.empty()) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1.0;
    t.set_costs(phase1);
    t.optimize(cols, eps, out.pivots);
    // cost_[cols] holds minus the objective value, i.e. the artificial sum.
    const double residual = t.cost()[cols];
    double scale = 1.0;
    for (double b : problem.rhs) scale = std::max(scale, std::abs(b));
    if (residual > 1e-9 * scale) {
      throw Error(ErrorKind::InfeasibleProgram, "constraints admit no feasible point");
    }
    // Drive remaining artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(t.at(r, j)) > eps) {
          t.pivot(r, j);
          ++out.pivots;
          break;
        }
      }
    }
  }

  std::vector<double> phase2(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.objective[j];
  t.set_costs(phase2);
  if (!t.optimize(art0, eps, out.pivots)) {
    throw Error(ErrorKind::UnboundedProgram, "objective is unbounded above");
  }

  out.variables.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) out.variables[t.basis()[r]] = t.rhs(r);
  }
  out.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.objective += problem.objective[j] * out.variables[j];
  return out;
}

}  // namespace coneiso::lp
