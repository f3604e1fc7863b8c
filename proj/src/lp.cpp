// Copyright 2026 The deskrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deskrisk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deskrisk {

int LinearProgram::add_variable(double cost, double lower_bound,
                                double upper_bound) {
  objective.push_back(cost);
  lower.push_back(lower_bound);
  upper.push_back(upper_bound);
  return num_vars() - 1;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kInfeasible:
      return "Infeasible";
    case LpStatus::kUnbounded:
      return "Unbounded";
    case LpStatus::kError:
      return "Error";
  }
  return "Error";
}

void check_program(const LinearProgram& lp) {
  const int k = lp.num_vars();
  if (static_cast<int>(lp.lower.size()) != k ||
      static_cast<int>(lp.upper.size()) != k) {
    throw std::invalid_argument("bound vectors do not match variable count");
  }
  for (int j = 0; j < k; ++j) {
    const std::string var = "variable " + std::to_string(j);
    if (!std::isfinite(lp.objective[j])) {
      throw std::invalid_argument(var + " has a non-finite cost");
    }
    if (!std::isfinite(lp.lower[j])) {
      throw std::invalid_argument(var + " needs a finite lower bound");
    }
    if (std::isnan(lp.upper[j]) || lp.upper[j] < lp.lower[j]) {
      throw std::invalid_argument(var + " has upper < lower");
    }
  }
  for (int r = 0; r < lp.num_rows(); ++r) {
    const LinearRow& row = lp.rows[r];
    if (!std::isfinite(row.rhs)) {
      throw std::invalid_argument("row " + std::to_string(r) +
                                  " has a non-finite rhs");
    }
    for (const auto& [var, coef] : row.terms) {
      if (var < 0 || var >= k) {
        throw std::invalid_argument("row " + std::to_string(r) +
                                    " references variable " +
                                    std::to_string(var));
      }
      if (!std::isfinite(coef)) {
        throw std::invalid_argument("row " + std::to_string(r) +
                                    " has a non-finite coefficient");
      }
    }
  }
}

double max_violation(const LinearProgram& lp,
                     const std::vector<double>& values) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_vars(); ++j) {
    worst = std::max(worst, lp.lower[j] - values[j]);
    if (std::isfinite(lp.upper[j])) worst = std::max(worst, values[j] - lp.upper[j]);
  }
  for (const LinearRow& row : lp.rows) {
    double activity = 0.0;
    for (const auto& [var, coef] : row.terms) activity += coef * values[var];
    const double diff = activity - row.rhs;
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, diff);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, -diff);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(diff));
        break;
    }
  }
  return worst;
}

double evaluate_objective(const LinearProgram& lp,
                          const std::vector<double>& values) {
  double total = 0.0;
  for (int j = 0; j < lp.num_vars(); ++j) total += lp.objective[j] * values[j];
  return total;
}

namespace {

enum class VarState : unsigned char { kBasic, kAtLower, kAtUpper };

// Below this much work per loop the OpenMP region costs more than it saves.
constexpr std::int64_t kParallelWork = 1 << 14;

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const LpOptions& options)
      : lp_(lp), opt_(options), rows_(lp.num_rows()), structural_(lp.num_vars()) {
    build_columns();
    parallel_ = options.execution == Execution::kParallel;
    max_iterations_ = options.max_iterations >= 0
                          ? options.max_iterations
                          : 50LL * (rows_ + columns_) + 1000;
  }

  LpResult run() {
    LpResult result;
    if (has_artificials_) {
      cost_.assign(columns_, 0.0);
      for (int j = 0; j < columns_; ++j) {
        if (artificial_[j]) cost_[j] = 1.0;
      }
      const LpStatus s = iterate(result);
      if (s != LpStatus::kOptimal) return fail(result, s);
      recompute_basic_values();
      double worst = 0.0;
      for (int j = 0; j < columns_; ++j) {
        if (artificial_[j]) worst = std::max(worst, x_[j]);
      }
      if (worst > opt_.feasibility_tolerance) {
        result.status = LpStatus::kInfeasible;
        result.message = "phase 1 ended with artificial value " +
                         std::to_string(worst);
        return result;
      }
      for (int j = 0; j < columns_; ++j) {
        if (artificial_[j]) upper_[j] = 0.0;
      }
    }
    cost_.assign(columns_, 0.0);
    std::copy(lp_.objective.begin(), lp_.objective.end(), cost_.begin());
    for (int attempt = 0;; ++attempt) {
      const LpStatus s = iterate(result);
      if (s != LpStatus::kOptimal) return fail(result, s);
      if (certify(result)) return result;
      if (attempt == 2) {
        return fail(result, LpStatus::kError,
                    "could not certify the optimum: " + result.message);
      }
      if (!refactor()) {
        return fail(result, LpStatus::kError, "basis became singular");
      }
    }
  }

 private:
  void build_columns() {
    // Structural columns from the row-wise terms.
    std::vector<int> count(structural_, 0);
    for (const LinearRow& row : lp_.rows) {
      for (const auto& term : row.terms) ++count[term.first];
    }
    start_.assign(structural_ + 1, 0);
    for (int j = 0; j < structural_; ++j) start_[j + 1] = start_[j] + count[j];
    entry_row_.resize(start_.back());
    entry_val_.resize(start_.back());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (int r = 0; r < rows_; ++r) {
      for (const auto& [var, coef] : lp_.rows[r].terms) {
        entry_row_[fill[var]] = r;
        entry_val_[fill[var]++] = coef;
      }
    }
    lower_ = lp_.lower;
    upper_ = lp_.upper;
    x_ = lp_.lower;
    state_.assign(structural_, VarState::kAtLower);
    artificial_.assign(structural_, false);

    std::vector<double> activity(rows_, 0.0);
    for (int j = 0; j < structural_; ++j) {
      for (int k = start_[j]; k < start_[j + 1]; ++k) {
        activity[entry_row_[k]] += entry_val_[k] * x_[j];
      }
    }
    basis_.assign(rows_, -1);
    binv_.assign(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      const LinearRow& row = lp_.rows[r];
      const double residual = row.rhs - activity[r];
      int basic = -1;
      double coef = 0.0;
      if (row.sense != RowSense::kEqual) {
        coef = row.sense == RowSense::kLessEqual ? 1.0 : -1.0;
        const double value = residual * coef;
        const int slack = add_unit_column(r, coef, false);
        if (value >= 0.0) {
          basic = slack;
          x_[slack] = value;
        }
      }
      if (basic < 0) {
        coef = residual < 0.0 ? -1.0 : 1.0;
        basic = add_unit_column(r, coef, true);
        x_[basic] = std::abs(residual);
        has_artificials_ = true;
      }
      basis_[r] = basic;
      state_[basic] = VarState::kBasic;
      binv_[static_cast<std::size_t>(r) * rows_ + r] = 1.0 / coef;
    }
    columns_ = static_cast<int>(lower_.size());
  }

  int add_unit_column(int row, double coef, bool artificial) {
    const int j = static_cast<int>(lower_.size());
    start_.push_back(start_.back() + 1);
    entry_row_.push_back(row);
    entry_val_.push_back(coef);
    lower_.push_back(0.0);
    upper_.push_back(kLpInfinity);
    x_.push_back(0.0);
    state_.push_back(VarState::kAtLower);
    artificial_.push_back(artificial);
    return j;
  }

  double* binv_row(int r) { return binv_.data() + static_cast<std::size_t>(r) * rows_; }

  bool use_threads(std::int64_t work) const {
    return parallel_ && work >= kParallelWork;
  }

  // y = c_B^T B^{-1}, accumulated row by row over basic columns with
  // nonzero cost; threads split the y range.
  void recompute_duals() {
    y_.assign(rows_, 0.0);
    const bool par = use_threads(static_cast<std::int64_t>(rows_) * rows_);
    const int blocks = par ? std::max(1, max_threads()) : 1;
#pragma omp parallel for schedule(static) if (par)
    for (int blk = 0; blk < blocks; ++blk) {
      const int lo = static_cast<int>(static_cast<std::int64_t>(rows_) * blk / blocks);
      const int hi = static_cast<int>(static_cast<std::int64_t>(rows_) * (blk + 1) / blocks);
      for (int i = 0; i < rows_; ++i) {
        const double c = cost_[basis_[i]];
        if (c == 0.0) continue;
        const double* row = binv_.data() + static_cast<std::size_t>(i) * rows_;
        for (int k = lo; k < hi; ++k) y_[k] += c * row[k];
      }
    }
  }

  // x_B = B^{-1} (rhs - N x_N).
  void recompute_basic_values() {
    std::vector<double> rhs(rows_);
    for (int r = 0; r < rows_; ++r) rhs[r] = lp_.rows[r].rhs;
    for (int j = 0; j < columns_; ++j) {
      if (state_[j] == VarState::kBasic || x_[j] == 0.0) continue;
      for (int k = start_[j]; k < start_[j + 1]; ++k) {
        rhs[entry_row_[k]] -= entry_val_[k] * x_[j];
      }
    }
    const bool par = use_threads(static_cast<std::int64_t>(rows_) * rows_);
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < rows_; ++i) {
      const double* row = binv_.data() + static_cast<std::size_t>(i) * rows_;
      double sum = 0.0;
      for (int k = 0; k < rows_; ++k) sum += row[k] * rhs[k];
      x_[basis_[i]] = sum;
    }
  }

  double reduced_cost(int j) const {
    double d = cost_[j];
    for (int k = start_[j]; k < start_[j + 1]; ++k) {
      d -= y_[entry_row_[k]] * entry_val_[k];
    }
    return d;
  }

  bool eligible(int j, double d) const {
    if (state_[j] == VarState::kBasic || lower_[j] == upper_[j]) return false;
    if (state_[j] == VarState::kAtLower) return d < -opt_.dual_tolerance;
    return d > opt_.dual_tolerance;
  }

  // Entering column, or -1 if the current basis is optimal.
  int price(bool bland) {
    reduced_.resize(columns_);
    const bool par = use_threads(static_cast<std::int64_t>(start_.back()) + columns_);
#pragma omp parallel for schedule(static) if (par)
    for (int j = 0; j < columns_; ++j) reduced_[j] = reduced_cost(j);
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < columns_; ++j) {
      if (!eligible(j, reduced_[j])) continue;
      if (bland) return j;
      const double score = std::abs(reduced_[j]);
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  // alpha = B^{-1} a_q.
  void ftran(int q) {
    alpha_.assign(rows_, 0.0);
    const int nnz = start_[q + 1] - start_[q];
    const bool par = use_threads(static_cast<std::int64_t>(rows_) * nnz);
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < rows_; ++i) {
      const double* row = binv_.data() + static_cast<std::size_t>(i) * rows_;
      double sum = 0.0;
      for (int k = start_[q]; k < start_[q + 1]; ++k) {
        sum += row[entry_row_[k]] * entry_val_[k];
      }
      alpha_[i] = sum;
    }
  }

  void pivot(int leave_row) {
    const double piv = alpha_[leave_row];
    double* pr = binv_row(leave_row);
    for (int k = 0; k < rows_; ++k) pr[k] /= piv;
    touched_.clear();
    for (int i = 0; i < rows_; ++i) {
      if (i != leave_row && alpha_[i] != 0.0) touched_.push_back(i);
    }
    const int count = static_cast<int>(touched_.size());
    const bool par = use_threads(static_cast<std::int64_t>(count) * rows_);
#pragma omp parallel for schedule(static) if (par)
    for (int t = 0; t < count; ++t) {
      const int i = touched_[t];
      double* row = binv_.data() + static_cast<std::size_t>(i) * rows_;
      const double f = alpha_[i];
      for (int k = 0; k < rows_; ++k) row[k] -= f * pr[k];
    }
  }

  LpStatus iterate(LpResult& result) {
    recompute_basic_values();
    recompute_duals();
    bool bland = false;
    std::int64_t stalled = 0;
    std::int64_t since_refresh = 0;
    for (;;) {
      if (result.iterations >= max_iterations_) {
        result.message = "iteration limit reached";
        return LpStatus::kError;
      }
      if (++since_refresh >= std::max(opt_.refresh_interval, rows_ / 2)) {
        recompute_basic_values();
        recompute_duals();
        since_refresh = 0;
      }
      const int q = price(bland);
      if (q < 0) return LpStatus::kOptimal;
      const double dq = reduced_[q];
      const double dir = state_[q] == VarState::kAtLower ? 1.0 : -1.0;
      ftran(q);

      // Ratio test. Moving x_q by dir*t changes x_B by -dir*t*alpha.
      double step = upper_[q] - lower_[q];
      int leave = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < rows_; ++i) {
        const double a = dir * alpha_[i];
        if (std::abs(a) <= opt_.pivot_tolerance) continue;
        const int b = basis_[i];
        double limit;
        if (a > 0.0) {
          limit = (x_[b] - lower_[b]) / a;
        } else {
          if (!std::isfinite(upper_[b])) continue;
          limit = (upper_[b] - x_[b]) / -a;
        }
        limit = std::max(limit, 0.0);
        bool take = limit < step;
        if (!take && limit == step) {
          if (leave < 0) {
            // Tie with the bound flip: let an artificial leave the basis.
            take = artificial_[b];
          } else if (artificial_[b] != artificial_[basis_[leave]]) {
            take = artificial_[b];
          } else {
            take = bland ? b < basis_[leave]
                         : std::abs(alpha_[i]) > std::abs(leave_alpha);
          }
        }
        if (take) {
          step = limit;
          leave = i;
          leave_alpha = alpha_[i];
        }
      }
      if (!std::isfinite(step)) {
        result.message = "objective unbounded along variable " + std::to_string(q);
        return LpStatus::kUnbounded;
      }

      ++result.iterations;
      if (bland) ++result.bland_iterations;
      if (step > 0.0) {
        x_[q] += dir * step;
        for (int i = 0; i < rows_; ++i) {
          if (alpha_[i] != 0.0) x_[basis_[i]] -= dir * step * alpha_[i];
        }
      }
      if (leave < 0) {
        // Bound flip: the entering variable hits its own opposite bound.
        state_[q] = state_[q] == VarState::kAtLower ? VarState::kAtUpper
                                                    : VarState::kAtLower;
        x_[q] = state_[q] == VarState::kAtLower ? lower_[q] : upper_[q];
      } else {
        const int b = basis_[leave];
        if (dir * alpha_[leave] > 0.0) {
          state_[b] = VarState::kAtLower;
          x_[b] = lower_[b];
        } else {
          state_[b] = VarState::kAtUpper;
          x_[b] = upper_[b];
        }
        basis_[leave] = q;
        state_[q] = VarState::kBasic;
        pivot(leave);
        const double* pr = binv_row(leave);
        for (int k = 0; k < rows_; ++k) y_[k] += dq * pr[k];
      }

      if (step > 0.0) {
        stalled = 0;
        bland = false;
      } else if (++stalled > static_cast<std::int64_t>(opt_.stall_factor) *
                                 std::max(structural_, 1)) {
        bland = true;
      }
    }
  }

  // Recomputes everything from the basis and checks primal feasibility,
  // dual feasibility and the duality gap. Fills `result` on success.
  bool certify(LpResult& result) {
    recompute_basic_values();
    recompute_duals();
    std::vector<double> values(structural_);
    for (int j = 0; j < structural_; ++j) {
      values[j] = std::clamp(x_[j], lower_[j], upper_[j]);
    }
    double infeasibility = max_violation(lp_, values);
    for (int j = structural_; j < columns_; ++j) {
      infeasibility = std::max(infeasibility, lower_[j] - x_[j]);
      if (std::isfinite(upper_[j])) {
        infeasibility = std::max(infeasibility, x_[j] - upper_[j]);
      }
    }
    result.max_primal_residual = infeasibility;
    if (infeasibility > opt_.feasibility_tolerance) {
      result.message = "primal residual " + std::to_string(infeasibility);
      return false;
    }
    double dual = 0.0;
    for (int r = 0; r < rows_; ++r) dual += y_[r] * lp_.rows[r].rhs;
    for (int j = 0; j < columns_; ++j) {
      if (state_[j] == VarState::kBasic) continue;
      const double d = reduced_cost(j);
      if (eligible(j, d)) {
        result.message = "reduced cost of column " + std::to_string(j) +
                         " has the wrong sign";
        return false;
      }
      dual += d * x_[j];
    }
    const double primal = evaluate_objective(lp_, values);
    if (std::abs(primal - dual) > opt_.optimality_tolerance) {
      result.message = "duality gap " + std::to_string(primal - dual);
      return false;
    }
    result.status = LpStatus::kOptimal;
    result.values = std::move(values);
    result.objective = primal;
    result.dual_objective = dual;
    result.message.clear();
    return true;
  }

  // Gauss-Jordan inversion of the current basis matrix.
  bool refactor() {
    const std::size_t size = static_cast<std::size_t>(rows_) * rows_;
    std::vector<double> b(size, 0.0);
    for (int i = 0; i < rows_; ++i) {
      const int j = basis_[i];
      for (int k = start_[j]; k < start_[j + 1]; ++k) {
        b[static_cast<std::size_t>(entry_row_[k]) * rows_ + i] += entry_val_[k];
      }
    }
    std::fill(binv_.begin(), binv_.end(), 0.0);
    for (int i = 0; i < rows_; ++i) binv_[static_cast<std::size_t>(i) * rows_ + i] = 1.0;
    for (int c = 0; c < rows_; ++c) {
      int p = c;
      for (int r = c + 1; r < rows_; ++r) {
        if (std::abs(b[static_cast<std::size_t>(r) * rows_ + c]) >
            std::abs(b[static_cast<std::size_t>(p) * rows_ + c])) {
          p = r;
        }
      }
      const double piv = b[static_cast<std::size_t>(p) * rows_ + c];
      if (std::abs(piv) < 1e-12) return false;
      if (p != c) {
        for (int k = 0; k < rows_; ++k) {
          std::swap(b[static_cast<std::size_t>(p) * rows_ + k],
                    b[static_cast<std::size_t>(c) * rows_ + k]);
          std::swap(binv_[static_cast<std::size_t>(p) * rows_ + k],
                    binv_[static_cast<std::size_t>(c) * rows_ + k]);
        }
      }
      for (int k = 0; k < rows_; ++k) {
        b[static_cast<std::size_t>(c) * rows_ + k] /= piv;
        binv_[static_cast<std::size_t>(c) * rows_ + k] /= piv;
      }
      const bool par = use_threads(static_cast<std::int64_t>(rows_) * rows_);
#pragma omp parallel for schedule(static) if (par)
      for (int r = 0; r < rows_; ++r) {
        const double f = b[static_cast<std::size_t>(r) * rows_ + c];
        if (r == c || f == 0.0) continue;
        for (int k = 0; k < rows_; ++k) {
          b[static_cast<std::size_t>(r) * rows_ + k] -=
              f * b[static_cast<std::size_t>(c) * rows_ + k];
          binv_[static_cast<std::size_t>(r) * rows_ + k] -=
              f * binv_[static_cast<std::size_t>(c) * rows_ + k];
        }
      }
    }
    // B was assembled with rows = constraint rows and columns = basis
    // positions, so this inverse maps constraint space to basis positions,
    // which is the orientation binv_ uses.
    return true;
  }

  LpResult& fail(LpResult& result, LpStatus status, std::string message = {}) {
    result.status = status;
    if (!message.empty()) result.message = std::move(message);
    result.values.clear();
    return result;
  }

  const LinearProgram& lp_;
  const LpOptions& opt_;
  int rows_;
  int structural_;
  int columns_ = 0;
  bool parallel_ = true;
  bool has_artificials_ = false;
  std::int64_t max_iterations_ = 0;

  std::vector<int> start_{0};
  std::vector<int> entry_row_;
  std::vector<double> entry_val_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> x_;
  std::vector<VarState> state_;
  std::vector<bool> artificial_;

  std::vector<int> basis_;
  std::vector<double> binv_;
  std::vector<double> y_;
  std::vector<double> reduced_;
  std::vector<double> alpha_;
  std::vector<int> touched_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const LpOptions& options) {
  check_program(lp);
  if (lp.num_rows() == 0) {
    // Each variable sits at whichever bound its cost prefers.
    LpResult result;
    result.values = lp.lower;
    for (int j = 0; j < lp.num_vars(); ++j) {
      if (lp.objective[j] < 0.0) {
        if (!std::isfinite(lp.upper[j])) {
          result.status = LpStatus::kUnbounded;
          result.values.clear();
          result.message = "objective unbounded along variable " + std::to_string(j);
          return result;
        }
        result.values[j] = lp.upper[j];
      }
    }
    result.status = LpStatus::kOptimal;
    result.objective = evaluate_objective(lp, result.values);
    result.dual_objective = result.objective;
    return result;
  }
  Simplex simplex(lp, options);
  return simplex.run();
}

}  // namespace deskrisk
