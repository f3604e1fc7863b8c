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

// Bounded-variable primal simplex.
//
// Minimizes c^T x subject to sparse linear rows (<=, >= or =) and per-
// variable bounds lower <= x <= upper, where every lower bound is finite and
// upper bounds may be +infinity. Each row gets a slack (inequalities) or an
// artificial (rows the initial point violates); phase 1 drives artificials
// to zero, phase 2 optimizes c.
//
// The basis inverse is kept explicitly as a dense row-major matrix and
// updated by one elimination step per pivot. Rows whose entry in the
// entering column is zero are skipped, which makes updates cheap on
// network-like constraint matrices. Pricing is Dantzig's rule; after
// `stall_factor * K` consecutive degenerate pivots the solver switches to
// Bland's rule until the objective moves again.
//
// On termination the point is certified: primal residuals, bound
// violations, reduced-cost signs and the primal-dual gap are all recomputed
// from scratch and checked against the tolerances in LpOptions.

#ifndef DESKRISK_LP_HPP_
#define DESKRISK_LP_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "deskrisk/execution.hpp"

namespace deskrisk {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearRow {
  std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
  RowSense sense = RowSense::kEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;  // one per variable
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int add_variable(double cost, double lower_bound, double upper_bound);
  void add_row(LinearRow row) { rows.push_back(std::move(row)); }
};

struct LpOptions {
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-7;  // primal-dual gap
  double dual_tolerance = 1e-9;        // reduced-cost sign test
  double pivot_tolerance = 1e-9;
  int stall_factor = 3;
  std::int64_t max_iterations = -1;  // -1: 50 * (rows + columns) + 1000
  // Pivots between full recomputes of duals and basic values; large
  // programs use rows / 2 when that is bigger.
  int refresh_interval = 64;
  Execution execution = Execution::kParallel;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kError };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kError;
  std::vector<double> values;  // structural variables only
  double objective = 0.0;
  double dual_objective = 0.0;
  double max_primal_residual = 0.0;
  std::int64_t iterations = 0;
  std::int64_t bland_iterations = 0;
  std::string message;
};

// Throws std::invalid_argument when the program is malformed (size
// mismatch, variable index out of range, lower > upper, infinite lower
// bound, non-finite data).
void check_program(const LinearProgram& lp);

LpResult solve_lp(const LinearProgram& lp, const LpOptions& options = {});

// Largest violation of any row or bound by `values`.
double max_violation(const LinearProgram& lp, const std::vector<double>& values);

double evaluate_objective(const LinearProgram& lp,
                          const std::vector<double>& values);

}  // namespace deskrisk

#endif  // DESKRISK_LP_HPP_
