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

#include "deskrisk/relaxation.hpp"

#include <cmath>
#include <stdexcept>

namespace deskrisk {
namespace {

NominationLp build(const Instance& instance, int limit, const double* lambda) {
  require_valid(instance);
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
  NominationLp out;
  out.num_pairs = instance.num_pairs();
  out.num_authors = instance.num_authors();
  out.has_penalty = lambda != nullptr;
  LinearProgram& lp = out.program;
  for (int k = 0; k < instance.num_pairs(); ++k) {
    lp.add_variable(instance.p(instance.pair_author(k)), 0.0, 1.0);
  }
  if (lambda != nullptr) {
    for (int j = 0; j < instance.num_authors(); ++j) {
      lp.add_variable(*lambda, 0.0, kLpInfinity);
    }
  }
  for (int i = 0; i < instance.num_papers(); ++i) {
    LinearRow row;
    row.sense = RowSense::kEqual;
    row.rhs = 1.0;
    for (int k = instance.pair_begin(i); k < instance.pair_end(i); ++k) {
      row.terms.emplace_back(out.x_var(k), 1.0);
    }
    lp.add_row(std::move(row));
  }
  std::vector<LinearRow> author_rows(instance.num_authors());
  for (int j = 0; j < instance.num_authors(); ++j) {
    LinearRow& row = author_rows[j];
    if (lambda != nullptr) {
      row.sense = RowSense::kGreaterEqual;
      row.rhs = -static_cast<double>(limit);
      row.terms.emplace_back(out.y_var(j), 1.0);
    } else {
      row.sense = RowSense::kLessEqual;
      row.rhs = static_cast<double>(limit);
    }
  }
  const double sign = lambda != nullptr ? -1.0 : 1.0;
  for (int k = 0; k < instance.num_pairs(); ++k) {
    author_rows[instance.pair_author(k)].terms.emplace_back(out.x_var(k), sign);
  }
  for (LinearRow& row : author_rows) lp.add_row(std::move(row));
  return out;
}

}  // namespace

NominationLp build_hard_lp(const Instance& instance, int limit) {
  return build(instance, limit, nullptr);
}

NominationLp build_soft_lp(const Instance& instance, int limit, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return build(instance, limit, &lambda);
}

FractionalSolution to_fractional(const NominationLp& lp,
                                 const std::vector<double>& values) {
  FractionalSolution s;
  s.x.assign(values.begin(), values.begin() + lp.num_pairs);
  if (lp.has_penalty) {
    s.y.emplace(values.begin() + lp.num_pairs,
                values.begin() + lp.num_pairs + lp.num_authors);
  }
  return s;
}

bool is_integral(const FractionalSolution& solution, double tolerance) {
  for (double v : solution.x) {
    if (std::abs(v - std::round(v)) > tolerance) return false;
  }
  return true;
}

Assignment integral_assignment(const Instance& instance,
                               const FractionalSolution& solution) {
  Assignment a;
  a.nominee.assign(instance.num_papers(), -1);
  for (int i = 0; i < instance.num_papers(); ++i) {
    int ones = 0;
    for (int k = instance.pair_begin(i); k < instance.pair_end(i); ++k) {
      if (std::round(solution.x[k]) == 1.0) {
        a.nominee[i] = instance.pair_author(k);
        ++ones;
      }
    }
    if (ones != 1) {
      throw std::logic_error("paper " + std::to_string(i + 1) +
                             " is not integrally assigned");
    }
  }
  return a;
}

SolveReport solve_hard_relaxed(const Instance& instance, int limit,
                               const LpOptions& options) {
  const NominationLp lp = build_hard_lp(instance, limit);
  const LpResult res = solve_lp(lp.program, options);
  SolveReport r;
  r.variant = "hard";
  r.solver = "lp";
  r.limit = limit;
  if (res.status == LpStatus::kInfeasible) {
    r = infeasible_report("hard", "lp", "LP relaxation is infeasible");
    r.limit = limit;
    return r;
  }
  if (res.status != LpStatus::kOptimal) {
    r.status = Status::kError;
    r.message = std::string("LP ") + to_string(res.status) + ": " + res.message;
    return r;
  }
  FractionalSolution frac = to_fractional(lp, res.values);
  const SoftValue value = fractional_objective(instance, frac);
  r.status = Status::kOptimal;
  r.objective = value.objective;
  r.expected_rejections = value.expected_rejections;
  r.penalty = value.penalty;
  r.lp_bound = value.objective;
  r.integral = is_integral(frac);
  if (*r.integral) {
    Assignment a = integral_assignment(instance, frac);
    r.loads = author_loads(instance, a);
    r.assignment = std::move(a);
  }
  r.fractional = std::move(frac);
  return r;
}

}  // namespace deskrisk
