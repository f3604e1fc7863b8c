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

// Soft-limit pipeline: epigraph LP, relaxed solve, per-paper argmax
// rounding, and an exact integral solver on the flow network.

#ifndef DESKRISK_SOFT_HPP_
#define DESKRISK_SOFT_HPP_

#include "deskrisk/execution.hpp"
#include "deskrisk/instance.hpp"
#include "deskrisk/lp.hpp"
#include "deskrisk/relaxation.hpp"

namespace deskrisk {

// Tolerance on |y_j - max(0, load_j - b)| at the LP optimum.
inline constexpr double kEpigraphTolerance = 1e-7;

// max_j |y_j - max(0, load_j - b)| for a soft LP point.
double epigraph_gap(const Instance& instance, const FractionalSolution& point,
                    int limit);

// Solves the epigraph LP. On success the report holds the fractional point
// and the LP objective; status is kError if the LP fails or if some y_j is
// not tight against max(0, load_j - b).
SolveReport solve_soft_relaxed(const Instance& instance, int limit,
                               double lambda, const LpOptions& options = {});

// Each paper nominates its author with the largest x; ties go to the
// smallest author index.
Assignment round_soft(const Instance& instance,
                      const FractionalSolution& point,
                      Execution execution = Execution::kParallel);

// Relaxed solve followed by rounding. The report's objective is the
// soft objective of the rounded assignment; `lp_bound`, `rounded_objective`
// and `gap` describe the rounding loss. Status is kOptimal when the gap is
// within kReportTolerance (the LP bound then certifies optimality),
// kFeasible otherwise.
SolveReport solve_soft(const Instance& instance, int limit, double lambda,
                       const LpOptions& options = {});

// Exact integral optimum via min-cost circulation on the soft network.
SolveReport solve_soft_exact(const Instance& instance, int limit,
                             double lambda);

}  // namespace deskrisk

#endif  // DESKRISK_SOFT_HPP_
