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

// LP relaxations of the hard- and soft-limit nomination problems.
//
// Variables exist only for incident (paper, author) pairs: x for pair id k
// is LP variable k. The soft LP appends one epigraph variable y_j per
// author at index num_pairs + j.

#ifndef DESKRISK_RELAXATION_HPP_
#define DESKRISK_RELAXATION_HPP_

#include "deskrisk/instance.hpp"
#include "deskrisk/lp.hpp"

namespace deskrisk {

struct NominationLp {
  LinearProgram program;
  int num_pairs = 0;
  int num_authors = 0;
  bool has_penalty = false;

  int x_var(int pair) const { return pair; }
  int y_var(int author) const { return num_pairs + author; }
};

// min sum p_j x_ij  s.t.  sum_j x_ij = 1 (each paper),
//                         sum_i x_ij <= b (each author),  0 <= x <= 1.
NominationLp build_hard_lp(const Instance& instance, int limit);

// min sum p_j x_ij + lambda sum y_j  s.t.  sum_j x_ij = 1 (each paper),
//     y_j - sum_i x_ij >= -b (each author),  0 <= x <= 1,  y >= 0.
// Throws std::invalid_argument unless lambda > 0.
NominationLp build_soft_lp(const Instance& instance, int limit, double lambda);

FractionalSolution to_fractional(const NominationLp& lp,
                                 const std::vector<double>& values);

// True when every x is within `tolerance` of 0 or 1.
bool is_integral(const FractionalSolution& solution, double tolerance = 1e-9);

// Assignment read off an integral fractional solution (x rounded to the
// nearest integer). Throws std::logic_error if some paper does not have
// exactly one x equal to one.
Assignment integral_assignment(const Instance& instance,
                               const FractionalSolution& solution);

// Solves the hard-limit relaxation. The report carries the fractional
// point, the LP objective (via fractional_objective), the `integral` flag,
// and the assignment and loads when the point is integral.
SolveReport solve_hard_relaxed(const Instance& instance, int limit,
                               const LpOptions& options = {});

}  // namespace deskrisk

#endif  // DESKRISK_RELAXATION_HPP_
