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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <optional>

#include "deskrisk/lp.hpp"
#include "deskrisk/oracle.hpp"
#include "deskrisk/relaxation.hpp"
#include "deskrisk/rng.hpp"
#include "test_support.hpp"

namespace deskrisk {
namespace {

using testing::random_small;

TEST(Lp, BoundAttainingOptimum) {
  LinearProgram lp;
  lp.add_variable(1.0, 0.0, 1.0);
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.values, (std::vector<double>{0.0}));
  EXPECT_EQ(r.objective, 0.0);

  // Same with a (slack) row present, so the simplex path runs.
  lp.add_row({{{0, 1.0}}, RowSense::kLessEqual, 5.0});
  const LpResult s = solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.values[0], 0.0, 1e-12);
}

TEST(Lp, SmallMixedProgram) {
  // min -x - 2y  s.t.  x + y <= 4, x - y >= -2, 0 <= x <= 3, 0 <= y <= 3.
  LinearProgram lp;
  lp.add_variable(-1.0, 0.0, 3.0);
  lp.add_variable(-2.0, 0.0, 3.0);
  lp.add_row({{{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 4.0});
  lp.add_row({{{0, 1.0}, {1, -1.0}}, RowSense::kGreaterEqual, -2.0});
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.values[0], 1.0, 1e-9);
  EXPECT_NEAR(r.values[1], 3.0, 1e-9);
  EXPECT_NEAR(r.objective, -7.0, 1e-9);
  EXPECT_NEAR(r.dual_objective, r.objective, 1e-7);
  EXPECT_LE(r.max_primal_residual, 1e-9);
}

TEST(Lp, DetectsInfeasibility) {
  LinearProgram lp;
  lp.add_variable(0.0, 0.0, 1.0);
  lp.add_variable(0.0, 0.0, 1.0);
  lp.add_row({{{0, 1.0}, {1, 1.0}}, RowSense::kGreaterEqual, 3.0});
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(Lp, DetectsUnboundedness) {
  LinearProgram lp;
  lp.add_variable(-1.0, 0.0, kLpInfinity);
  lp.add_variable(-1.0, 0.0, kLpInfinity);
  lp.add_row({{{0, 1.0}, {1, -1.0}}, RowSense::kLessEqual, 1.0});
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kUnbounded);

  LinearProgram free_var;
  free_var.add_variable(-1.0, 0.0, kLpInfinity);
  EXPECT_EQ(solve_lp(free_var).status, LpStatus::kUnbounded);
}

TEST(Lp, RejectsMalformedPrograms) {
  LinearProgram lp;
  lp.add_variable(1.0, 0.0, 1.0);
  lp.add_row({{{3, 1.0}}, RowSense::kLessEqual, 1.0});
  EXPECT_THROW(solve_lp(lp), std::invalid_argument);

  LinearProgram bounds;
  bounds.add_variable(1.0, 2.0, 1.0);
  EXPECT_THROW(solve_lp(bounds), std::invalid_argument);

  LinearProgram infinite_lower;
  infinite_lower.add_variable(1.0, -kLpInfinity, 1.0);
  EXPECT_THROW(solve_lp(infinite_lower), std::invalid_argument);
}

// Brute force for bounded programs: every vertex is the solution of K
// active constraints drawn from the rows and the variable bounds.
std::optional<double> vertex_minimum(const LinearProgram& lp) {
  const int k = lp.num_vars();
  std::vector<std::vector<double>> planes;
  std::vector<double> rhs;
  for (const LinearRow& row : lp.rows) {
    std::vector<double> a(k, 0.0);
    for (const auto& [var, coef] : row.terms) a[var] += coef;
    planes.push_back(a);
    rhs.push_back(row.rhs);
  }
  for (int j = 0; j < k; ++j) {
    std::vector<double> a(k, 0.0);
    a[j] = 1.0;
    planes.push_back(a);
    rhs.push_back(lp.lower[j]);
    planes.push_back(a);
    rhs.push_back(lp.upper[j]);
  }
  const int h = static_cast<int>(planes.size());
  std::optional<double> best;
  std::vector<int> pick(k);
  for (int mask = 0; mask < (1 << h); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<std::vector<double>> m;
    for (int t = 0; t < h; ++t) {
      if (mask >> t & 1) {
        m.push_back(planes[t]);
        m.back().push_back(rhs[t]);
      }
    }
    bool singular = false;
    for (int c = 0; c < k && !singular; ++c) {
      int p = c;
      for (int r = c + 1; r < k; ++r) {
        if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
      }
      if (std::abs(m[p][c]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(m[p], m[c]);
      for (int r = 0; r < k; ++r) {
        if (r == c) continue;
        const double f = m[r][c] / m[c][c];
        for (int q = c; q <= k; ++q) m[r][q] -= f * m[c][q];
      }
    }
    if (singular) continue;
    std::vector<double> x(k);
    for (int j = 0; j < k; ++j) x[j] = m[j][k] / m[j][j];
    if (max_violation(lp, x) > 1e-9) continue;
    const double value = evaluate_objective(lp, x);
    if (!best || value < *best) best = value;
  }
  return best;
}

TEST(Lp, MatchesVertexEnumeration) {
  int feasible = 0;
  int infeasible = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    auto draw = [&rng](int lo, int hi) {
      return static_cast<double>(lo + static_cast<int>(rng.uniform_index(hi - lo + 1)));
    };
    LinearProgram lp;
    const int k = 2 + static_cast<int>(rng.uniform_index(2));
    for (int j = 0; j < k; ++j) {
      lp.add_variable(draw(-3, 3), draw(-1, 0), draw(1, 3));
    }
    const int rows = 1 + static_cast<int>(rng.uniform_index(3));
    for (int r = 0; r < rows; ++r) {
      LinearRow row;
      for (int j = 0; j < k; ++j) {
        const double c = draw(-3, 3);
        if (c != 0.0) row.terms.emplace_back(j, c);
      }
      const auto sense = rng.uniform_index(5);
      row.sense = sense == 0   ? RowSense::kEqual
                  : sense <= 2 ? RowSense::kLessEqual
                               : RowSense::kGreaterEqual;
      row.rhs = draw(-3, 3);
      lp.add_row(std::move(row));
    }
    const auto expected = vertex_minimum(lp);
    const LpResult r = solve_lp(lp);
    if (!expected) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible) << seed;
      ++infeasible;
      continue;
    }
    ++feasible;
    ASSERT_EQ(r.status, LpStatus::kOptimal) << seed << ": " << r.message;
    EXPECT_NEAR(r.objective, *expected, 1e-7) << seed;
    EXPECT_LE(max_violation(lp, r.values), 1e-9) << seed;
  }
  // Make sure both outcomes were exercised.
  EXPECT_GT(feasible, 50);
  EXPECT_GT(infeasible, 10);
}

TEST(Lp, SerialAndParallelAgreeBitwise) {
  GeneratorSpec spec{300, 80, 2, 5, 0.0, 1.0, 3};
  const Instance inst = generate(spec);
  const NominationLp lp = build_soft_lp(inst, 3, 0.5);
  LpOptions serial;
  serial.execution = Execution::kSerial;
  LpOptions parallel;
  parallel.execution = Execution::kParallel;
  const LpResult a = solve_lp(lp.program, serial);
  const LpResult b = solve_lp(lp.program, parallel);
  ASSERT_EQ(a.status, LpStatus::kOptimal);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Lp, IterationLimitIsAnError) {
  const NominationLp lp =
      build_hard_lp(Instance(3, 3, {{0, 1}, {1, 2}, {0, 2}}, {0.3, 0.2, 0.1}), 1);
  LpOptions options;
  options.max_iterations = 1;
  const LpResult r = solve_lp(lp.program, options);
  EXPECT_EQ(r.status, LpStatus::kError);
  EXPECT_TRUE(r.values.empty());
}

TEST(HardLp, Shape) {
  const NominationLp lp =
      build_hard_lp(Instance(2, 2, {{0, 1}, {0, 1}}, {1.0 / 6, 1.0 / 6}), 1);
  EXPECT_EQ(lp.program.num_vars(), 4);
  ASSERT_EQ(lp.program.num_rows(), 4);
  EXPECT_EQ(lp.program.rows[0].sense, RowSense::kEqual);
  EXPECT_EQ(lp.program.rows[1].sense, RowSense::kEqual);
  EXPECT_EQ(lp.program.rows[2].sense, RowSense::kLessEqual);
  EXPECT_EQ(lp.program.rows[3].rhs, 1.0);

  const NominationLp single = build_hard_lp(Instance(1, 1, {{0}}, {0.4}), 1);
  EXPECT_EQ(single.program.num_vars(), 1);
  const LpResult r = solve_lp(single.program);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.values[0], 1.0, 1e-12);
}

TEST(HardLp, ConstantObjectiveFamily) {
  const Instance inst(2, 2, {{0, 1}, {0, 1}}, {1.0 / 6, 1.0 / 6});
  const NominationLp lp = build_hard_lp(inst, 1);
  for (double t : {0.0, 0.5, 1.0}) {
    const std::vector<double> x{t, 1 - t, 1 - t, t};
    EXPECT_LE(max_violation(lp.program, x), 1e-12) << t;
    EXPECT_NEAR(evaluate_objective(lp.program, x), 1.0 / 3, 1e-15) << t;
  }
  const SolveReport r = solve_hard_relaxed(inst, 1);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_NEAR(r.objective, 1.0 / 3, 1e-7);
  ASSERT_TRUE(r.fractional.has_value());
  EXPECT_EQ(r.integral, is_integral(*r.fractional));
}

TEST(HardLp, InfeasibleExample) {
  const Instance inst(5, 1, {{0}, {0}, {0}, {0}, {0}}, {0.1});
  const SolveReport r = solve_hard_relaxed(inst, 2);
  EXPECT_EQ(r.status, Status::kInfeasible);
}

// The hard LP is totally unimodular, so its optimum equals the integer
// optimum and the simplex vertex is integral.
TEST(HardLp, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = random_small(seed);
    const int b = 1 + static_cast<int>(seed % 3);
    const SolveReport oracle = oracle_hard(inst, b);
    const SolveReport lp = solve_hard_relaxed(inst, b);
    ASSERT_EQ(lp.status, oracle.status) << seed;
    if (oracle.status != Status::kOptimal) continue;
    EXPECT_NEAR(lp.objective, oracle.objective, 1e-7) << seed;
    EXPECT_TRUE(*lp.integral) << seed;
    ASSERT_TRUE(lp.assignment.has_value()) << seed;
    for (int load : lp.loads) EXPECT_LE(load, b);
  }
}

TEST(Relaxation, IntegralAssignment) {
  const Instance inst(2, 2, {{0, 1}, {0}}, {0.1, 0.2});
  FractionalSolution point{{0.0, 1.0, 1.0}, std::nullopt};
  EXPECT_TRUE(is_integral(point));
  EXPECT_EQ(integral_assignment(inst, point).nominee, (std::vector<int>{1, 0}));
  point.x = {0.5, 0.5, 1.0};
  EXPECT_FALSE(is_integral(point));
  EXPECT_THROW(integral_assignment(inst, point), std::logic_error);
}

}  // namespace
}  // namespace deskrisk
