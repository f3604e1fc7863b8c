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

#include "deskrisk/greedy.hpp"
#include "deskrisk/oracle.hpp"
#include "deskrisk/relaxation.hpp"
#include "deskrisk/soft.hpp"
#include "test_support.hpp"

namespace deskrisk {
namespace {

using testing::random_small;
using testing::scale_instance;

const Instance kForced(2, 1, {{0}, {0}}, {0.1});
const Instance kOnes(2, 2, {{0, 1}, {0, 1}}, {1.0 / 6, 1.0 / 6});

TEST(SoftLp, Shape) {
  const NominationLp lp = build_soft_lp(kOnes, 1, 1.0);
  EXPECT_EQ(lp.program.num_vars(), 6);
  EXPECT_EQ(lp.y_var(1), 5);
  EXPECT_EQ(lp.program.objective[lp.y_var(0)], 1.0);
  EXPECT_EQ(lp.program.rows[2].sense, RowSense::kGreaterEqual);
  EXPECT_EQ(lp.program.rows[2].rhs, -1.0);
  EXPECT_THROW(build_soft_lp(kOnes, 1, 0.0), std::invalid_argument);
}

TEST(SoftLp, ForcedInstance) {
  const SolveReport r = solve_soft_relaxed(kForced, 1, 0.5);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_NEAR(r.objective, 0.7, 1e-7);
  EXPECT_NEAR((*r.fractional->y)[0], 1.0, 1e-7);
}

TEST(SoftLp, AllOnesNeedsNoPenalty) {
  const SolveReport r = solve_soft_relaxed(kOnes, 1, 1.0);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_NEAR(r.objective, 1.0 / 3, 1e-7);
  for (double y : *r.fractional->y) EXPECT_LE(y, 1e-7);
}

TEST(SoftLp, EpigraphIsTight) {
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    const Instance inst = random_small(seed);
    const double lambda = seed % 3 == 0 ? 0.1 : seed % 3 == 1 ? 1.0 : 10.0;
    const int b = 1 + static_cast<int>(seed % 2);
    const SolveReport r = solve_soft_relaxed(inst, b, lambda);
    ASSERT_EQ(r.status, Status::kOptimal) << seed << ": " << r.message;
    EXPECT_LE(epigraph_gap(inst, *r.fractional, b), kEpigraphTolerance) << seed;
  }
}

TEST(SoftLp, EpigraphGapMeasuresSlack) {
  FractionalSolution point{{1.0, 1.0}, std::vector<double>{1.5}};
  EXPECT_DOUBLE_EQ(epigraph_gap(kForced, point, 1), 0.5);
  point.y->at(0) = 1.0;
  EXPECT_DOUBLE_EQ(epigraph_gap(kForced, point, 1), 0.0);
  EXPECT_THROW(epigraph_gap(kForced, FractionalSolution{{1.0, 1.0}, {}}, 1),
               std::invalid_argument);
}

TEST(SoftLp, LargeLimitHasNoPenalty) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_small(seed);
    const SolveReport r = solve_soft_relaxed(inst, inst.num_papers(), 1.0);
    ASSERT_EQ(r.status, Status::kOptimal);
    for (double y : *r.fractional->y) EXPECT_LE(y, 1e-9) << seed;
    EXPECT_NEAR(r.objective, greedy_assign_basic(inst).objective, 1e-9) << seed;
  }
}

TEST(Rounding, ArgmaxAndTies) {
  const Instance inst(1, 2, {{0, 1}}, {0.5, 0.5});
  EXPECT_EQ(round_soft(inst, FractionalSolution{{0.7, 0.3}, {}}).nominee[0], 0);
  EXPECT_EQ(round_soft(inst, FractionalSolution{{0.3, 0.7}, {}}).nominee[0], 1);
  EXPECT_EQ(round_soft(inst, FractionalSolution{{0.5, 0.5}, {}}).nominee[0], 0);
  EXPECT_THROW(round_soft(inst, FractionalSolution{{1.0}, {}}),
               std::invalid_argument);
}

TEST(Rounding, FixesIntegralPoints) {
  const Instance inst(3, 3, {{0, 1}, {1, 2}, {0, 2}}, {0.1, 0.2, 0.3});
  const FractionalSolution point{{0.0, 1.0, 0.0, 1.0, 1.0, 0.0}, {}};
  EXPECT_EQ(round_soft(inst, point), integral_assignment(inst, point));
}

TEST(Rounding, SerialAndParallelAgree) {
  const Instance big = scale_instance(13);
  FractionalSolution point;
  SplitMix64 rng(1);
  for (int k = 0; k < big.num_pairs(); ++k) {
    point.x.push_back(static_cast<double>(rng.uniform_index(4)) / 4.0);
  }
  EXPECT_EQ(round_soft(big, point, Execution::kSerial),
            round_soft(big, point, Execution::kParallel));
}

TEST(SolveSoft, ForcedInstanceIsLossless) {
  const SolveReport r = solve_soft(kForced, 1, 0.5);
  EXPECT_EQ(r.status, Status::kOptimal);
  EXPECT_NEAR(*r.rounded_objective, 0.7, 1e-12);
  EXPECT_NEAR(*r.lp_bound, 0.7, 1e-7);
  EXPECT_NEAR(r.penalty, 0.5, 1e-12);
  EXPECT_EQ(r.solver, "lp-round");
}

TEST(SolveSoft, ChainInequality) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Instance inst = random_small(seed);
    const int b = 1 + static_cast<int>(seed % 3);
    const double lambda = seed % 2 == 0 ? 0.3 : 2.0;
    const SolveReport oracle = oracle_soft(inst, b, lambda);
    const SolveReport r = solve_soft(inst, b, lambda);
    ASSERT_NE(r.status, Status::kError) << seed << ": " << r.message;
    EXPECT_LE(*r.lp_bound, oracle.objective + 1e-7) << seed;
    EXPECT_LE(oracle.objective, *r.rounded_objective + 1e-7) << seed;
    EXPECT_NEAR(*r.gap, *r.rounded_objective - *r.lp_bound, 1e-15) << seed;
  }
}

TEST(SolveSoftExact, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_small(seed);
    const int b = 1 + static_cast<int>(seed % 3);
    const double lambda = seed % 3 == 0 ? 0.1 : seed % 3 == 1 ? 1.0 : 10.0;
    const SolveReport exact = solve_soft_exact(inst, b, lambda);
    EXPECT_EQ(exact.status, Status::kOptimal);
    EXPECT_NEAR(exact.objective, oracle_soft(inst, b, lambda).objective, 1e-9)
        << seed;
  }
}

TEST(SolveSoftExact, Examples) {
  const Instance five(5, 1, {{0}, {0}, {0}, {0}, {0}}, {0.1});
  EXPECT_NEAR(solve_soft_exact(five, 2, 0.4).objective, 1.7, 1e-12);
  EXPECT_NEAR(solve_soft_exact(kForced, 1, 0.5).objective, 0.7, 1e-12);
  const SolveReport ones = solve_soft_exact(kOnes, 1, 1.0);
  EXPECT_NEAR(ones.objective, 1.0 / 3, 1e-12);
  EXPECT_EQ(ones.loads, (std::vector<int>{1, 1}));
}

// Raising lambda can only raise the optimum, and the excess load it buys
// can only shrink.
TEST(SolveSoftExact, MonotoneInLambda) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = random_small(seed);
    double previous = -1.0;
    double previous_penalty_units = 1e18;
    for (double lambda : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      const SolveReport r = solve_soft_exact(inst, 1, lambda);
      EXPECT_GE(r.objective, previous - 1e-12) << seed;
      const double units = r.penalty / lambda;
      EXPECT_LE(units, previous_penalty_units + 1e-9) << seed;
      previous = r.objective;
      previous_penalty_units = units;
    }
  }
}

TEST(SolveSoftExact, LargeLimitMatchesGreedy) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = random_small(seed);
    const int b = inst.num_papers();
    const double basic = greedy_assign_basic(inst).objective;
    EXPECT_NEAR(solve_soft_exact(inst, b, 1.0).objective, basic, 1e-9);
    EXPECT_NEAR(solve_soft(inst, b, 1.0).objective, basic, 1e-9);
  }
}

}  // namespace
}  // namespace deskrisk
