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

// Sequential random and greedy nomination heuristics. They walk papers in
// order and never revisit a choice, so under a hard limit they can paint
// themselves into a corner: a later paper whose authors are all at the
// limit is flagged with `err` and gets an arbitrary co-author anyway.
//
// Randomness: one SplitMix64 stream seeded with `seed`, one draw per paper
// (see rng.hpp), even when the candidate set has a single element. The
// greedy variants only draw when given a seed; without one they take the
// smallest author index among tied candidates.

#ifndef DESKRISK_BASELINES_HPP_
#define DESKRISK_BASELINES_HPP_

#include <cstdint>
#include <optional>

#include "deskrisk/instance.hpp"

namespace deskrisk {

struct BaselineResult {
  Assignment assignment;
  // Some paper had no co-author below the limit.
  bool err = false;
};

BaselineResult rand_assign_hard(const Instance& instance, int limit,
                                std::uint64_t seed);

BaselineResult greedy_assign_hard(
    const Instance& instance, int limit,
    std::optional<std::uint64_t> seed = std::nullopt);

Assignment rand_assign_soft(const Instance& instance, int limit,
                            std::uint64_t seed);

// Picks the author with the smallest marginal cost
// p_j + lambda * max(0, load_j + 1 - b).
Assignment greedy_assign_soft(const Instance& instance, int limit,
                              double lambda,
                              std::optional<std::uint64_t> seed = std::nullopt);

// Report wrappers used by the CLI. Hard baselines report status kError with
// err=true when the flag is raised, kFeasible otherwise; soft baselines
// always report kFeasible.
SolveReport baseline_report_hard(const Instance& instance, int limit,
                                 const BaselineResult& result,
                                 const char* solver,
                                 std::optional<std::uint64_t> seed);
SolveReport baseline_report_soft(const Instance& instance, int limit,
                                 double lambda, Assignment assignment,
                                 const char* solver,
                                 std::optional<std::uint64_t> seed);

}  // namespace deskrisk

#endif  // DESKRISK_BASELINES_HPP_
