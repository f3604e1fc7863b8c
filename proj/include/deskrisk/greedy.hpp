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

// Exact solver for the unconstrained problem. The objective separates over
// papers, so each paper independently nominates a co-author with the
// smallest irresponsibility probability. O(nnz(a)).

#ifndef DESKRISK_GREEDY_HPP_
#define DESKRISK_GREEDY_HPP_

#include <cstdint>
#include <optional>

#include "deskrisk/execution.hpp"
#include "deskrisk/instance.hpp"

namespace deskrisk {

// Without a seed, ties among minimal-probability co-authors go to the
// smallest author index. With a seed, paper i picks uniformly among its
// tied minimizers using SplitMix64::at(seed, i), so the result does not
// depend on the execution mode or on the other papers.
Assignment greedy_nominees(const Instance& instance,
                           std::optional<std::uint64_t> seed = std::nullopt,
                           Execution execution = Execution::kParallel);

SolveReport greedy_assign_basic(
    const Instance& instance, std::optional<std::uint64_t> seed = std::nullopt,
    Execution execution = Execution::kParallel);

}  // namespace deskrisk

#endif  // DESKRISK_GREEDY_HPP_
