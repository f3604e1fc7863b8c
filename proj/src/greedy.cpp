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

#include "deskrisk/greedy.hpp"

#include "deskrisk/rng.hpp"

namespace deskrisk {
namespace {

int pick_min(const Instance& instance, int paper,
             const std::optional<std::uint64_t>& seed) {
  const auto authors = instance.authors_of(paper);
  double best = instance.p(authors[0]);
  int ties = 0;
  for (int j : authors) {
    const double pj = instance.p(j);
    if (pj < best) {
      best = pj;
      ties = 1;
    } else if (pj == best) {
      ++ties;
    }
  }
  std::uint64_t chosen = 0;
  if (seed) {
    chosen = SplitMix64::at(*seed, static_cast<std::uint64_t>(paper))
                 .uniform_index(static_cast<std::uint64_t>(ties));
  }
  for (int j : authors) {
    if (instance.p(j) == best && chosen-- == 0) return j;
  }
  return authors[0];  // unreachable
}

}  // namespace

Assignment greedy_nominees(const Instance& instance,
                           std::optional<std::uint64_t> seed,
                           Execution execution) {
  require_valid(instance);
  const int n = instance.num_papers();
  Assignment a;
  a.nominee.resize(n);
  if (execution == Execution::kSerial) {
    for (int i = 0; i < n; ++i) a.nominee[i] = pick_min(instance, i, seed);
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) a.nominee[i] = pick_min(instance, i, seed);
  }
  return a;
}

SolveReport greedy_assign_basic(const Instance& instance,
                                std::optional<std::uint64_t> seed,
                                Execution execution) {
  SolveReport r = report_for(instance, greedy_nominees(instance, seed, execution),
                             "basic", "greedy");
  r.seed = seed;
  return r;
}

}  // namespace deskrisk
