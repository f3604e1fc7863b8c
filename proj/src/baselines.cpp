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

#include "deskrisk/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "deskrisk/rng.hpp"

namespace deskrisk {
namespace {

void check_limit(int limit) {
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
}

// Index `chosen` of `candidates`, drawing it from `rng` when present.
int choose(const std::vector<int>& candidates, std::optional<SplitMix64>& rng) {
  std::size_t index = 0;
  if (rng) index = static_cast<std::size_t>(rng->uniform_index(candidates.size()));
  return candidates[index];
}

// Shared loop of the hard and soft random/greedy baselines. `greedy`
// restricts under-limit candidates to those of minimal p.
BaselineResult sequential(const Instance& instance, int limit, bool greedy,
                          std::optional<SplitMix64> rng) {
  require_valid(instance);
  check_limit(limit);
  BaselineResult out;
  out.assignment.nominee.resize(instance.num_papers());
  std::vector<int> loads(instance.num_authors(), 0);
  std::vector<int> under;
  std::vector<int> all;
  for (int i = 0; i < instance.num_papers(); ++i) {
    const auto authors = instance.authors_of(i);
    all.assign(authors.begin(), authors.end());
    under.clear();
    for (int j : authors) {
      if (loads[j] + 1 <= limit) under.push_back(j);
    }
    int k;
    if (under.empty()) {
      k = choose(all, rng);
      out.err = true;
    } else if (greedy) {
      double best = std::numeric_limits<double>::infinity();
      for (int j : under) best = std::min(best, instance.p(j));
      std::vector<int> minimal;
      for (int j : under) {
        if (instance.p(j) == best) minimal.push_back(j);
      }
      k = choose(minimal, rng);
    } else {
      k = choose(under, rng);
    }
    out.assignment.nominee[i] = k;
    ++loads[k];
  }
  return out;
}

}  // namespace

BaselineResult rand_assign_hard(const Instance& instance, int limit,
                                std::uint64_t seed) {
  return sequential(instance, limit, false, SplitMix64(seed));
}

BaselineResult greedy_assign_hard(const Instance& instance, int limit,
                                  std::optional<std::uint64_t> seed) {
  std::optional<SplitMix64> rng;
  if (seed) rng.emplace(*seed);
  return sequential(instance, limit, true, rng);
}

Assignment rand_assign_soft(const Instance& instance, int limit,
                            std::uint64_t seed) {
  // Same choices as the hard variant; the over-limit fallback simply pays
  // the penalty instead of raising a flag.
  return sequential(instance, limit, false, SplitMix64(seed)).assignment;
}

Assignment greedy_assign_soft(const Instance& instance, int limit,
                              double lambda,
                              std::optional<std::uint64_t> seed) {
  require_valid(instance);
  check_limit(limit);
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  std::optional<SplitMix64> rng;
  if (seed) rng.emplace(*seed);
  Assignment a;
  a.nominee.resize(instance.num_papers());
  std::vector<int> loads(instance.num_authors(), 0);
  std::vector<int> minimal;
  for (int i = 0; i < instance.num_papers(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    minimal.clear();
    for (int j : instance.authors_of(i)) {
      const double h =
          instance.p(j) + lambda * std::max(0, loads[j] + 1 - limit);
      if (h < best) {
        best = h;
        minimal.assign(1, j);
      } else if (h == best) {
        minimal.push_back(j);
      }
    }
    const int k = choose(minimal, rng);
    a.nominee[i] = k;
    ++loads[k];
  }
  return a;
}

SolveReport baseline_report_hard(const Instance& instance, int limit,
                                 const BaselineResult& result,
                                 const char* solver,
                                 std::optional<std::uint64_t> seed) {
  SolveReport r = report_for(instance, result.assignment, "hard", solver, limit,
                             std::nullopt);
  r.seed = seed;
  r.err = result.err;
  if (result.err) {
    r.status = Status::kError;
    r.message = "some paper had no co-author below the limit";
  } else {
    r.status = Status::kFeasible;
  }
  return r;
}

SolveReport baseline_report_soft(const Instance& instance, int limit,
                                 double lambda, Assignment assignment,
                                 const char* solver,
                                 std::optional<std::uint64_t> seed) {
  SolveReport r = report_for(instance, std::move(assignment), "soft", solver,
                             limit, lambda);
  r.seed = seed;
  r.status = Status::kFeasible;
  return r;
}

}  // namespace deskrisk
