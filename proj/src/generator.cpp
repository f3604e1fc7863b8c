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

#include "deskrisk/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "deskrisk/rng.hpp"

namespace deskrisk {

Instance generate(const GeneratorSpec& spec) {
  if (spec.num_papers < 1 || spec.num_authors < 1) {
    throw std::invalid_argument("n and m must be positive");
  }
  if (spec.min_authors < 1 || spec.min_authors > spec.max_authors ||
      spec.max_authors > spec.num_authors) {
    throw std::invalid_argument("need 1 <= amin <= amax <= m");
  }
  if (!(spec.p_low >= 0.0 && spec.p_low <= spec.p_high && spec.p_high <= 1.0)) {
    throw std::invalid_argument("need 0 <= plo <= phi <= 1");
  }
  SplitMix64 rng(spec.seed);
  const int m = spec.num_authors;
  std::vector<double> p(m);
  for (double& pj : p) {
    pj = spec.p_low + (spec.p_high - spec.p_low) * rng.uniform_real();
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> papers(spec.num_papers);
  const auto span = static_cast<std::uint64_t>(spec.max_authors - spec.min_authors + 1);
  for (auto& authors : papers) {
    const int k = spec.min_authors + static_cast<int>(rng.uniform_index(span));
    for (int t = 0; t < k; ++t) {
      const int pick = t + static_cast<int>(rng.uniform_index(
                               static_cast<std::uint64_t>(m - t)));
      std::swap(perm[t], perm[pick]);
    }
    authors.assign(perm.begin(), perm.begin() + k);
    std::sort(authors.begin(), authors.end());
  }
  return Instance(spec.num_papers, m, papers, std::move(p));
}

}  // namespace deskrisk
