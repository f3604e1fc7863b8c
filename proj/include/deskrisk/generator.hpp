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

// Seeded random instances.
//
// Draw order from one SplitMix64(seed) stream: first p_1..p_m, each
// lo + (hi - lo) * uniform_real(); then for each paper in order, a size
// k = min + uniform_index(max - min + 1) followed by a partial
// Fisher-Yates shuffle of a persistent [1..m] permutation (k draws of
// uniform_index(m - t)); the first k entries, sorted, are the authors.

#ifndef DESKRISK_GENERATOR_HPP_
#define DESKRISK_GENERATOR_HPP_

#include <cstdint>

#include "deskrisk/instance.hpp"

namespace deskrisk {

struct GeneratorSpec {
  int num_papers = 1;
  int num_authors = 1;
  int min_authors = 1;
  int max_authors = 1;
  double p_low = 0.0;
  double p_high = 1.0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless 1 <= min <= max <= m, n >= 1 and
// 0 <= lo <= hi <= 1.
Instance generate(const GeneratorSpec& spec);

}  // namespace deskrisk

#endif  // DESKRISK_GENERATOR_HPP_
