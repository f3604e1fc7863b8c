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


// Helpers shared by the unit tests and the acceptance runner.

#ifndef DESKRISK_TESTS_TEST_SUPPORT_HPP_
#define DESKRISK_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "deskrisk/generator.hpp"
#include "deskrisk/instance.hpp"
#include "deskrisk/rng.hpp"

namespace deskrisk::testing {

inline std::string fixture(const std::string& name) {
  return std::string(DESKRISK_FIXTURE_DIR) + "/" + name;
}

inline std::vector<std::vector<int>> papers_of(const Instance& instance) {
  std::vector<std::vector<int>> papers;
  for (int i = 0; i < instance.num_papers(); ++i) {
    const auto authors = instance.authors_of(i);
    papers.emplace_back(authors.begin(), authors.end());
  }
  return papers;
}

// Small random instance with 1 <= n, m <= max_size and 1..m authors per
// paper. Half of the seeds snap p to quarters so ties actually occur.
inline Instance random_small(std::uint64_t seed, int max_size = 6) {
  SplitMix64 rng(seed);
  GeneratorSpec spec;
  spec.num_papers = 1 + static_cast<int>(rng.uniform_index(max_size));
  spec.num_authors = 1 + static_cast<int>(rng.uniform_index(max_size));
  spec.min_authors = 1;
  spec.max_authors = spec.num_authors;
  spec.seed = rng();
  Instance instance = generate(spec);
  if (rng.uniform_index(2) == 0) {
    std::vector<double> p = instance.p();
    for (double& v : p) v = static_cast<double>(rng.uniform_index(5)) / 4.0;
    instance = Instance(instance.num_papers(), instance.num_authors(),
                        papers_of(instance), p);
  }
  return instance;
}

// The generated scale instance: n=2000, m=500, 3..7 authors per paper.
inline Instance scale_instance(std::uint64_t seed = 7) {
  GeneratorSpec spec;
  spec.num_papers = 2000;
  spec.num_authors = 500;
  spec.min_authors = 3;
  spec.max_authors = 7;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace deskrisk::testing

#endif  // DESKRISK_TESTS_TEST_SUPPORT_HPP_
