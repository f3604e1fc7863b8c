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

// Portable seeded randomness. Every random draw in the library goes through
// this generator so that seeded outputs can be reproduced bit-for-bit in
// any language:
//
//   SplitMix64 (Steele, Lea & Flood, 2014):
//     state += 0x9E3779B97F4A7C15
//     z = state
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
//
//   uniform_index(k): draw u; accept if u < 2^64 - (2^64 mod k), else
//     redraw; return u mod k.
//   uniform_real(): (u >> 11) * 2^-53, in [0, 1).
//
// std::uniform_int_distribution is not used because its output is
// implementation-defined.

#ifndef DESKRISK_RNG_HPP_
#define DESKRISK_RNG_HPP_

#include <cstdint>
#include <limits>

namespace deskrisk {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Generator whose first output is the `index`-th output of SplitMix64(seed).
  // Gives independent-looking per-item streams that parallel loops can use
  // without sharing state.
  static SplitMix64 at(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + index * kGamma);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    // 2^64 mod bound, computed without 128-bit arithmetic.
    const std::uint64_t remainder = (0 - bound) % bound;
    const std::uint64_t limit = 0 - remainder;  // 2^64 - remainder (mod 2^64)
    for (;;) {
      const std::uint64_t u = (*this)();
      if (remainder == 0 || u < limit) return u % bound;
    }
  }

  double uniform_real() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace deskrisk

#endif  // DESKRISK_RNG_HPP_
