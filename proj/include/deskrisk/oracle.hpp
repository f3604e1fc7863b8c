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

// Brute-force enumeration of every feasible assignment. Deliberately naive:
// this is the ground truth the real solvers are tested against.

#ifndef DESKRISK_ORACLE_HPP_
#define DESKRISK_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>

#include "deskrisk/execution.hpp"
#include "deskrisk/instance.hpp"

namespace deskrisk {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(long double size, std::uint64_t cap);
  long double size() const { return size_; }

 private:
  long double size_;
};

// Product of the per-paper author counts (as long double so that huge
// instances report their size instead of overflowing).
long double assignment_count(const Instance& instance);

// Walks assignments in lexicographic nominee order (paper 1 most
// significant, authors ascending). Throws EnumerationCapExceeded at
// construction when the count exceeds `cap`.
class AssignmentEnumerator {
 public:
  explicit AssignmentEnumerator(const Instance& instance,
                                std::uint64_t cap = kDefaultEnumerationCap);

  // Advances to the next assignment; false when exhausted. The first call
  // yields the first assignment.
  bool next();
  const Assignment& current() const { return current_; }
  std::uint64_t total() const { return total_; }

 private:
  const Instance* instance_;
  std::vector<int> digits_;
  Assignment current_;
  std::uint64_t total_ = 0;
  bool started_ = false;
};

struct OracleOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  Execution execution = Execution::kParallel;
};

// Minimizer over all feasible assignments. Ties go to the lexicographically
// smallest nominee vector. `report.status` is kOptimal, or kInfeasible for
// the hard variant when no assignment respects the limit.
SolveReport oracle_basic(const Instance& instance,
                         const OracleOptions& options = {});
SolveReport oracle_hard(const Instance& instance, int limit,
                        const OracleOptions& options = {});
SolveReport oracle_soft(const Instance& instance, int limit, double lambda,
                        const OracleOptions& options = {});

}  // namespace deskrisk

#endif  // DESKRISK_ORACLE_HPP_
