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

#include "deskrisk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include <omp.h>

namespace deskrisk {
namespace {

std::string cap_message(long double size, std::uint64_t cap) {
  std::ostringstream msg;
  msg << "enumeration needs " << size << " assignments, cap is " << cap;
  return msg.str();
}

std::uint64_t checked_count(const Instance& instance, std::uint64_t cap) {
  require_valid(instance);
  const long double size = assignment_count(instance);
  if (size > static_cast<long double>(cap)) {
    throw EnumerationCapExceeded(size, cap);
  }
  return static_cast<std::uint64_t>(size);
}

// Mixed-radix decode of `index` into per-paper digit positions, paper 0
// most significant.
void decode(const Instance& instance, std::uint64_t index,
            std::vector<int>& digits) {
  for (int i = instance.num_papers() - 1; i >= 0; --i) {
    const auto radix = static_cast<std::uint64_t>(instance.authors_of(i).size());
    digits[i] = static_cast<int>(index % radix);
    index /= radix;
  }
}

// Odometer step; returns false on wrap-around.
bool advance(const Instance& instance, std::vector<int>& digits) {
  for (int i = instance.num_papers() - 1; i >= 0; --i) {
    if (++digits[i] < static_cast<int>(instance.authors_of(i).size())) {
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

struct Best {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  double value = std::numeric_limits<double>::infinity();
  bool found() const {
    return index != std::numeric_limits<std::uint64_t>::max();
  }
};

// Scores one assignment: its objective, or nullopt if it violates the
// variant's constraints. Mirrors the summation order of the evaluators in
// instance.cpp so that values match them bit for bit.
class Scorer {
 public:
  Scorer(const Instance& instance, std::optional<int> hard_limit,
         std::optional<int> soft_limit, double lambda)
      : instance_(instance),
        hard_limit_(hard_limit),
        soft_limit_(soft_limit),
        lambda_(lambda),
        loads_(instance.num_authors(), 0) {}

  std::optional<double> operator()(const std::vector<int>& digits) {
    double expected = 0.0;
    for (int i = 0; i < instance_.num_papers(); ++i) {
      expected += instance_.p(instance_.authors_of(i)[digits[i]]);
    }
    if (!hard_limit_ && !soft_limit_) return expected;
    std::fill(loads_.begin(), loads_.end(), 0);
    for (int i = 0; i < instance_.num_papers(); ++i) {
      ++loads_[instance_.authors_of(i)[digits[i]]];
    }
    if (hard_limit_) {
      for (int load : loads_) {
        if (load > *hard_limit_) return std::nullopt;
      }
      return expected;
    }
    std::int64_t excess = 0;
    for (int load : loads_) excess += std::max(0, load - *soft_limit_);
    return expected + lambda_ * static_cast<double>(excess);
  }

 private:
  const Instance& instance_;
  std::optional<int> hard_limit_;
  std::optional<int> soft_limit_;
  double lambda_;
  std::vector<int> loads_;
};

Best scan(const Instance& instance, const Scorer& prototype,
          std::uint64_t begin, std::uint64_t end) {
  Best best;
  if (begin >= end) return best;
  Scorer score = prototype;
  std::vector<int> digits(instance.num_papers());
  decode(instance, begin, digits);
  for (std::uint64_t index = begin; index < end; ++index) {
    if (const auto value = score(digits); value && *value < best.value) {
      best.value = *value;
      best.index = index;
    }
    advance(instance, digits);
  }
  return best;
}

Best search(const Instance& instance, std::uint64_t total,
            const Scorer& scorer, Execution execution) {
  if (execution == Execution::kSerial) {
    return scan(instance, scorer, 0, total);
  }
  const std::uint64_t chunks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                     total, 16ULL * omp_get_max_threads()));
  std::vector<Best> partial(chunks);
  const std::int64_t count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < count; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    partial[c] = scan(instance, scorer, begin, end);
  }
  // Chunks are in index order, so a strict comparison keeps the
  // lexicographically smallest minimizer.
  Best best;
  for (const Best& b : partial) {
    if (b.found() && b.value < best.value) best = b;
  }
  return best;
}

SolveReport finish(const Instance& instance, const Best& best,
                   std::uint64_t total, std::string variant,
                   std::optional<int> limit, std::optional<double> lambda) {
  if (!best.found()) {
    return infeasible_report(std::move(variant), "oracle",
                             "no assignment respects the nomination limit");
  }
  std::vector<int> digits(instance.num_papers());
  decode(instance, best.index, digits);
  Assignment a;
  a.nominee.resize(instance.num_papers());
  for (int i = 0; i < instance.num_papers(); ++i) {
    a.nominee[i] = instance.authors_of(i)[digits[i]];
  }
  SolveReport r =
      report_for(instance, std::move(a), std::move(variant), "oracle", limit,
                 lambda);
  r.message = "enumerated " + std::to_string(total) + " assignments";
  return r;
}

}  // namespace

EnumerationCapExceeded::EnumerationCapExceeded(long double size,
                                               std::uint64_t cap)
    : std::runtime_error(cap_message(size, cap)), size_(size) {}

long double assignment_count(const Instance& instance) {
  long double product = 1.0L;
  for (int i = 0; i < instance.num_papers(); ++i) {
    product *= static_cast<long double>(instance.authors_of(i).size());
  }
  return product;
}

AssignmentEnumerator::AssignmentEnumerator(const Instance& instance,
                                           std::uint64_t cap)
    : instance_(&instance), total_(checked_count(instance, cap)) {
  digits_.assign(instance.num_papers(), 0);
  current_.nominee.assign(instance.num_papers(), 0);
}

bool AssignmentEnumerator::next() {
  if (!started_) {
    started_ = true;
  } else if (!advance(*instance_, digits_)) {
    return false;
  }
  for (int i = 0; i < instance_->num_papers(); ++i) {
    current_.nominee[i] = instance_->authors_of(i)[digits_[i]];
  }
  return true;
}

SolveReport oracle_basic(const Instance& instance,
                         const OracleOptions& options) {
  const std::uint64_t total = checked_count(instance, options.cap);
  const Scorer scorer(instance, std::nullopt, std::nullopt, 0.0);
  return finish(instance, search(instance, total, scorer, options.execution),
                total, "basic", std::nullopt, std::nullopt);
}

SolveReport oracle_hard(const Instance& instance, int limit,
                        const OracleOptions& options) {
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
  const std::uint64_t total = checked_count(instance, options.cap);
  const Scorer scorer(instance, limit, std::nullopt, 0.0);
  return finish(instance, search(instance, total, scorer, options.execution),
                total, "hard", limit, std::nullopt);
}

SolveReport oracle_soft(const Instance& instance, int limit, double lambda,
                        const OracleOptions& options) {
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const std::uint64_t total = checked_count(instance, options.cap);
  const Scorer scorer(instance, std::nullopt, limit, lambda);
  return finish(instance, search(instance, total, scorer, options.execution),
                total, "soft", limit, lambda);
}

}  // namespace deskrisk
