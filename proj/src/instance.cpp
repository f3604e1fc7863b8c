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

#include "deskrisk/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace deskrisk {

Instance::Instance(int num_papers, int num_authors,
                   const std::vector<std::vector<int>>& papers,
                   std::vector<double> p, std::optional<int> limit,
                   std::optional<double> lambda)
    : num_papers_(num_papers),
      num_authors_(num_authors),
      p_(std::move(p)),
      limit_(limit),
      lambda_(lambda) {
  offsets_.reserve(papers.size() + 1);
  for (std::size_t i = 0; i < papers.size(); ++i) {
    for (int author : papers[i]) {
      pair_authors_.push_back(author);
      pair_papers_.push_back(static_cast<int>(i));
    }
    offsets_.push_back(static_cast<int>(pair_authors_.size()));
  }
  // Keep authors_of() in bounds for a shape-mismatched (invalid) instance.
  while (static_cast<int>(offsets_.size()) < num_papers_ + 1) {
    offsets_.push_back(offsets_.back());
  }
}

int Instance::find_pair(int paper, int author) const {
  const auto authors = authors_of(paper);
  const auto it = std::lower_bound(authors.begin(), authors.end(), author);
  if (it == authors.end() || *it != author) return -1;
  return pair_begin(paper) + static_cast<int>(it - authors.begin());
}

Instance Instance::with_limit(std::optional<int> limit) const {
  Instance copy = *this;
  copy.limit_ = limit;
  return copy;
}

Instance Instance::with_lambda(std::optional<double> lambda) const {
  Instance copy = *this;
  copy.lambda_ = lambda;
  return copy;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "Optimal";
    case Status::kFeasible:
      return "Feasible";
    case Status::kInfeasible:
      return "Infeasible";
    case Status::kError:
      return "Error";
  }
  return "Error";
}

std::optional<Status> parse_status(const std::string& text) {
  for (Status s : {Status::kOptimal, Status::kFeasible, Status::kInfeasible,
                   Status::kError}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  auto add = [&out](Violation::Kind kind, std::string message) {
    out.push_back({kind, std::move(message)});
  };
  const int n = instance.num_papers();
  const int m = instance.num_authors();
  if (n < 1) add(Violation::Kind::kShape, "n must be positive");
  if (m < 1) add(Violation::Kind::kShape, "m must be positive");
  if (static_cast<int>(instance.p().size()) != m) {
    add(Violation::Kind::kShape, "p has " +
                                     std::to_string(instance.p().size()) +
                                     " entries, expected m=" +
                                     std::to_string(m));
  }
  if (n >= 1 && instance.pair_end(n - 1) != instance.num_pairs()) {
    add(Violation::Kind::kShape, "more author lists than papers");
  }
  for (int i = 0; i < n; ++i) {
    const auto authors = instance.authors_of(i);
    const std::string paper = "paper " + std::to_string(i + 1);
    if (authors.empty()) {
      add(Violation::Kind::kEmptyPaper, paper + " has no authors");
    }
    for (std::size_t k = 0; k < authors.size(); ++k) {
      const int j = authors[k];
      if (j < 0 || j >= m) {
        add(Violation::Kind::kAuthorOutOfRange,
            paper + " lists author " + std::to_string(j + 1) +
                " outside [1," + std::to_string(m) + "]");
      }
      if (k > 0 && authors[k - 1] == j) {
        add(Violation::Kind::kDuplicatePair,
            paper + " lists author " + std::to_string(j + 1) + " twice");
      } else if (k > 0 && authors[k - 1] > j) {
        add(Violation::Kind::kUnsorted,
            paper + " authors not in ascending order");
      }
    }
  }
  for (std::size_t j = 0; j < instance.p().size(); ++j) {
    const double pj = instance.p()[j];
    if (!(pj >= 0.0 && pj <= 1.0)) {
      add(Violation::Kind::kProbabilityOutOfRange,
          "p_" + std::to_string(j + 1) + " out of [0,1]");
    }
  }
  if (instance.limit() && *instance.limit() < 1) {
    add(Violation::Kind::kBadLimit, "b must be at least 1");
  }
  if (instance.lambda() &&
      !(*instance.lambda() > 0.0 && std::isfinite(*instance.lambda()))) {
    add(Violation::Kind::kBadLambda, "lambda must be positive and finite");
  }
  return out;
}

void require_valid(const Instance& instance) {
  const auto violations = validate(instance);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : violations) msg << ' ' << v.message << ';';
  throw std::invalid_argument(msg.str());
}

void require_valid(const Instance& instance, const Assignment& assignment) {
  const int n = instance.num_papers();
  if (static_cast<int>(assignment.nominee.size()) != n) {
    throw std::invalid_argument("assignment has " +
                                std::to_string(assignment.nominee.size()) +
                                " nominees for " + std::to_string(n) +
                                " papers");
  }
  for (int i = 0; i < n; ++i) {
    if (instance.find_pair(i, assignment.nominee[i]) < 0) {
      throw std::invalid_argument(
          "paper " + std::to_string(i + 1) + " nominates author " +
          std::to_string(assignment.nominee[i] + 1) + " who is not on it");
    }
  }
}

std::vector<int> author_loads(const Instance& instance,
                              const Assignment& assignment) {
  require_valid(instance, assignment);
  std::vector<int> loads(instance.num_authors(), 0);
  for (int j : assignment.nominee) ++loads[j];
  return loads;
}

double basic_objective(const Instance& instance, const Assignment& assignment) {
  require_valid(instance, assignment);
  double total = 0.0;
  for (int j : assignment.nominee) total += instance.p(j);
  return total;
}

SoftValue soft_objective(const Instance& instance, const Assignment& assignment,
                         int limit, double lambda) {
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  SoftValue v;
  v.expected_rejections = basic_objective(instance, assignment);
  std::int64_t excess = 0;
  for (int load : author_loads(instance, assignment)) {
    excess += std::max(0, load - limit);
  }
  v.penalty = lambda * static_cast<double>(excess);
  v.objective = v.expected_rejections + v.penalty;
  return v;
}

SoftValue soft_objective(const Instance& instance,
                         const Assignment& assignment) {
  if (!instance.limit() || !instance.lambda()) {
    throw std::invalid_argument("soft objective needs both b and lambda");
  }
  return soft_objective(instance, assignment, *instance.limit(),
                        *instance.lambda());
}

SoftValue fractional_objective(const Instance& instance,
                               const FractionalSolution& solution,
                               std::optional<double> lambda) {
  if (static_cast<int>(solution.x.size()) != instance.num_pairs()) {
    throw std::invalid_argument("fractional solution size mismatch");
  }
  SoftValue v;
  for (int k = 0; k < instance.num_pairs(); ++k) {
    v.expected_rejections += instance.p(instance.pair_author(k)) * solution.x[k];
  }
  if (solution.y) {
    if (!lambda) throw std::invalid_argument("penalty variables need lambda");
    double total = 0.0;
    for (double y : *solution.y) total += y;
    v.penalty = *lambda * total;
  }
  v.objective = v.expected_rejections + v.penalty;
  return v;
}

std::vector<double> fractional_loads(const Instance& instance,
                                     const FractionalSolution& solution) {
  std::vector<double> loads(instance.num_authors(), 0.0);
  for (int k = 0; k < instance.num_pairs(); ++k) {
    loads[instance.pair_author(k)] += solution.x[k];
  }
  return loads;
}

SolveReport report_for(const Instance& instance, Assignment assignment,
                       std::string variant, std::string solver,
                       std::optional<int> limit, std::optional<double> lambda) {
  SolveReport r;
  r.status = Status::kOptimal;
  r.variant = std::move(variant);
  r.solver = std::move(solver);
  r.limit = limit;
  r.lambda = lambda;
  if (limit && lambda) {
    const SoftValue v = soft_objective(instance, assignment, *limit, *lambda);
    r.objective = v.objective;
    r.expected_rejections = v.expected_rejections;
    r.penalty = v.penalty;
  } else {
    r.expected_rejections = basic_objective(instance, assignment);
    r.penalty = 0.0;
    r.objective = r.expected_rejections + r.penalty;
  }
  r.loads = author_loads(instance, assignment);
  r.assignment = std::move(assignment);
  return r;
}

SolveReport infeasible_report(std::string variant, std::string solver,
                              std::string message) {
  SolveReport r;
  r.status = Status::kInfeasible;
  r.variant = std::move(variant);
  r.solver = std::move(solver);
  r.message = std::move(message);
  return r;
}

}  // namespace deskrisk
