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

// Problem instance, solutions and the objective evaluators shared by every
// solver. All indices are 0-based in memory; file formats and reports use
// 1-based indices (see io.hpp).

#ifndef DESKRISK_INSTANCE_HPP_
#define DESKRISK_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace deskrisk {

// Absolute tolerance used when comparing objective values in reports.
inline constexpr double kReportTolerance = 1e-9;

// Papers, authors, the sparse authorship incidence and the per-author
// irresponsibility probabilities. Optionally carries the nomination limit
// `b` and penalty weight `lambda`.
//
// Authorship is stored row-compressed: the authors of paper i occupy
// positions [pair_begin(i), pair_end(i)) of `pair_authors()`. That position
// is the pair id used by LP variables, flow edges and fractional solutions.
//
// The constructor does not validate; call validate() (or require_valid())
// before handing an instance to a solver.
class Instance {
 public:
  Instance() = default;
  Instance(int num_papers, int num_authors,
           const std::vector<std::vector<int>>& papers,
           std::vector<double> p, std::optional<int> limit = std::nullopt,
           std::optional<double> lambda = std::nullopt);

  int num_papers() const { return num_papers_; }
  int num_authors() const { return num_authors_; }
  int num_pairs() const { return static_cast<int>(pair_authors_.size()); }

  std::span<const int> authors_of(int paper) const {
    return {pair_authors_.data() + offsets_[paper],
            pair_authors_.data() + offsets_[paper + 1]};
  }
  int pair_begin(int paper) const { return offsets_[paper]; }
  int pair_end(int paper) const { return offsets_[paper + 1]; }
  // Author of pair id `pair`.
  int pair_author(int pair) const { return pair_authors_[pair]; }
  // Paper of pair id `pair`.
  int pair_paper(int pair) const { return pair_papers_[pair]; }
  // Pair id of (paper, author), or -1 if the author is not on the paper.
  int find_pair(int paper, int author) const;

  const std::vector<int>& pair_authors() const { return pair_authors_; }
  const std::vector<double>& p() const { return p_; }
  double p(int author) const { return p_[author]; }
  const std::optional<int>& limit() const { return limit_; }
  const std::optional<double>& lambda() const { return lambda_; }

  Instance with_limit(std::optional<int> limit) const;
  Instance with_lambda(std::optional<double> lambda) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int num_papers_ = 0;
  int num_authors_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> pair_authors_;
  std::vector<int> pair_papers_;
  std::vector<double> p_;
  std::optional<int> limit_;
  std::optional<double> lambda_;
};

// One nominated author per paper.
struct Assignment {
  std::vector<int> nominee;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Relaxed solution: `x[pair]` in [0,1] on incident pairs, and the epigraph
// penalty variables `y` (one per author) for the soft LP.
struct FractionalSolution {
  std::vector<double> x;
  std::optional<std::vector<double>> y;
};

enum class Status { kOptimal, kFeasible, kInfeasible, kError };

const char* to_string(Status status);
std::optional<Status> parse_status(const std::string& text);

struct SolveReport {
  Status status = Status::kError;
  std::string variant;
  std::string solver;
  double objective = 0.0;
  double expected_rejections = 0.0;
  double penalty = 0.0;
  std::vector<int> loads;
  std::optional<Assignment> assignment;
  std::optional<std::uint64_t> seed;
  std::optional<int> limit;
  std::optional<double> lambda;

  // Relaxation / rounding diagnostics.
  std::optional<double> lp_bound;
  std::optional<double> rounded_objective;
  std::optional<double> gap;
  std::optional<bool> integral;
  std::optional<FractionalSolution> fractional;
  // Baseline failure flag.
  std::optional<bool> err;
  std::string message;
};

struct Violation {
  enum class Kind {
    kShape,
    kEmptyPaper,
    kAuthorOutOfRange,
    kDuplicatePair,
    kUnsorted,
    kProbabilityOutOfRange,
    kBadLimit,
    kBadLambda,
  };
  Kind kind;
  std::string message;
};

// Every violated instance invariant, with 1-based paper/author indices in
// the messages. Empty means valid.
std::vector<Violation> validate(const Instance& instance);

// Throws std::invalid_argument listing the violations when invalid.
void require_valid(const Instance& instance);

// Throws std::invalid_argument unless every paper nominates one of its own
// authors.
void require_valid(const Instance& instance, const Assignment& assignment);

std::vector<int> author_loads(const Instance& instance,
                              const Assignment& assignment);

// Sum over papers of the nominee's probability, accumulated in paper order.
double basic_objective(const Instance& instance, const Assignment& assignment);

struct SoftValue {
  double objective = 0.0;
  double expected_rejections = 0.0;
  double penalty = 0.0;
};

SoftValue soft_objective(const Instance& instance, const Assignment& assignment,
                         int limit, double lambda);
// Uses the limit and lambda stored on the instance; throws if either is
// missing.
SoftValue soft_objective(const Instance& instance,
                         const Assignment& assignment);

// Objective of a fractional point. The penalty is lambda * sum(y) when `y`
// is present (lambda must then be supplied), zero otherwise.
SoftValue fractional_objective(const Instance& instance,
                               const FractionalSolution& solution,
                               std::optional<double> lambda = std::nullopt);

std::vector<double> fractional_loads(const Instance& instance,
                                     const FractionalSolution& solution);

// Fills status, objective terms, loads and assignment of a report from an
// integral assignment, using the evaluators above.
SolveReport report_for(const Instance& instance, Assignment assignment,
                       std::string variant, std::string solver,
                       std::optional<int> limit = std::nullopt,
                       std::optional<double> lambda = std::nullopt);

SolveReport infeasible_report(std::string variant, std::string solver,
                              std::string message);

}  // namespace deskrisk

#endif  // DESKRISK_INSTANCE_HPP_
