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

#include "deskrisk/soft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "deskrisk/flow.hpp"

namespace deskrisk {

double epigraph_gap(const Instance& instance, const FractionalSolution& point,
                    int limit) {
  if (!point.y) throw std::invalid_argument("point has no penalty variables");
  const std::vector<double> loads = fractional_loads(instance, point);
  double worst = 0.0;
  for (int j = 0; j < instance.num_authors(); ++j) {
    const double tight = std::max(0.0, loads[j] - limit);
    worst = std::max(worst, std::abs((*point.y)[j] - tight));
  }
  return worst;
}

SolveReport solve_soft_relaxed(const Instance& instance, int limit,
                               double lambda, const LpOptions& options) {
  const NominationLp lp = build_soft_lp(instance, limit, lambda);
  const LpResult res = solve_lp(lp.program, options);
  SolveReport r;
  r.variant = "soft";
  r.solver = "lp";
  r.limit = limit;
  r.lambda = lambda;
  if (res.status != LpStatus::kOptimal) {
    r.status = Status::kError;
    r.message = std::string("LP ") + to_string(res.status) + ": " + res.message;
    return r;
  }
  FractionalSolution point = to_fractional(lp, res.values);
  const SoftValue value = fractional_objective(instance, point, lambda);
  r.objective = value.objective;
  r.expected_rejections = value.expected_rejections;
  r.penalty = value.penalty;
  r.lp_bound = value.objective;
  r.integral = is_integral(point);
  const double gap = epigraph_gap(instance, point, limit);
  if (gap > kEpigraphTolerance) {
    r.status = Status::kError;
    r.message = "penalty variable off max(0, load - b) by " + std::to_string(gap);
  } else {
    r.status = Status::kOptimal;
  }
  r.fractional = std::move(point);
  return r;
}

namespace {

int argmax_author(const Instance& instance, const FractionalSolution& point,
                  int paper) {
  int best = instance.pair_begin(paper);
  for (int k = best + 1; k < instance.pair_end(paper); ++k) {
    if (point.x[k] > point.x[best]) best = k;
  }
  return instance.pair_author(best);
}

}  // namespace

Assignment round_soft(const Instance& instance,
                      const FractionalSolution& point, Execution execution) {
  if (static_cast<int>(point.x.size()) != instance.num_pairs()) {
    throw std::invalid_argument("fractional solution size mismatch");
  }
  const int n = instance.num_papers();
  Assignment a;
  a.nominee.resize(n);
  if (execution == Execution::kSerial) {
    for (int i = 0; i < n; ++i) a.nominee[i] = argmax_author(instance, point, i);
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) a.nominee[i] = argmax_author(instance, point, i);
  }
  return a;
}

SolveReport solve_soft(const Instance& instance, int limit, double lambda,
                       const LpOptions& options) {
  SolveReport relaxed = solve_soft_relaxed(instance, limit, lambda, options);
  if (relaxed.status != Status::kOptimal) {
    relaxed.solver = "lp-round";
    return relaxed;
  }
  SolveReport r = report_for(instance, round_soft(instance, *relaxed.fractional),
                             "soft", "lp-round", limit, lambda);
  r.lp_bound = relaxed.lp_bound;
  r.rounded_objective = r.objective;
  r.gap = r.objective - *relaxed.lp_bound;
  r.integral = relaxed.integral;
  r.fractional = std::move(relaxed.fractional);
  r.status = *r.gap <= kReportTolerance ? Status::kOptimal : Status::kFeasible;
  return r;
}

SolveReport solve_soft_exact(const Instance& instance, int limit,
                             double lambda) {
  const NominationNetwork net = build_soft_network(instance, limit, lambda);
  const FlowResult flow = min_cost_circulation(net.network);
  if (flow.status == FlowStatus::kInfeasible) {
    // A valid instance always has a circulation: the overflow edges carry
    // whatever the limit cannot.
    throw std::logic_error("soft network has no circulation");
  }
  return report_for(instance, extract_assignment(instance, net, flow.flow),
                    "soft", "exact-flow", limit, lambda);
}

}  // namespace deskrisk
