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

// Minimum-cost circulation with edge lower bounds, and the network that
// turns the hard-limit nomination problem into one.
//
// Network layout for an instance with n papers and m authors (0-based
// vertex ids; add one for the 1-based numbering used in dumps):
//
//   0            source
//   1            target
//   2 .. m+1     authors   (author j -> vertex j+2)
//   m+2 .. m+n+1 papers    (paper i  -> vertex i+m+2)
//
// Edges, in this order:
//   source -> author j      lower 0, capacity b, cost 0      (m edges)
//   author j -> paper i     lower 0, capacity 1, cost p_j    (one per pair)
//   paper i -> target       lower 1, capacity 1, cost 0      (n edges)
//   target -> source        lower 0, capacity n, cost 0
//
// The soft-limit network adds, right after the m source edges, a parallel
// source -> author j edge with capacity n and cost lambda per author: flow
// beyond b units pays lambda each, which is exactly the penalty
// lambda * max(0, load_j - b).

#ifndef DESKRISK_FLOW_HPP_
#define DESKRISK_FLOW_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "deskrisk/instance.hpp"

namespace deskrisk {

struct FlowEdge {
  int tail = 0;
  int head = 0;
  std::int64_t lower = 0;
  std::int64_t capacity = 0;
  double cost = 0.0;
};

// Directed graph with per-edge bounds and costs and per-vertex supplies.
// A flow is feasible when every edge carries between its lower bound and
// capacity and, at every vertex v, outflow - inflow = supply(v). With all
// supplies zero this is a circulation.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_vertices = 0)
      : supply_(static_cast<std::size_t>(num_vertices), 0) {}

  int num_vertices() const { return static_cast<int>(supply_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<FlowEdge>& edges() const { return edges_; }
  const FlowEdge& edge(int e) const { return edges_[e]; }
  const std::vector<std::int64_t>& supplies() const { return supply_; }

  int add_vertex();
  // Returns the edge index. Bounds are checked when solving.
  int add_edge(int tail, int head, std::int64_t lower, std::int64_t capacity,
               double cost);
  void set_supply(int vertex, std::int64_t supply) { supply_[vertex] = supply; }

 private:
  std::vector<FlowEdge> edges_;
  std::vector<std::int64_t> supply_;
};

enum class FlowStatus { kOptimal, kInfeasible };

struct FlowResult {
  FlowStatus status = FlowStatus::kInfeasible;
  std::vector<std::int64_t> flow;  // per edge; empty when infeasible
  double cost = 0.0;
  // Units of lower-bound or supply demand that could not be routed; zero
  // iff feasible.
  std::int64_t unrouted = 0;
};

// Integral minimum-cost flow by successive shortest paths with Dijkstra
// and vertex potentials, after moving lower bounds and negative-cost edges
// into vertex excesses. Throws std::invalid_argument on a malformed network
// (lower > capacity, negative lower, bad vertex id, non-finite cost,
// supplies not summing to zero).
FlowResult min_cost_circulation(const FlowNetwork& network);

// Checks bounds and conservation of `flow` on `network`.
bool is_feasible_flow(const FlowNetwork& network,
                      const std::vector<std::int64_t>& flow);

struct NominationNetwork {
  FlowNetwork network;
  // Edge index of the author -> paper edge for each pair id.
  std::vector<int> pair_edge;
  int num_authors = 0;
  int num_papers = 0;

  static int source() { return 0; }
  static int target() { return 1; }
  int author_vertex(int author) const { return author + 2; }
  int paper_vertex(int paper) const { return paper + num_authors + 2; }
};

NominationNetwork build_hard_network(const Instance& instance, int limit);
NominationNetwork build_soft_network(const Instance& instance, int limit,
                                     double lambda);

// Reads x_{i,j} = flow(author j -> paper i) back into an assignment. Throws
// std::logic_error if a paper does not receive exactly one unit.
Assignment extract_assignment(const Instance& instance,
                              const NominationNetwork& net,
                              const std::vector<std::int64_t>& flow);

// Exact optimum under the hard limit, or an Infeasible report.
SolveReport solve_hard(const Instance& instance, int limit);

}  // namespace deskrisk

#endif  // DESKRISK_FLOW_HPP_
