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

#include "deskrisk/flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace deskrisk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_network(const FlowNetwork& network) {
  const int nv = network.num_vertices();
  for (int e = 0; e < network.num_edges(); ++e) {
    const FlowEdge& edge = network.edge(e);
    const std::string where = "edge " + std::to_string(e + 1);
    if (edge.tail < 0 || edge.tail >= nv || edge.head < 0 || edge.head >= nv) {
      throw std::invalid_argument(where + " has an endpoint out of range");
    }
    if (edge.lower < 0) {
      throw std::invalid_argument(where + " has a negative lower bound");
    }
    if (edge.lower > edge.capacity) {
      throw std::invalid_argument(where + " has lower bound above capacity");
    }
    if (!std::isfinite(edge.cost)) {
      throw std::invalid_argument(where + " has a non-finite cost");
    }
  }
  std::int64_t total = 0;
  for (std::int64_t s : network.supplies()) total += s;
  if (total != 0) throw std::invalid_argument("supplies do not sum to zero");
}

// Residual graph over the network plus a super source and super sink.
// Arc 2e is edge e forward, arc 2e+1 its reverse; super arcs follow.
class Residual {
 public:
  explicit Residual(int num_vertices) : num_vertices_(num_vertices) {}

  int add_arc_pair(int tail, int head, std::int64_t cap, std::int64_t rev_cap,
                   double cost) {
    const int a = static_cast<int>(to_.size());
    to_.push_back(head);
    from_.push_back(tail);
    cap_.push_back(cap);
    cost_.push_back(cost);
    to_.push_back(tail);
    from_.push_back(head);
    cap_.push_back(rev_cap);
    cost_.push_back(-cost);
    return a;
  }

  // Freezes the arc set into per-vertex adjacency lists (insertion order).
  void finalize() {
    start_.assign(num_vertices_ + 1, 0);
    for (int t : from_) ++start_[t + 1];
    for (int v = 0; v < num_vertices_; ++v) start_[v + 1] += start_[v];
    adjacency_.resize(from_.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (int a = 0; a < static_cast<int>(from_.size()); ++a) {
      adjacency_[fill[from_[a]]++] = a;
    }
  }

  // Successive shortest paths from `s` to `t`; returns units routed.
  std::int64_t route(int s, int t, std::int64_t wanted) {
    std::vector<double> potential(num_vertices_, 0.0);
    std::vector<double> dist(num_vertices_);
    std::vector<int> via(num_vertices_);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::int64_t routed = 0;
    while (routed < wanted) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(via.begin(), via.end(), -1);
      dist[s] = 0.0;
      heap.emplace(0.0, s);
      while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (u == t) break;
        for (int k = start_[u]; k < start_[u + 1]; ++k) {
          const int a = adjacency_[k];
          if (cap_[a] <= 0) continue;
          const int v = to_[a];
          // Exact reduced costs are nonnegative here. Round-off can push one
          // to -1e-17 on a zero-cost cycle, and Dijkstra would then relax
          // around that cycle forever, so clamp.
          const double reduced = cost_[a] + potential[u] - potential[v];
          const double nd = d + std::max(reduced, 0.0);
          if (nd < dist[v]) {
            dist[v] = nd;
            via[v] = a;
            heap.emplace(nd, v);
          }
        }
      }
      while (!heap.empty()) heap.pop();
      if (dist[t] == kInf) break;
      const double reach = dist[t];
      for (int v = 0; v < num_vertices_; ++v) {
        potential[v] += std::min(dist[v], reach);
      }
      std::int64_t push = wanted - routed;
      for (int v = t; v != s; v = from_[via[v]]) {
        push = std::min(push, cap_[via[v]]);
      }
      for (int v = t; v != s; v = from_[via[v]]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      routed += push;
    }
    return routed;
  }

  std::int64_t capacity(int arc) const { return cap_[arc]; }

 private:
  int num_vertices_;
  std::vector<int> to_;
  std::vector<int> from_;
  std::vector<std::int64_t> cap_;
  std::vector<double> cost_;
  std::vector<int> start_;
  std::vector<int> adjacency_;
};

}  // namespace

int FlowNetwork::add_vertex() {
  supply_.push_back(0);
  return num_vertices() - 1;
}

int FlowNetwork::add_edge(int tail, int head, std::int64_t lower,
                          std::int64_t capacity, double cost) {
  edges_.push_back({tail, head, lower, capacity, cost});
  return num_edges() - 1;
}

FlowResult min_cost_circulation(const FlowNetwork& network) {
  check_network(network);
  const int nv = network.num_vertices();
  const int super_source = nv;
  const int super_sink = nv + 1;

  // Start from f0 = lower (or capacity for negative-cost edges); every
  // residual arc then has nonnegative cost, so zero potentials are valid.
  std::vector<std::int64_t> base(network.num_edges());
  std::vector<std::int64_t> need(network.supplies());
  Residual residual(nv + 2);
  for (int e = 0; e < network.num_edges(); ++e) {
    const FlowEdge& edge = network.edge(e);
    base[e] = edge.cost < 0.0 ? edge.capacity : edge.lower;
    residual.add_arc_pair(edge.tail, edge.head, edge.capacity - base[e],
                          base[e] - edge.lower, edge.cost);
    need[edge.tail] -= base[e];
    need[edge.head] += base[e];
  }
  // need(v) > 0: v must still send need(v) more units than it receives.
  std::int64_t wanted = 0;
  for (int v = 0; v < nv; ++v) {
    if (need[v] > 0) {
      residual.add_arc_pair(super_source, v, need[v], 0, 0.0);
      wanted += need[v];
    } else if (need[v] < 0) {
      residual.add_arc_pair(v, super_sink, -need[v], 0, 0.0);
    }
  }
  residual.finalize();
  const std::int64_t routed = residual.route(super_source, super_sink, wanted);

  FlowResult result;
  result.unrouted = wanted - routed;
  if (result.unrouted > 0) {
    result.status = FlowStatus::kInfeasible;
    return result;
  }
  result.status = FlowStatus::kOptimal;
  result.flow.resize(network.num_edges());
  for (int e = 0; e < network.num_edges(); ++e) {
    // Reverse residual capacity is flow above the lower bound.
    result.flow[e] = network.edge(e).lower + residual.capacity(2 * e + 1);
    result.cost += network.edge(e).cost * static_cast<double>(result.flow[e]);
  }
  return result;
}

bool is_feasible_flow(const FlowNetwork& network,
                      const std::vector<std::int64_t>& flow) {
  if (static_cast<int>(flow.size()) != network.num_edges()) return false;
  std::vector<std::int64_t> net(network.num_vertices(), 0);
  for (int e = 0; e < network.num_edges(); ++e) {
    const FlowEdge& edge = network.edge(e);
    if (flow[e] < edge.lower || flow[e] > edge.capacity) return false;
    net[edge.tail] += flow[e];
    net[edge.head] -= flow[e];
  }
  return net == network.supplies();
}

namespace {

NominationNetwork build_network(const Instance& instance, int limit,
                                const double* lambda) {
  require_valid(instance);
  if (limit < 1) throw std::invalid_argument("b must be at least 1");
  const int n = instance.num_papers();
  const int m = instance.num_authors();
  NominationNetwork net;
  net.num_authors = m;
  net.num_papers = n;
  net.network = FlowNetwork(m + n + 2);
  FlowNetwork& g = net.network;
  for (int j = 0; j < m; ++j) {
    g.add_edge(net.source(), net.author_vertex(j), 0, limit, 0.0);
  }
  if (lambda != nullptr) {
    for (int j = 0; j < m; ++j) {
      g.add_edge(net.source(), net.author_vertex(j), 0, n, *lambda);
    }
  }
  net.pair_edge.resize(instance.num_pairs());
  for (int k = 0; k < instance.num_pairs(); ++k) {
    const int j = instance.pair_author(k);
    net.pair_edge[k] =
        g.add_edge(net.author_vertex(j), net.paper_vertex(instance.pair_paper(k)),
                   0, 1, instance.p(j));
  }
  for (int i = 0; i < n; ++i) {
    g.add_edge(net.paper_vertex(i), net.target(), 1, 1, 0.0);
  }
  g.add_edge(net.target(), net.source(), 0, n, 0.0);
  return net;
}

}  // namespace

NominationNetwork build_hard_network(const Instance& instance, int limit) {
  return build_network(instance, limit, nullptr);
}

NominationNetwork build_soft_network(const Instance& instance, int limit,
                                     double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return build_network(instance, limit, &lambda);
}

Assignment extract_assignment(const Instance& instance,
                              const NominationNetwork& net,
                              const std::vector<std::int64_t>& flow) {
  Assignment a;
  a.nominee.assign(instance.num_papers(), -1);
  for (int i = 0; i < instance.num_papers(); ++i) {
    std::int64_t units = 0;
    for (int k = instance.pair_begin(i); k < instance.pair_end(i); ++k) {
      const std::int64_t f = flow[net.pair_edge[k]];
      if (f == 1) a.nominee[i] = instance.pair_author(k);
      units += f;
    }
    if (units != 1 || a.nominee[i] < 0) {
      throw std::logic_error("paper " + std::to_string(i + 1) + " received " +
                             std::to_string(units) + " units of flow");
    }
  }
  return a;
}

SolveReport solve_hard(const Instance& instance, int limit) {
  const NominationNetwork net = build_hard_network(instance, limit);
  const FlowResult flow = min_cost_circulation(net.network);
  if (flow.status == FlowStatus::kInfeasible) {
    SolveReport r = infeasible_report(
        "hard", "flow",
        std::to_string(flow.unrouted) +
            " paper(s) cannot be covered without exceeding b=" +
            std::to_string(limit));
    r.limit = limit;
    return r;
  }
  return report_for(instance, extract_assignment(instance, net, flow.flow),
                    "hard", "flow", limit, std::nullopt);
}

}  // namespace deskrisk
