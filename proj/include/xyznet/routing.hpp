// Copyright 2026 The xyznet Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"

namespace xyznet {

/// A chain of hops on K_n. Each hop (s, t) switches OFF link {s, t}, evolves
/// for pi/4 + k pi/2 and switches the link back ON.
struct RoutingSchedule {
  int n = 0;
  std::vector<std::pair<int, int>> hops;
  int k = 0;

  /// Hops (v1,v2), (v2,v3), ... from a vertex path.
  static RoutingSchedule from_path(int n, std::span<const int> path, int k = 0) {
    RoutingSchedule s{n, {}, k};
    for (std::size_t h = 0; h + 1 < path.size(); ++h) s.hops.emplace_back(path[h], path[h + 1]);
    return s;
  }

  static RoutingSchedule from_path(int n, std::initializer_list<int> path, int k = 0) {
    std::vector<int> v(path);
    return from_path(n, std::span<const int>(v), k);
  }

  double hop_time() const { return std::numbers::pi / 4 + k * std::numbers::pi / 2; }

  void validate() const {
    if (n < 4 || n % 4 != 0)
      throw Error(ErrorCode::UnsupportedOrder,
                  "routing requires n divisible by 4, got " + std::to_string(n));
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "time index k must be >= 0");
    for (std::size_t h = 0; h < hops.size(); ++h) {
      const auto [s, t] = hops[h];
      Graph::check_vertex(n, s);
      Graph::check_vertex(n, t);
      if (s == t)
        throw Error(ErrorCode::SelfLoop, "hop " + std::to_string(h) + " has source == target");
      if (h + 1 < hops.size() && hops[h + 1].first != t)
        throw Error(ErrorCode::BrokenChain, "hop " + std::to_string(h + 1) +
                                                " does not start where hop " + std::to_string(h) +
                                                " ends");
    }
  }
};

/// External agent toggling links of the network. Every OFF and every ON is
/// one switching operation.
class LinkController {
 public:
  explicit LinkController(Graph initial) : graph_(std::move(initial)) {}

  void switch_off(int u, int v) {
    if (!graph_.has_edge(u, v))
      throw Error(ErrorCode::InvalidArgument,
                  "link " + std::to_string(u) + "-" + std::to_string(v) + " is already OFF");
    graph_ = graph_.without_edge(u, v);
    ++ops_;
  }

  void switch_on(int u, int v) {
    if (graph_.has_edge(u, v))
      throw Error(ErrorCode::InvalidArgument,
                  "link " + std::to_string(u) + "-" + std::to_string(v) + " is already ON");
    graph_ = graph_.with_edge(u, v);
    ++ops_;
  }

  const Graph& graph() const noexcept { return graph_; }
  int switch_ops() const noexcept { return ops_; }

 private:
  Graph graph_;
  int ops_ = 0;
};

struct RoutingReport {
  std::vector<std::vector<Complex>> state_trace;  // state after each hop
  std::vector<double> hop_fidelities;             // |<target|state>| after each hop
  int switch_ops = 0;
  double total_time = 0.0;
  Graph final_graph = complete_graph(1);
};

/// Runs the schedule from an arbitrary initial state. No renormalisation is
/// applied between hops.
inline RoutingReport simulate_route(const RoutingSchedule& schedule,
                                    std::vector<Complex> state) {
  schedule.validate();
  if (state.size() != static_cast<std::size_t>(schedule.n))
    throw Error(ErrorCode::InvalidArgument, "initial state has wrong dimension");

  LinkController controller(complete_graph(schedule.n));
  RoutingReport report;
  const double t = schedule.hop_time();
  for (auto [source, target] : schedule.hops) {
    controller.switch_off(source, target);
    const SpectralEvolution evo(xyz_hamiltonian(controller.graph()));
    state = evo.evolve(state, t);
    controller.switch_on(source, target);

    report.hop_fidelities.push_back(std::abs(state[static_cast<std::size_t>(target - 1)]));
    report.state_trace.push_back(state);
    report.total_time += t;
  }
  report.switch_ops = controller.switch_ops();
  report.final_graph = controller.graph();
  return report;
}

/// Starts in basis state |initial_vertex>, which must be the first hop's source.
inline RoutingReport simulate_route(const RoutingSchedule& schedule, int initial_vertex) {
  schedule.validate();
  Graph::check_vertex(schedule.n, initial_vertex);
  if (!schedule.hops.empty() && schedule.hops.front().first != initial_vertex)
    throw Error(ErrorCode::BrokenChain, "initial vertex is not the source of the first hop");
  std::vector<Complex> state(static_cast<std::size_t>(schedule.n));
  state[static_cast<std::size_t>(initial_vertex - 1)] = 1.0;
  return simulate_route(schedule, std::move(state));
}

/// Switching-operation count for a tour through all n sites (n - 1 hops).
/// `convention_count` is 2 per hop (OFF then ON); `reference_count` is the
/// published figure 2n - 1. The two differ and the flag says so.
struct TourOpCount {
  int n = 0;
  int hops = 0;
  int convention_count = 0;
  int reference_count = 0;
  bool discrepancy = false;
};

inline TourOpCount tour_op_count(int n) {
  if (n < 4 || n % 4 != 0)
    throw Error(ErrorCode::UnsupportedOrder,
                "routing requires n divisible by 4, got " + std::to_string(n));
  TourOpCount c{n, n - 1, 2 * (n - 1), 2 * n - 1, false};
  c.discrepancy = c.convention_count != c.reference_count;
  return c;
}

}  // namespace xyznet
