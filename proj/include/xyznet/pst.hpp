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

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"

namespace xyznet {

struct PstFinding {
  std::pair<int, int> pair;
  std::vector<double> times;
  std::vector<double> peak_fidelities;
  double epsilon = 0.0;

  bool empty() const noexcept { return times.empty(); }
};

inline constexpr double kDefaultPstEpsilon = 1e-6;
inline constexpr double kDefaultPstWindow = 4.0 * std::numbers::pi;
inline constexpr int kPstGridPerPi = 2048;
inline constexpr double kGoldenTolerance = 1e-12;

inline int default_pst_grid_steps(double t_max) {
  return std::max(100, static_cast<int>(std::ceil(kPstGridPerPi * t_max / std::numbers::pi)) + 1);
}

namespace detail {

/// Golden-section minimisation of a unimodal function on [lo, hi].
template <typename F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Scans f(i,j,t) on a uniform grid over [0, t_max] and refines every local
/// maximum above 1 - 10 epsilon by golden-section search. The refined
/// objective is the leakage sum_{v != j} |<v|U_t|i>|^2 = 1 - f^2, which is
/// monotone in f but keeps full relative precision near a peak.
inline PstFinding pst_scan(const SpectralEvolution& evo, int i, int j, double t_max,
                           int grid_steps, double epsilon = kDefaultPstEpsilon) {
  Graph::check_vertex(evo.order(), i);
  Graph::check_vertex(evo.order(), j);
  if (grid_steps < 100) throw Error(ErrorCode::InvalidArgument, "grid_steps must be >= 100");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw Error(ErrorCode::InvalidArgument, "t_max must be positive and finite");

  const auto curve = evo.fidelity_curve(i, j, t_max, grid_steps);
  const auto& s = curve.samples;
  const double coarse_floor = 1.0 - 10.0 * epsilon;
  const double step = t_max / (grid_steps - 1);

  PstFinding out{{i, j}, {}, {}, epsilon};
  auto leakage = [&](double t) { return evo.leakage(i, j, t); };

  for (std::size_t k = 0; k < s.size(); ++k) {
    const double left = k > 0 ? s[k - 1].f : -1.0;
    const double right = k + 1 < s.size() ? s[k + 1].f : -1.0;
    // Plateaus resolve to their first point.
    if (!(s[k].f > left && s[k].f >= right)) continue;
    if (s[k].f < coarse_floor) continue;

    const double lo = std::max(0.0, s[k].t - step);
    const double hi = std::min(t_max, s[k].t + step);
    const double t = detail::golden_section_minimize(leakage, lo, hi, kGoldenTolerance);
    const double f = evo.fidelity(i, j, t);
    if (f < 1.0 - epsilon) continue;
    if (!out.times.empty() && t - out.times.back() <= 1e-9) {
      if (f > out.peak_fidelities.back()) {
        out.times.back() = t;
        out.peak_fidelities.back() = f;
      }
      continue;
    }
    out.times.push_back(t);
    out.peak_fidelities.push_back(f);
  }
  return out;
}

inline PstFinding pst_scan(const IntSymMatrix& h, int i, int j, double t_max, int grid_steps,
                           double epsilon = kDefaultPstEpsilon) {
  return pst_scan(SpectralEvolution(h), i, j, t_max, grid_steps, epsilon);
}

struct PairFidelity {
  std::pair<int, int> pair;
  double fidelity = 0.0;
};

/// Fidelity of every deleted pair of K_n minus a matching at
/// t = pi/4 + k pi/2.
inline std::vector<PairFidelity> verify_matching_pst(int n,
                                                     std::span<const std::pair<int, int>> deleted,
                                                     int k = 0) {
  if (n < 4 || n % 4 != 0)
    throw Error(ErrorCode::UnsupportedOrder,
                "matching PST requires n divisible by 4, got " + std::to_string(n));
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "time index k must be >= 0");
  if (deleted.size() > static_cast<std::size_t>(n / 2))
    throw Error(ErrorCode::NotVertexDisjoint, "more than n/2 pairs cannot be vertex-disjoint");
  const Graph g = complete_minus_matching(n, deleted);
  const SpectralEvolution evo(xyz_hamiltonian(g));
  const double t = std::numbers::pi / 4 + k * std::numbers::pi / 2;
  std::vector<PairFidelity> out;
  out.reserve(deleted.size());
  for (auto [a, b] : deleted) out.push_back({{a, b}, evo.fidelity(a, b, t)});
  return out;
}

inline std::vector<PairFidelity> verify_matching_pst(
    int n, std::initializer_list<std::pair<int, int>> deleted, int k = 0) {
  std::vector<std::pair<int, int>> v(deleted);
  return verify_matching_pst(n, std::span<const std::pair<int, int>>(v), k);
}

}  // namespace xyznet
