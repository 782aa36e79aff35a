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
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xyznet/closed_form.hpp"
#include "xyznet/error.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"
#include "xyznet/io.hpp"
#include "xyznet/linalg.hpp"
#include "xyznet/pst.hpp"
#include "xyznet/routing.hpp"

namespace xyznet {

/// One row of the verification table.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;  // no sizes in range for the requested n_max
  std::string detail;
};

namespace verify_detail {

inline constexpr std::uint64_t kSeed = 0x5859'5a4e'4554ULL;

/// Erdos-Renyi graph with a random edge probability.
inline Graph random_graph(std::mt19937_64& rng, int n_lo, int n_hi) {
  std::uniform_int_distribution<int> order(n_lo, n_hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = order(rng);
  const double p = unit(rng);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (unit(rng) < p) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
}

/// Max of |f| over `points` evenly spaced times on [0, t_max].
inline double scan_max(const SpectralEvolution& evo, int i, int j, double t_max, int points) {
  double best = 0.0;
  for (int s = 0; s < points; ++s) best = std::max(best, evo.fidelity(i, j, t_max * s / (points - 1)));
  return best;
}

struct Tracker {
  double worst = 0.0;
  bool ok = true;
  std::string first_failure;

  void expect(bool condition, double magnitude, const std::string& what) {
    worst = std::max(worst, magnitude);
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

inline CheckResult make(int id, std::string name, const Tracker& tr, const std::string& summary) {
  CheckResult r{id, std::move(name), tr.ok, false, summary};
  if (!tr.ok) r.detail += "; first failure: " + tr.first_failure;
  return r;
}

inline CheckResult skipped(int id, std::string name, const std::string& why) {
  return {id, std::move(name), true, true, "skipped: " + why};
}

inline std::vector<int> sizes_up_to(std::initializer_list<int> candidates, int n_max) {
  std::vector<int> out;
  for (int n : candidates)
    if (n <= n_max) out.push_back(n);
  return out;
}

inline std::vector<int> range_up_to(int lo, int hi, int n_max) {
  std::vector<int> out;
  for (int n = lo; n <= std::min(hi, n_max); ++n) out.push_back(n);
  return out;
}

}  // namespace verify_detail

inline CheckResult check_laplacian_identity(int n_max) {
  using namespace verify_detail;
  std::mt19937_64 rng(kSeed);
  Tracker tr;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 1, std::min(12, n_max));
    const auto n = static_cast<std::size_t>(g.order());
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const auto expected = m * IntSymMatrix::identity(n) - 2 * laplacian(g);
    const auto diff = (xyz_hamiltonian(g) - expected).max_abs();
    tr.expect(diff == 0, static_cast<double>(diff), "trial " + std::to_string(trial));
  }
  return make(1, "H = mI - 2L exact on 200 random graphs", tr,
              "max |entry diff| = " + std::to_string(static_cast<long long>(tr.worst)));
}

inline CheckResult check_spectral_correspondence(int n_max) {
  using namespace verify_detail;
  std::mt19937_64 rng(kSeed);
  Tracker tr;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 1, std::min(12, n_max));
    const double m = static_cast<double>(g.edge_count());
    const auto h_values = symmetric_eigendecomposition(xyz_hamiltonian(g)).values;
    auto mapped = symmetric_eigendecomposition(laplacian(g)).values;
    for (auto& mu : mapped) mu = m - 2.0 * mu;
    std::sort(mapped.begin(), mapped.end());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
      const double d = std::abs(mapped[k] - h_values[k]);
      tr.expect(d <= 1e-9, d, "trial " + std::to_string(trial));
    }
  }
  return make(2, "spec(H) = {m - 2 mu : mu in spec(L)}", tr, "max |diff| = " + sci(tr.worst));
}

inline CheckResult check_complete_graph_extrema(int n_max) {
  using namespace verify_detail;
  using std::numbers::pi;
  Tracker tr;
  for (int n : range_up_to(3, 16, n_max)) {
    const SpectralEvolution evo(xyz_hamiltonian(complete_graph(n)));
    const double t = pi / (2.0 * n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const double expected = (i == j) ? 1.0 - 2.0 / n : 2.0 / n;
        const double d = std::abs(evo.fidelity(i, j, t) - expected);
        tr.expect(d <= 1e-9, d, "n=" + std::to_string(n) + " pair " + std::to_string(i) + "," +
                                    std::to_string(j));
      }
    for (auto [i, j] : {std::pair{1, 2}, std::pair{n - 1, n}}) {
      const double peak = scan_max(evo, i, j, 2.0 * pi, 10000);
      tr.expect(peak <= 2.0 / n + 1e-9, std::max(0.0, peak - 2.0 / n),
                "n=" + std::to_string(n) + " scan exceeds 2/n");
    }
  }
  return make(3, "K_n: diag min 1-2/n, offdiag max 2/n, no PST", tr,
              "max deviation = " + sci(tr.worst));
}

inline CheckResult check_missing_link_pst(int n_max) {
  using namespace verify_detail;
  using std::numbers::pi;
  const auto sizes = sizes_up_to({4, 8, 12, 16}, n_max);
  Tracker tr;
  for (int n : sizes) {
    const SpectralEvolution evo(xyz_hamiltonian(complete_minus_matching(n, {{1, n}})));
    const std::string tag = "n=" + std::to_string(n);
    for (int k = 0; k <= 2; ++k) {
      const double f = evo.fidelity(1, n, pi / 4 + k * pi / 2);
      tr.expect(f >= 1.0 - 1e-9, 1.0 - f, tag + " f(1,n) k=" + std::to_string(k));
    }
    const double stay = evo.fidelity(1, 1, pi / 4);
    tr.expect(stay <= 1e-9, stay, tag + " f(1,1,pi/4)");
    const double t = pi / (2.0 * n);
    const double d_diag = std::abs(evo.fidelity(2, 2, t) - (1.0 - 2.0 / n));
    const double d_off = std::abs(evo.fidelity(2, 3, t) - 2.0 / n);
    tr.expect(d_diag <= 1e-9, d_diag, tag + " generic diag");
    tr.expect(d_off <= 1e-9, d_off, tag + " generic offdiag");
  }
  return make(4, "K_n^-: PST between 1 and n for n = 0 mod 4", tr,
              "sizes checked: " + std::to_string(sizes.size()) + ", max deviation = " + sci(tr.worst));
}

inline CheckResult check_negative_control(int n_max) {
  using namespace verify_detail;
  const auto sizes = sizes_up_to({5, 6, 7, 9, 10, 11}, n_max);
  const std::string name = "K_n^- without 4 | n: no PST between 1 and n";
  if (sizes.empty()) return skipped(5, name, "n_max < 5");
  Tracker tr;
  double highest = 0.0;
  for (int n : sizes) {
    const SpectralEvolution evo(xyz_hamiltonian(complete_minus_matching(n, {{1, n}})));
    const double peak = scan_max(evo, 1, n, 4.0 * std::numbers::pi, 10000);
    highest = std::max(highest, peak);
    tr.expect(peak < 1.0 - 1e-3, peak, "n=" + std::to_string(n) + " peak " + sci(peak));
  }
  return make(5, name, tr, "highest scanned peak = " + format_number(highest));
}

inline CheckResult check_grover_equivalence(int n_max) {
  using namespace verify_detail;
  Tracker tr;
  for (int n : range_up_to(3, 16, n_max)) {
    const auto r = kn_grover_report(n);
    const std::string tag = "n=" + std::to_string(n);
    tr.expect(r.residual <= 1e-9, r.residual, tag + " residual " + sci(r.residual));
    const double unit = std::abs(std::abs(r.phase) - 1.0);
    tr.expect(unit <= 1e-9, unit, tag + " |c| != 1");
    if (n == 5) {
      const double d = std::abs(r.phase - Complex{1.0, 0.0});
      tr.expect(d <= 1e-9, d, "n=5 phase != 1");
    }
    if (n == 4) {
      const double d = std::abs(r.phase - std::polar(1.0, std::numbers::pi / 4));
      tr.expect(d <= 1e-9, d, "n=4 phase != e^{i pi/4}");
    }
  }
  return make(6, "U_{pi/2n}(K_n) = c (I - 2J/n)", tr, "max deviation = " + sci(tr.worst));
}

inline CheckResult check_matching_pst(int n_max) {
  using namespace verify_detail;
  const std::string name = "K_8 minus matchings: PST on every deleted pair";
  if (n_max < 8) return skipped(7, name, "n_max < 8");
  Tracker tr;
  const std::vector<std::vector<std::pair<int, int>>> matchings = {
      {{1, 8}}, {{1, 8}, {3, 6}}, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}};
  for (const auto& m : matchings) {
    for (const auto& pf : verify_matching_pst(8, std::span<const std::pair<int, int>>(m), 0)) {
      tr.expect(pf.fidelity >= 1.0 - 1e-9, 1.0 - pf.fidelity,
                "pair " + std::to_string(pf.pair.first) + "," + std::to_string(pf.pair.second));
    }
  }
  return make(7, name, tr, "max infidelity = " + sci(tr.worst));
}

inline CheckResult check_propagator_agreement(int n_max) {
  using namespace verify_detail;
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> time(0.0, 2.0 * std::numbers::pi);
  Tracker tr;
  for (int n : range_up_to(3, 12, n_max)) {
    const auto h_full = xyz_hamiltonian(complete_graph(n));
    const auto h_minus = xyz_hamiltonian(complete_minus_matching(n, {{1, n}}));
    const SpectralEvolution full(h_full);
    const SpectralEvolution minus(h_minus);
    for (int s = 0; s < 50; ++s) {
      const double t = time(rng);
      const std::string tag = "n=" + std::to_string(n) + " t=" + format_number(t);
      const auto a1 = kn_propagator(n, t);
      const auto b1 = full.propagator(t).u;
      const auto c1 = matrix_exponential_series(h_full, t);
      const auto a2 = kn_minus_propagator(n, t);
      const auto b2 = minus.propagator(t).u;
      const auto c2 = matrix_exponential_series(h_minus, t);
      for (double d : {max_abs_diff(a1, b1), max_abs_diff(a1, c1), max_abs_diff(b1, c1),
                       max_abs_diff(a2, b2), max_abs_diff(a2, c2), max_abs_diff(b2, c2)})
        tr.expect(d <= 1e-8, d, tag);
    }
  }
  for (int n : range_up_to(2, 6, n_max)) {
    std::vector<Graph> graphs{complete_graph(n), random_graph(rng, n, n)};
    if (n >= 3) graphs.push_back(complete_minus_matching(n, {{1, n}}));
    for (const auto& g : graphs) {
      const SpectralEvolution evo(xyz_hamiltonian(g));
      for (int s = 0; s < 3; ++s) {
        const double t = time(rng);
        const double d = max_abs_diff(full_space_propagator_oracle(g, t), evo.propagator(t).u);
        tr.expect(d <= 1e-8, d, "full space n=" + std::to_string(n));
      }
    }
  }
  return make(8, "closed form = spectral = series = full 2^n space", tr,
              "max entry diff = " + sci(tr.worst));
}

inline CheckResult check_routing(int n_max) {
  using namespace verify_detail;
  const auto sizes = sizes_up_to({4, 8}, n_max);
  Tracker tr;
  for (int n : sizes) {
    const std::string tag = "n=" + std::to_string(n);
    const auto schedule = n == 4 ? RoutingSchedule::from_path(4, {1, 3, 2, 4})
                                 : RoutingSchedule::from_path(8, {1, 5, 2, 8});
    const auto report = simulate_route(schedule, schedule.hops.front().first);
    for (double f : report.hop_fidelities) tr.expect(f >= 1.0 - 1e-9, 1.0 - f, tag + " hop");
    for (const auto& psi : report.state_trace) {
      double norm = 0.0;
      for (auto z : psi) norm += std::norm(z);
      const double d = std::abs(std::sqrt(norm) - 1.0);
      tr.expect(d <= 1e-9, d, tag + " norm");
    }
    tr.expect(report.switch_ops == 6, 0.0, tag + " switch_ops " + std::to_string(report.switch_ops));
    tr.expect(report.final_graph == complete_graph(n), 0.0, tag + " links not restored");
    const auto count = tour_op_count(n);
    tr.expect(count.convention_count == 2 * (n - 1) && count.reference_count == 2 * n - 1 &&
                  count.discrepancy,
              0.0, tag + " tour op count");
  }
  return make(9, "routing: 3 chained PST hops, 6 switch ops", tr,
              "max deviation = " + sci(tr.worst));
}

inline CheckResult check_unitarity_and_determinism(int n_max) {
  using namespace verify_detail;
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_real_distribution<double> time(0.0, 2.0 * std::numbers::pi);
  Tracker tr;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1, std::min(16, n_max));
    const double d = unitarity_defect(propagator(xyz_hamiltonian(g), time(rng)).u);
    tr.expect(d <= 1e-9, d, "trial " + std::to_string(trial));
  }
  for (int n : range_up_to(3, 16, n_max)) {
    const double d1 = unitarity_defect(kn_propagator(n, time(rng)));
    tr.expect(d1 <= 1e-9, d1, "closed form K_n n=" + std::to_string(n));
  }
  const auto h = xyz_hamiltonian(complete_minus_matching(4, {{1, 4}}));
  const auto first = curve_csv(fidelity_curve(h, 1, 4, std::numbers::pi, 257));
  const auto second = curve_csv(fidelity_curve(h, 1, 4, std::numbers::pi, 257));
  tr.expect(first == second, 0.0, "curve output not reproducible");
  return make(10, "unitarity and deterministic output", tr,
              "max ||U'U - I|| = " + sci(tr.worst));
}

/// Runs every check with sizes capped at n_max (n_max >= 4).
inline std::vector<CheckResult> run_verification(int n_max) {
  if (n_max < 4) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 4");
  return {check_laplacian_identity(n_max),      check_spectral_correspondence(n_max),
          check_complete_graph_extrema(n_max),  check_missing_link_pst(n_max),
          check_negative_control(n_max),        check_grover_equivalence(n_max),
          check_matching_pst(n_max),            check_propagator_agreement(n_max),
          check_routing(n_max),                 check_unitarity_and_determinism(n_max)};
}

inline std::string format_verification_table(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.passed ? (r.skipped ? "SKIP" : "PASS") : "FAIL";
    out += "  [" + std::to_string(r.id) + "] " + r.name + "  (" + r.detail + ")\n";
  }
  return out;
}

}  // namespace xyznet
