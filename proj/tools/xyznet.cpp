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

// xyznet command-line front end. Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xyznet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xyznet::Error(xyznet::ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw xyznet::Error(xyznet::ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
}

std::pair<int, int> parse_vertex_pair(const std::string& text) {
  return xyznet::detail::parse_pair(text, ',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-excitation dynamics on XYZ spin networks"};
  app.require_subcommand(1);

  std::string graph_spec;
  std::string format = "json";
  std::string pair_text;
  std::string out_path;
  double t_max = std::numbers::pi;
  int steps = 1001;
  double epsilon = xyznet::kDefaultPstEpsilon;
  int grover_n = 0;
  int grover_k = 0;
  std::string schedule_path;
  int initial_vertex = 0;
  double oracle_t = 0.3;
  int n_max = 16;

  auto* ham = app.add_subcommand("hamiltonian", "Print A, L and H(G) with integer entries");
  ham->add_option("graph", graph_spec, "Graph spec, e.g. complete:4 or complete-minus:8:1-8")
      ->required();
  ham->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* curve = app.add_subcommand("curve", "Sample f(i,j,t) on a uniform grid as CSV");
  curve->add_option("graph", graph_spec)->required();
  curve->add_option("--pair", pair_text, "Vertex pair i,j")->required();
  curve->add_option("--tmax", t_max, "Upper end of the time window");
  curve->add_option("--steps", steps, "Number of grid points, endpoints included");
  curve->add_option("--out", out_path, "Output file (default stdout)");

  double pst_t_max = xyznet::kDefaultPstWindow;
  int pst_steps = 0;
  auto* pst = app.add_subcommand("pst", "Search for perfect state transfer times");
  pst->add_option("graph", graph_spec)->required();
  pst->add_option("--pair", pair_text, "Vertex pair i,j")->required();
  pst->add_option("--tmax", pst_t_max, "Scan window [0, tmax]");
  pst->add_option("--steps", pst_steps, "Grid points (default 2048 per pi)");
  pst->add_option("--epsilon", epsilon, "PST threshold: report f >= 1 - epsilon");

  auto* grover = app.add_subcommand("grover", "Decompose U_t(K_n) at t = pi/(2n) + k pi/n");
  grover->add_option("n", grover_n, "Order of the complete graph")->required();
  grover->add_option("--k", grover_k, "Time-family index");

  auto* route = app.add_subcommand("route", "Simulate a link-switching routing schedule");
  route->add_option("schedule", schedule_path, "JSON file {\"n\":..,\"k\":..,\"path\":[..]}")
      ->required();
  route->add_option("--initial", initial_vertex, "Initial vertex (default: first path vertex)");

  auto* oracle = app.add_subcommand("oracle", "Cross-check against the full 2^n-space evolution");
  oracle->add_option("graph", graph_spec)->required();
  oracle->add_option("--t", oracle_t, "Evolution time");

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--n-max", n_max, "Largest network order to check (>= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ham) {
      const auto g = xyznet::parse_graph_spec(graph_spec);
      write_output(format == "csv" ? xyznet::hamiltonian_csv(g)
                                   : xyznet::hamiltonian_json(g).dump(2) + "\n",
                   "");
    } else if (*curve) {
      const auto g = xyznet::parse_graph_spec(graph_spec);
      const auto [i, j] = parse_vertex_pair(pair_text);
      const auto samples = xyznet::fidelity_curve(xyznet::xyz_hamiltonian(g), i, j, t_max, steps);
      write_output(xyznet::curve_csv(samples), out_path);
    } else if (*pst) {
      const auto g = xyznet::parse_graph_spec(graph_spec);
      const auto [i, j] = parse_vertex_pair(pair_text);
      const int grid = pst_steps > 0 ? pst_steps : xyznet::default_pst_grid_steps(pst_t_max);
      const auto finding =
          xyznet::pst_scan(xyznet::xyz_hamiltonian(g), i, j, pst_t_max, grid, epsilon);
      write_output(xyznet::pst_json(finding).dump(2) + "\n", "");
    } else if (*grover) {
      const auto report = xyznet::kn_grover_report(grover_n, grover_k);
      const auto match = grover_k == 0
                             ? xyznet::compare_with_tabulated_phase(grover_n, report.phase)
                             : xyznet::PhaseMatch::NotTabulated;
      if (match == xyznet::PhaseMatch::UpToSignOrConjugate || match == xyznet::PhaseMatch::Mismatch)
        std::cerr << "warning: observed phase differs from the tabulated value ("
                  << xyznet::to_string(match) << ")\n";
      write_output(xyznet::grover_json(report, match).dump(2) + "\n", "");
    } else if (*route) {
      const auto schedule = xyznet::parse_schedule_json(read_file(schedule_path));
      const int start = initial_vertex > 0 ? initial_vertex
                        : schedule.hops.empty() ? 1
                                                : schedule.hops.front().first;
      const auto report = xyznet::simulate_route(schedule, start);
      write_output(xyznet::routing_json(schedule, report).dump(2) + "\n", "");
    } else if (*oracle) {
      const auto g = xyznet::parse_graph_spec(graph_spec);
      const auto block = xyznet::full_space_single_excitation_block(g);
      const auto full = xyznet::full_space_propagator_oracle(g, oracle_t);
      const auto reduced = xyznet::propagator(xyznet::xyz_hamiltonian(g), oracle_t).u;
      const double diff = xyznet::max_abs_diff(full, reduced);
      const xyznet::Json doc{{"schema", xyznet::kSchemaVersion},
                             {"graph", xyznet::to_json(g)},
                             {"t", xyznet::rounded(oracle_t)},
                             {"hamiltonian_block_matches", block == xyznet::xyz_hamiltonian(g)},
                             {"max_abs_diff", xyznet::rounded(diff)},
                             {"agrees", diff <= 1e-8},
                             {"propagator", xyznet::to_json(full)}};
      write_output(doc.dump(2) + "\n", "");
      if (diff > 1e-8) return kExitFailed;
    } else if (*verify) {
      const auto results = xyznet::run_verification(n_max);
      std::cout << xyznet::format_verification_table(results);
      bool failed = false;
      for (const auto& r : results)
        if (!r.passed) {
          std::cerr << "failed: [" << r.id << "] " << r.name << "\n";
          failed = true;
        }
      if (failed) return kExitFailed;
    }
  } catch (const xyznet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
