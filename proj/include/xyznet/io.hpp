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

#include <array>
#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "xyznet/closed_form.hpp"
#include "xyznet/error.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"
#include "xyznet/pst.hpp"
#include "xyznet/routing.hpp"

namespace xyznet {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kOutputDigits = 12;

/// 12 significant digits, '.' decimal point regardless of locale.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, kOutputDigits);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format number");
  return std::string(buf.data(), ptr);
}

/// The double nearest the 12-digit rendering, so JSON dumps carry the same
/// precision as CSV output.
inline double rounded(double x) {
  const auto text = format_number(x);
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

inline Json to_json(const IntSymMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (auto v : m.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Json to_json(Complex z) { return Json{rounded(z.real()), rounded(z.imag())}; }

inline Json to_json(const ComplexMatrix& u) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < u.size(); ++j) row.push_back(to_json(u(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json hamiltonian_json(const Graph& g) {
  return Json{{"schema", kSchemaVersion},
              {"graph", to_json(g)},
              {"m", g.edge_count()},
              {"adjacency", to_json(adjacency_matrix(g))},
              {"laplacian", to_json(laplacian(g))},
              {"hamiltonian", to_json(xyz_hamiltonian(g))}};
}

/// Three blocks (adjacency, laplacian, hamiltonian), each a name line followed
/// by n comma-separated rows, separated by blank lines.
inline std::string hamiltonian_csv(const Graph& g) {
  std::string out;
  auto block = [&](const char* name, const IntSymMatrix& m) {
    if (!out.empty()) out += "\n";
    out += name;
    out += "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(m(i, j));
      }
      out += "\n";
    }
  };
  block("adjacency", adjacency_matrix(g));
  block("laplacian", laplacian(g));
  block("hamiltonian", xyz_hamiltonian(g));
  return out;
}

inline std::string curve_csv(const FidelityCurve& curve) {
  std::string out = "t,fidelity\n";
  for (const auto& s : curve.samples) out += format_number(s.t) + "," + format_number(s.f) + "\n";
  return out;
}

inline Json pst_json(const PstFinding& finding) {
  Json times = Json::array();
  Json peaks = Json::array();
  for (double t : finding.times) times.push_back(rounded(t));
  for (double f : finding.peak_fidelities) peaks.push_back(rounded(f));
  return Json{{"schema", kSchemaVersion},
              {"pair", {finding.pair.first, finding.pair.second}},
              {"epsilon", finding.epsilon},
              {"times", std::move(times)},
              {"peak_fidelities", std::move(peaks)}};
}

inline Json grover_json(const GroverReport& r, PhaseMatch match) {
  return Json{{"schema", kSchemaVersion},
              {"n", r.n},
              {"t", rounded(r.t)},
              {"phase", to_json(r.phase)},
              {"residual", rounded(r.residual)},
              {"is_grover", r.is_grover},
              {"tabulated_phase_match", std::string(to_string(match))}};
}

// Routing schedule: { "n": int, "k": int, "path": [v1, ..., vm] }, k optional.

inline RoutingSchedule parse_schedule_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("schedule JSON: ") + e.what());
  }
  auto require_int = [&](const char* key) -> int {
    if (!doc.contains(key) || !doc[key].is_number_integer())
      throw Error(ErrorCode::Parse, std::string("schedule JSON: '") + key + "' must be an integer");
    return doc[key].get<int>();
  };
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "schedule JSON: expected an object");
  const int n = require_int("n");
  const int k = doc.contains("k") ? require_int("k") : 0;
  if (!doc.contains("path") || !doc["path"].is_array())
    throw Error(ErrorCode::Parse, "schedule JSON: 'path' must be an array");
  std::vector<int> path;
  for (const auto& v : doc["path"]) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::Parse, "schedule JSON: path entries must be integers");
    path.push_back(v.get<int>());
  }
  if (path.empty()) throw Error(ErrorCode::Parse, "schedule JSON: 'path' is empty");
  return RoutingSchedule::from_path(n, std::span<const int>(path), k);
}

inline Json routing_json(const RoutingSchedule& schedule, const RoutingReport& report) {
  Json hops = Json::array();
  for (std::size_t h = 0; h < schedule.hops.size(); ++h) {
    Json state = Json::array();
    for (auto z : report.state_trace[h]) state.push_back(to_json(z));
    hops.push_back({{"source", schedule.hops[h].first},
                    {"target", schedule.hops[h].second},
                    {"fidelity", rounded(report.hop_fidelities[h])},
                    {"state", std::move(state)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"n", schedule.n},
              {"k", schedule.k},
              {"hop_time", rounded(schedule.hop_time())},
              {"hops", std::move(hops)},
              {"switch_ops", report.switch_ops},
              {"total_time", rounded(report.total_time)},
              {"links_restored", report.final_graph == complete_graph(schedule.n)}};
}

}  // namespace xyznet
