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
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"

namespace xyznet {

/// Dense n x n symmetric matrix of 64-bit integers. Element access is
/// 0-indexed; vertex-facing APIs elsewhere in the library are 1-indexed.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;

  explicit IntSymMatrix(std::size_t n) : n_(n), data_(n * n, 0) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
  }

  /// Builds from row-major nested rows; rejects ragged or non-symmetric input.
  static IntSymMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntSymMatrix m(rows.size());
    for (std::size_t i = 0; i < m.n_; ++i) {
      if (rows[i].size() != m.n_)
        throw Error(ErrorCode::InvalidArgument, "matrix rows must be square");
      for (std::size_t j = 0; j < m.n_; ++j) m.data_[i * m.n_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < m.n_; ++i)
      for (std::size_t j = i + 1; j < m.n_; ++j)
        if (m(i, j) != m(j, i)) throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric");
    return m;
  }

  static IntSymMatrix identity(std::size_t n) {
    IntSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static IntSymMatrix all_ones(std::size_t n) {
    IntSymMatrix m(n);
    std::fill(m.data_.begin(), m.data_.end(), 1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, std::int64_t value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }

  std::span<const std::int64_t> row(std::size_t i) const {
    return std::span<const std::int64_t>(data_).subspan(i * n_, n_);
  }

  std::int64_t trace() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  std::int64_t max_abs() const {
    std::int64_t best = 0;
    for (auto v : data_) best = std::max(best, v < 0 ? -v : v);
    return best;
  }

  friend IntSymMatrix operator+(IntSymMatrix a, const IntSymMatrix& b) {
    a.require_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend IntSymMatrix operator-(IntSymMatrix a, const IntSymMatrix& b) {
    a.require_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend IntSymMatrix operator*(std::int64_t s, IntSymMatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  void require_same(const IntSymMatrix& other) const {
    if (n_ != other.n_) throw Error(ErrorCode::InvalidArgument, "matrix order mismatch");
  }

  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Unordered vertex pair, stored with u < v. Vertices are 1-indexed.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable once built; every
/// constructor validates endpoints and rejects loops.
class Graph {
 public:
  /// Deduplicates pairs, canonicalises each as (min, max).
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be >= 1");
    std::set<Edge> edges;
    for (auto [a, b] : pairs) {
      check_vertex(n, a);
      check_vertex(n, b);
      if (a == b)
        throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
      edges.insert(Edge{std::min(a, b), std::max(a, b)});
    }
    return Graph(n, {edges.begin(), edges.end()});
  }

  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> v(pairs);
    return from_edge_list(n, std::span<const std::pair<int, int>>(v));
  }

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Canonical, lexicographically sorted edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(int a, int b) const {
    check_vertex(n_, a);
    check_vertex(n_, b);
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  int degree(int vertex) const {
    check_vertex(n_, vertex);
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [vertex](const Edge& e) {
      return e.u == vertex || e.v == vertex;
    }));
  }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
      ++d[static_cast<std::size_t>(e.u - 1)];
      ++d[static_cast<std::size_t>(e.v - 1)];
    }
    return d;
  }

  /// Copy of this graph with edge {a,b} removed (no-op if absent).
  Graph without_edge(int a, int b) const {
    check_vertex(n_, a);
    check_vertex(n_, b);
    Edge e{std::min(a, b), std::max(a, b)};
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept),
                 [&](const Edge& x) { return x != e; });
    return Graph(n_, std::move(kept));
  }

  /// Copy of this graph with edge {a,b} added (no-op if present).
  Graph with_edge(int a, int b) const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size() + 1);
    for (const auto& e : edges_) pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(a, b);
    return from_edge_list(n_, std::span<const std::pair<int, int>>(pairs));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static void check_vertex(int n, int vertex) {
    if (vertex < 1 || vertex > n)
      throw Error(ErrorCode::InvalidVertex,
                  "vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(n));
  }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 1;
  std::vector<Edge> edges_;
};

inline Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
}

inline Graph empty_graph(int n) {
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>{});
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u < n; ++u) pairs.emplace_back(u, u + 1);
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u < n; ++u) pairs.emplace_back(u, u + 1);
  pairs.emplace_back(n, 1);
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
}

/// Throws NotVertexDisjoint if two pairs share an endpoint, InvalidVertex or
/// SelfLoop for malformed pairs.
inline void require_vertex_disjoint(int n, std::span<const std::pair<int, int>> pairs) {
  std::set<int> used;
  for (auto [a, b] : pairs) {
    Graph::check_vertex(n, a);
    Graph::check_vertex(n, b);
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    for (int x : {a, b})
      if (!used.insert(x).second)
        throw Error(ErrorCode::NotVertexDisjoint,
                    "vertex " + std::to_string(x) + " appears in more than one deleted pair");
  }
}

/// K_n with a set of vertex-disjoint edges removed. One pair gives K_n^-;
/// n/2 pairs remove a perfect matching.
inline Graph complete_minus_matching(int n, std::span<const std::pair<int, int>> deleted) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be >= 1");
  require_vertex_disjoint(n, deleted);
  Graph g = complete_graph(n);
  for (auto [a, b] : deleted) g = g.without_edge(a, b);
  return g;
}

inline Graph complete_minus_matching(int n, std::initializer_list<std::pair<int, int>> deleted) {
  std::vector<std::pair<int, int>> v(deleted);
  return complete_minus_matching(n, std::span<const std::pair<int, int>>(v));
}

inline IntSymMatrix adjacency_matrix(const Graph& g) {
  IntSymMatrix a(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges())
    a.set(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1), 1);
  return a;
}

inline IntSymMatrix degree_matrix(const Graph& g) {
  IntSymMatrix d(static_cast<std::size_t>(g.order()));
  auto deg = g.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) d.set(i, i, deg[i]);
  return d;
}

/// L(G) = Delta(G) - A(G).
inline IntSymMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

/// Single-excitation block of the XYZ network Hamiltonian: 2 on edges, 0 on
/// non-edges, m - 2 d(i) on the diagonal. Built entrywise, so the identity
/// H = m I - 2 L is a checkable property rather than the definition.
inline IntSymMatrix xyz_hamiltonian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  IntSymMatrix h(n);
  auto deg = g.degrees();
  for (std::size_t i = 0; i < n; ++i) h.set(i, i, m - 2 * deg[i]);
  for (const auto& e : g.edges())
    h.set(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1), 2);
  return h;
}

// Edge-list text format:
//   n <int>
//   <u> <v>
// '#' comments run to end of line, blank lines are ignored.

inline Graph parse_edge_list(std::istream& in) {
  int n = 0;
  bool have_header = false;
  std::vector<std::pair<int, int>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + what);
    };
    std::string extra;
    if (!have_header) {
      if (first != "n" || !(ls >> n) || (ls >> extra)) fail("expected header 'n <int>'");
      if (n < 1) fail("vertex count must be >= 1");
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra)) fail("expected '<u> <v>'");
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n) fail("vertex outside 1.." + std::to_string(n));
    pairs.emplace_back(u, v);
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing header 'n <int>'");
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>(pairs));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

/// Canonical serialisation; identical graphs give identical bytes.
inline std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace xyznet
