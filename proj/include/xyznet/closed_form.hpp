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
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"
#include "xyznet/linalg.hpp"

namespace xyznet {

// Analytic propagator entries for K_n and K_n^- (deleted edge pinned to
// {1, n}; other deletions reduce to this one by relabelling vertices).

namespace spectrum {

/// Simple eigenvalue of H(K_n), eigenvector the all-ones vector: C(n,2).
constexpr std::int64_t kn_top(std::int64_t n) { return n * (n - 1) / 2; }
/// (n-1)-fold eigenvalue of H(K_n): n(n-5)/2.
constexpr std::int64_t kn_bulk(std::int64_t n) { return n * (n - 5) / 2; }

/// H(K_n^-): all-ones eigenvalue C(n,2) - 1.
constexpr std::int64_t kn_minus_top(std::int64_t n) { return kn_top(n) - 1; }
/// H(K_n^-): eigenvalue on |1> - |n>, C(n,2) - 2n + 3.
constexpr std::int64_t kn_minus_pair(std::int64_t n) { return kn_top(n) - 2 * n + 3; }
/// H(K_n^-): (n-2)-fold eigenvalue n(n-5)/2 - 1.
constexpr std::int64_t kn_minus_bulk(std::int64_t n) { return kn_bulk(n) - 1; }

}  // namespace spectrum

namespace detail {
inline Complex phase(std::int64_t eigenvalue, double t) {
  return std::polar(1.0, -static_cast<double>(eigenvalue) * t);
}
}  // namespace detail

/// [U_t(K_n)]_{ij}, vertices 1-indexed.
inline Complex kn_propagator_entry(int n, double t, int i, int j) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  Graph::check_vertex(n, i);
  Graph::check_vertex(n, j);
  const double inv = 1.0 / n;
  const Complex top = detail::phase(spectrum::kn_top(n), t);
  const Complex bulk = detail::phase(spectrum::kn_bulk(n), t);
  if (i == j) return inv * top + (1.0 - inv) * bulk;
  return inv * (top - bulk);
}

/// [U_t(K_n^-)]_{ij} with the missing edge {1, n}. Valid for every n >= 3;
/// perfect transfer additionally needs n divisible by 4.
inline Complex kn_minus_propagator_entry(int n, double t, int i, int j) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "K_n^- closed form needs n >= 3");
  Graph::check_vertex(n, i);
  Graph::check_vertex(n, j);
  const double inv = 1.0 / n;
  const double half = 0.5 * n;
  const Complex top = detail::phase(spectrum::kn_minus_top(n), t);
  const Complex pair = detail::phase(spectrum::kn_minus_pair(n), t);
  const Complex bulk = detail::phase(spectrum::kn_minus_bulk(n), t);
  const auto special = [n](int v) { return v == 1 || v == n; };

  if (i == j) {
    if (special(i)) return inv * (half * pair + top + (half - 1.0) * bulk);
    return inv * (top + (n - 1.0) * bulk);
  }
  if (special(i) && special(j)) return inv * (top - half * pair + (half - 1.0) * bulk);
  return inv * (top - bulk);
}

inline ComplexMatrix kn_propagator(int n, double t) {
  ComplexMatrix u(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          kn_propagator_entry(n, t, i, j);
  return u;
}

inline ComplexMatrix kn_minus_propagator(int n, double t) {
  ComplexMatrix u(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          kn_minus_propagator_entry(n, t, i, j);
  return u;
}

// ---------------------------------------------------------------------------
// Extremal fidelities.

enum class GraphFamily { Complete, CompleteMinus };

/// "Special" vertices are the endpoints {1, n} of the missing edge.
enum class EntryCase { DiagSpecial, DiagGeneric, OffdiagSpecial, OffdiagGeneric };

constexpr std::string_view to_string(GraphFamily f) {
  return f == GraphFamily::Complete ? "K_n" : "K_n_minus";
}

constexpr std::string_view to_string(EntryCase c) {
  switch (c) {
    case EntryCase::DiagSpecial: return "diag_special";
    case EntryCase::DiagGeneric: return "diag_generic";
    case EntryCase::OffdiagSpecial: return "offdiag_special";
    case EntryCase::OffdiagGeneric: return "offdiag_generic";
  }
  return "unknown";
}

/// Times offset + k * period, k = 0, 1, 2, ...
struct TimeFamily {
  double offset = 0.0;
  double period = 0.0;

  double at(int k) const { return offset + k * period; }
};

struct ExtremalReport {
  GraphFamily family = GraphFamily::Complete;
  int n = 0;
  EntryCase entry_case = EntryCase::DiagGeneric;
  std::pair<int, int> witness;  // a vertex pair in this case
  double min_value = 0.0;
  TimeFamily min_times;
  double max_value = 0.0;
  TimeFamily max_times;
};

inline std::vector<ExtremalReport> kn_extrema(int n) {
  if (n < 3) throw Error(ErrorCode::TrivialCase, "K_n extrema are trivial for n < 3");
  using std::numbers::pi;
  const double dn = n;
  const TimeFamily half_step{pi / (2 * dn), pi / dn};
  const TimeFamily full_step{pi / dn, pi / dn};
  return {
      {GraphFamily::Complete, n, EntryCase::DiagGeneric, {1, 1}, 1.0 - 2.0 / dn, half_step, 1.0,
       full_step},
      {GraphFamily::Complete, n, EntryCase::OffdiagGeneric, {1, 2}, 0.0, full_step, 2.0 / dn,
       half_step},
  };
}

inline std::vector<ExtremalReport> kn_minus_extrema(int n) {
  if (n < 4 || n % 4 != 0)
    throw Error(ErrorCode::UnsupportedOrder,
                "K_n^- extrema require n divisible by 4, got " + std::to_string(n));
  using std::numbers::pi;
  const double dn = n;
  const TimeFamily quarter{pi / 4, pi / 2};
  const TimeFamily half_turn{pi / 2, pi / 2};
  const TimeFamily half_step{pi / (2 * dn), pi / dn};
  const TimeFamily full_step{pi / dn, pi / dn};
  return {
      {GraphFamily::CompleteMinus, n, EntryCase::DiagSpecial, {1, 1}, 0.0, quarter, 1.0,
       half_turn},
      {GraphFamily::CompleteMinus, n, EntryCase::DiagGeneric, {2, 2}, 1.0 - 2.0 / dn, half_step,
       1.0, full_step},
      {GraphFamily::CompleteMinus, n, EntryCase::OffdiagSpecial, {1, n}, 0.0, half_turn, 1.0,
       quarter},
      {GraphFamily::CompleteMinus, n, EntryCase::OffdiagGeneric, {2, 3}, 0.0, full_step, 2.0 / dn,
       half_step},
  };
}

/// |closed-form entry| for the report's witness pair.
inline double closed_form_fidelity(const ExtremalReport& r, double t) {
  const auto [i, j] = r.witness;
  return std::abs(r.family == GraphFamily::Complete ? kn_propagator_entry(r.n, t, i, j)
                                                    : kn_minus_propagator_entry(r.n, t, i, j));
}

// ---------------------------------------------------------------------------
// Grover operator.

inline RealMatrix grover_operator(std::size_t n) {
  RealMatrix g(n);
  const double off = -2.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = (i == j ? 1.0 : 0.0) + off;
  return g;
}

struct GroverReport {
  int n = 0;
  double t = 0.0;
  Complex phase{1.0, 0.0};
  double residual = 0.0;
  bool is_grover = false;  // residual <= tolerance
};

/// Best unit scalar c with U ~ c (I - (2/n) J): c is the normalised
/// projection <G,U>/<G,G>. residual = ||U - c G||_max.
inline GroverReport grover_decomposition(const ComplexMatrix& u, double tol = 1e-9,
                                         double t = 0.0) {
  const std::size_t n = u.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  const RealMatrix g = grover_operator(n);
  Complex inner{};
  double gg = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inner += g(i, j) * u(i, j);
      gg += g(i, j) * g(i, j);
    }
  Complex c = inner / gg;
  c = std::abs(c) > 1e-300 ? c / std::abs(c) : Complex{1.0, 0.0};

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      residual = std::max(residual, std::abs(u(i, j) - c * g(i, j)));
  return {static_cast<int>(n), t, c, residual, residual <= tol};
}

/// Decomposes U_t(K_n) at t = pi/(2n) + k pi/n, using the spectral path.
inline GroverReport kn_grover_report(int n, int k = 0, double tol = 1e-9) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const double t = std::numbers::pi / (2.0 * n) + k * std::numbers::pi / n;
  const auto u = SpectralEvolution(xyz_hamiltonian(complete_graph(n))).propagator(t).u;
  return grover_decomposition(u, tol, t);
}

/// Overall phase listed for U_{pi/(2n)}(K_n) by n mod 4. For n = 4k - 1 the
/// printed entry is not of the form phase * (I - 2J/n), so nothing is
/// returned and callers record the observed phase only.
inline std::optional<Complex> tabulated_grover_phase(int n) {
  const Complex sqrt_i = std::polar(1.0, std::numbers::pi / 4);
  switch (n % 4) {
    case 1: return Complex{1.0, 0.0};
    case 0: return ((n / 4) % 2 == 0) ? -sqrt_i : sqrt_i;
    case 2: return std::conj(((n / 4) % 2 == 0) ? -sqrt_i : sqrt_i);
    default: return std::nullopt;
  }
}

enum class PhaseMatch { Exact, UpToSignOrConjugate, Mismatch, NotTabulated };

constexpr std::string_view to_string(PhaseMatch m) {
  switch (m) {
    case PhaseMatch::Exact: return "exact";
    case PhaseMatch::UpToSignOrConjugate: return "up-to-sign-or-conjugate";
    case PhaseMatch::Mismatch: return "mismatch";
    case PhaseMatch::NotTabulated: return "not-tabulated";
  }
  return "unknown";
}

inline PhaseMatch compare_with_tabulated_phase(int n, Complex observed, double tol = 1e-9) {
  const auto expected = tabulated_grover_phase(n);
  if (!expected) return PhaseMatch::NotTabulated;
  if (std::abs(observed - *expected) <= tol) return PhaseMatch::Exact;
  for (Complex alt : {-*expected, std::conj(*expected), -std::conj(*expected)})
    if (std::abs(observed - alt) <= tol) return PhaseMatch::UpToSignOrConjugate;
  return PhaseMatch::Mismatch;
}

}  // namespace xyznet
