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
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"
#include "xyznet/graph.hpp"
#include "xyznet/linalg.hpp"

namespace xyznet {

/// U_t = exp(-i H t) at a fixed time. Time is dimensionless (unit coupling).
struct Propagator {
  ComplexMatrix u;
  double t = 0.0;
};

struct FidelitySample {
  double t = 0.0;
  double f = 0.0;
};

struct FidelityCurve {
  std::pair<int, int> pair;
  std::vector<FidelitySample> samples;
};

/// Time evolution under a fixed Hamiltonian, diagonalised once. All
/// propagators and fidelities are assembled from the cached eigenpairs, so
/// evaluating many times costs O(n^2) each instead of a fresh O(n^3) solve.
///
/// Degenerate eigenspaces get whatever basis the solver produced; only
/// full-matrix products and sums over eigenpairs are formed, which are basis
/// independent.
class SpectralEvolution {
 public:
  explicit SpectralEvolution(const IntSymMatrix& h, double tol = kDefaultEigenTolerance)
      : n_(static_cast<int>(h.size())), eig_(symmetric_eigendecomposition(h, tol)) {}

  int order() const noexcept { return n_; }
  const EigenDecomposition& eigen() const noexcept { return eig_; }

  Propagator propagator(double t) const {
    check_time(t);
    const auto n = static_cast<std::size_t>(n_);
    const auto phases = phase_factors(t);
    ComplexMatrix u(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        Complex s{};
        for (std::size_t k = 0; k < n; ++k)
          s += eig_.vectors(r, k) * eig_.vectors(c, k) * phases[k];
        u(r, c) = s;
        u(c, r) = s;
      }
    return {std::move(u), t};
  }

  /// <to| U_t |from>, vertices 1-indexed.
  Complex amplitude(int from, int to, double t) const {
    Graph::check_vertex(n_, from);
    Graph::check_vertex(n_, to);
    check_time(t);
    const auto a = static_cast<std::size_t>(from - 1);
    const auto b = static_cast<std::size_t>(to - 1);
    Complex s{};
    for (std::size_t k = 0; k < eig_.values.size(); ++k)
      s += eig_.vectors(a, k) * eig_.vectors(b, k) * std::polar(1.0, -eig_.values[k] * t);
    return s;
  }

  /// f(i,j,t) = |<j|U_t|i>|. H is real symmetric, so f(i,j,t) = f(j,i,t).
  double fidelity(int i, int j, double t) const { return std::abs(amplitude(i, j, t)); }

  /// U_t |from>, i.e. column `from` of the propagator.
  std::vector<Complex> evolve_basis_state(int from, double t) const {
    Graph::check_vertex(n_, from);
    check_time(t);
    const auto n = static_cast<std::size_t>(n_);
    const auto a = static_cast<std::size_t>(from - 1);
    const auto phases = phase_factors(t);
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += eig_.vectors(r, k) * eig_.vectors(a, k) * phases[k];
      out[r] = s;
    }
    return out;
  }

  /// U_t psi for an arbitrary state, via V diag(phase) V^T psi.
  std::vector<Complex> evolve(std::span<const Complex> psi, double t) const {
    const auto n = static_cast<std::size_t>(n_);
    if (psi.size() != n) throw Error(ErrorCode::InvalidArgument, "state dimension mismatch");
    check_time(t);
    const auto phases = phase_factors(t);
    std::vector<Complex> coeff(n);
    for (std::size_t k = 0; k < n; ++k) {
      Complex s{};
      for (std::size_t r = 0; r < n; ++r) s += eig_.vectors(r, k) * psi[r];
      coeff[k] = s * phases[k];
    }
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += eig_.vectors(r, k) * coeff[k];
      out[r] = s;
    }
    return out;
  }

  /// sum_{v != to} |<v|U_t|from>|^2, which equals 1 - f(from,to,t)^2 but is
  /// formed without cancellation, so it stays accurate right at a PST peak.
  double leakage(int from, int to, double t) const {
    Graph::check_vertex(n_, to);
    const auto column = evolve_basis_state(from, t);
    double s = 0.0;
    for (std::size_t r = 0; r < column.size(); ++r)
      if (static_cast<int>(r) != to - 1) s += std::norm(column[r]);
    return s;
  }

  /// Uniform grid of `steps` points on [0, t_max], endpoints included.
  FidelityCurve fidelity_curve(int i, int j, double t_max, int steps) const {
    Graph::check_vertex(n_, i);
    Graph::check_vertex(n_, j);
    if (steps < 2) throw Error(ErrorCode::InvalidArgument, "fidelity curve needs at least 2 steps");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
      throw Error(ErrorCode::InvalidArgument, "t_max must be positive and finite");
    FidelityCurve curve{{i, j}, {}};
    curve.samples.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
      const double t = (s == steps - 1) ? t_max : t_max * s / (steps - 1);
      curve.samples.push_back({t, fidelity(i, j, t)});
    }
    return curve;
  }

 private:
  static void check_time(double t) {
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
  }

  std::vector<Complex> phase_factors(double t) const {
    std::vector<Complex> p(eig_.values.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::polar(1.0, -eig_.values[k] * t);
    return p;
  }

  int n_;
  EigenDecomposition eig_;
};

inline Propagator propagator(const IntSymMatrix& h, double t) {
  return SpectralEvolution(h).propagator(t);
}

inline double fidelity(const IntSymMatrix& h, int i, int j, double t) {
  return SpectralEvolution(h).fidelity(i, j, t);
}

inline FidelityCurve fidelity_curve(const IntSymMatrix& h, int i, int j, double t_max, int steps) {
  return SpectralEvolution(h).fidelity_curve(i, j, t_max, steps);
}

inline constexpr int kFullSpaceMaxOrder = 8;

/// Computational-basis index of the single-excitation state |j>: qubit 1 is
/// the most significant bit, so |j> has bit (n - j) set.
inline std::size_t single_excitation_index(int n, int j) {
  return std::size_t{1} << static_cast<unsigned>(n - j);
}

/// Full 2^n x 2^n Hamiltonian sum over edges of (X_u X_v + Y_u Y_v + Z_u Z_v).
/// Per edge the operator acts on the two-qubit pair as 2 SWAP - I: aligned
/// spins pick up +1, anti-aligned spins pick up -1 plus an amplitude-2 hop.
inline IntSymMatrix full_space_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n > kFullSpaceMaxOrder)
    throw Error(ErrorCode::TooLarge, "full-space Hamiltonian limited to n <= " +
                                         std::to_string(kFullSpaceMaxOrder));
  const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n);
  IntSymMatrix h(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::int64_t diag = 0;
    for (const auto& e : g.edges()) {
      const auto bu = single_excitation_index(n, e.u);
      const auto bv = single_excitation_index(n, e.v);
      const bool su = (b & bu) != 0;
      const bool sv = (b & bv) != 0;
      if (su == sv) {
        diag += 1;
      } else {
        diag -= 1;
        const std::size_t flipped = b ^ bu ^ bv;
        if (b < flipped) h.set(b, flipped, 2);
      }
    }
    h.set(b, b, diag);
  }
  return h;
}

/// Exponentiates the full-space Hamiltonian with the series oracle and returns
/// the n x n block on {|1>, ..., |n>}. Must match the single-excitation
/// propagator of xyz_hamiltonian(g).
inline ComplexMatrix full_space_propagator_oracle(const Graph& g, double t) {
  const int n = g.order();
  const auto full = matrix_exponential_series(full_space_hamiltonian(g), t);
  ComplexMatrix block(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      block(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) =
          full(single_excitation_index(n, r), single_excitation_index(n, c));
  return block;
}

/// Restriction of the full-space Hamiltonian to the single-excitation sector.
inline IntSymMatrix full_space_single_excitation_block(const Graph& g) {
  const int n = g.order();
  const auto full = full_space_hamiltonian(g);
  IntSymMatrix block(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c)
      block.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1),
                full(single_excitation_index(n, r), single_excitation_index(n, c)));
  return block;
}

}  // namespace xyznet
