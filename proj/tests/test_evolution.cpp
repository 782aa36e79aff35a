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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "xyznet/evolution.hpp"
#include "xyznet/graph.hpp"

using namespace xyznet;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

TEST_CASE("propagator at t = 0 is the identity", "[evolution]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = xyz_hamiltonian(testing::random_graph(rng, 1, 10));
    CHECK(max_abs_diff(propagator(h, 0.0).u, ComplexMatrix::identity(h.size())) <= 1e-12);
  }
}

TEST_CASE("K_4 returns every excitation home at t = pi/4", "[evolution]") {
  const auto p = propagator(xyz_hamiltonian(complete_graph(4)), pi / 4);
  CHECK(p.t == pi / 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(std::abs(p.u(i, i)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("spectral propagator agrees with the series oracle", "[evolution]") {
  const auto h = xyz_hamiltonian(complete_graph(4));
  CHECK(max_abs_diff(propagator(h, 0.7).u, matrix_exponential_series(h, 0.7)) <= 1e-8);
}

TEST_CASE("fidelity values", "[evolution]") {
  const auto k4 = xyz_hamiltonian(complete_graph(4));
  const auto k4m = xyz_hamiltonian(complete_minus_matching(4, {{1, 4}}));
  const auto k5m = xyz_hamiltonian(complete_minus_matching(5, {{1, 5}}));

  CHECK_THAT(fidelity(k4, 3, 3, 0.0), WithinAbs(1.0, 1e-12));
  CHECK_THAT(fidelity(k4, 1, 2, pi / 8), WithinAbs(0.5, 1e-12));
  CHECK_THAT(fidelity(k4m, 1, 4, pi / 4), WithinAbs(1.0, 1e-12));
  // sqrt(17)/5, from an independent expm evaluation.
  CHECK_THAT(fidelity(k5m, 1, 5, pi / 4), WithinAbs(0.824621125123532, 1e-12));
  CHECK_THAT(std::abs(matrix_exponential_series(k5m, pi / 4)(4, 0)),
             WithinAbs(0.824621125123532, 1e-12));

  CHECK_THROWS_MATCHES(fidelity(k4, 0, 1, 1.0), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::InvalidVertex; }));
  CHECK_THROWS_AS(fidelity(k4, 1, 5, 1.0), Error);
}

TEST_CASE("fidelity is symmetric in its vertices", "[evolution][property]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(rng, 2, 12);
    const SpectralEvolution evo(xyz_hamiltonian(g));
    std::uniform_int_distribution<int> vertex(1, g.order());
    const int i = vertex(rng), j = vertex(rng);
    const double t = time(rng);
    CHECK(std::abs(evo.fidelity(i, j, t) - evo.fidelity(j, i, t)) <= 1e-12);
  }
}

TEST_CASE("propagators are unitary with unit columns", "[evolution][property]") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> time(0.0, 2.0 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, 1, 16);
    const auto u = propagator(xyz_hamiltonian(g), time(rng)).u;
    CHECK(unitarity_defect(u) <= 1e-9);
    for (std::size_t c = 0; c < u.size(); ++c) {
      double norm = 0.0;
      for (std::size_t r = 0; r < u.size(); ++r) norm += std::norm(u(r, c));
      CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("evolve and leakage are consistent with the propagator", "[evolution]") {
  const auto h = xyz_hamiltonian(complete_minus_matching(8, {{1, 8}, {3, 6}}));
  const SpectralEvolution evo(h);
  const double t = 0.91;
  const auto u = evo.propagator(t).u;
  std::vector<Complex> psi(8);
  psi[2] = Complex(0.6, 0.0);
  psi[5] = Complex(0.0, 0.8);
  const auto out = evo.evolve(psi, t);
  const auto expected = u * std::span<const Complex>(psi);
  for (std::size_t r = 0; r < 8; ++r) CHECK(std::abs(out[r] - expected[r]) <= 1e-12);

  const auto column = evo.evolve_basis_state(3, t);
  for (std::size_t r = 0; r < 8; ++r) CHECK(std::abs(column[r] - u(r, 2)) <= 1e-12);
  const double f = evo.fidelity(3, 6, t);
  CHECK_THAT(evo.leakage(3, 6, t), WithinAbs(1.0 - f * f, 1e-12));
}

TEST_CASE("fidelity curves", "[evolution]") {
  const auto k4 = xyz_hamiltonian(complete_graph(4));
  auto curve = fidelity_curve(k4, 1, 1, pi, 5);
  REQUIRE(curve.samples.size() == 5);
  CHECK(curve.samples.front().t == 0.0);
  CHECK(curve.samples.back().t == pi);
  CHECK_THAT(curve.samples.front().f, WithinAbs(1.0, 1e-12));
  CHECK_THAT(curve.samples.back().f, WithinAbs(1.0, 1e-9));
  for (std::size_t k = 1; k < curve.samples.size(); ++k)
    CHECK(curve.samples[k].t > curve.samples[k - 1].t);

  curve = fidelity_curve(xyz_hamiltonian(complete_minus_matching(8, {{1, 8}})), 1, 8, pi, 1001);
  const auto best = std::max_element(curve.samples.begin(), curve.samples.end(),
                                     [](auto a, auto b) { return a.f < b.f; });
  CHECK(best->f >= 1.0 - 1e-6);
  CHECK_THAT(best->t, WithinAbs(pi / 4, pi / 1000));

  curve = fidelity_curve(k4, 1, 2, pi, 1001);
  for (const auto& s : curve.samples) {
    CHECK(s.f <= 0.5 + 1e-9);
    CHECK(s.f >= 0.0);
  }

  CHECK_THROWS_AS(fidelity_curve(k4, 1, 2, pi, 1), Error);
  CHECK_THROWS_AS(fidelity_curve(k4, 1, 2, -1.0, 10), Error);
  CHECK_THROWS_AS(fidelity_curve(k4, 1, 9, pi, 10), Error);
}

TEST_CASE("full-space Hamiltonian reduces to the XYZ adjacency matrix", "[evolution][oracle]") {
  CHECK(full_space_single_excitation_block(complete_graph(2)) == xyz_hamiltonian(complete_graph(2)));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng, 1, 7);
    CHECK(full_space_single_excitation_block(g) == xyz_hamiltonian(g));
  }
  // Vacuum |0...0> sees +1 from every edge.
  const auto g = complete_graph(5);
  CHECK(full_space_hamiltonian(g)(0, 0) == 10);
  CHECK(single_excitation_index(5, 1) == 16);
  CHECK(single_excitation_index(5, 5) == 1);
}

TEST_CASE("full-space propagator oracle", "[evolution][oracle]") {
  const auto k4 = complete_graph(4);
  CHECK(max_abs_diff(full_space_propagator_oracle(k4, 0.3),
                     propagator(xyz_hamiltonian(k4), 0.3).u) <= 1e-8);

  const auto empty = empty_graph(3);
  CHECK(max_abs_diff(full_space_propagator_oracle(empty, 1.7), ComplexMatrix::identity(3)) <=
        1e-14);

  CHECK_THROWS_MATCHES(full_space_propagator_oracle(complete_graph(9), 0.1), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::TooLarge; }));
}

TEST_CASE("excitation number is conserved on random graphs", "[evolution][oracle][property]") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> time(0.0, 2.0 * pi);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testing::random_graph(rng, 2, 6);
    const double t = time(rng);
    CHECK(max_abs_diff(full_space_propagator_oracle(g, t), propagator(xyz_hamiltonian(g), t).u) <=
          1e-8);
  }
}
