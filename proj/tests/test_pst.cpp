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
#include "xyznet/graph.hpp"
#include "xyznet/pst.hpp"

using namespace xyznet;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

TEST_CASE("pst_scan finds the K_4^- transfer time", "[pst]") {
  const auto h = xyz_hamiltonian(complete_minus_matching(4, {{1, 4}}));
  const auto found = pst_scan(h, 1, 4, pi, default_pst_grid_steps(pi), 1e-6);
  REQUIRE(found.times.size() == 2);  // pi/4 and 3pi/4
  CHECK_THAT(found.times[0], WithinAbs(pi / 4, 1e-9));
  CHECK_THAT(found.times[1], WithinAbs(3 * pi / 4, 1e-9));
  for (double f : found.peak_fidelities) CHECK(f >= 1.0 - 1e-9);
  CHECK(found.pair == std::pair{1, 4});
  CHECK(found.epsilon == 1e-6);
}

TEST_CASE("pst_scan finds nothing on K_4", "[pst]") {
  const auto h = xyz_hamiltonian(complete_graph(4));
  CHECK(pst_scan(h, 1, 2, 2 * pi, 4096, 0.1).empty());
}

TEST_CASE("pst_scan on K_8 minus a perfect matching", "[pst]") {
  const auto h = xyz_hamiltonian(complete_minus_matching(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}));
  const auto found = pst_scan(h, 3, 6, pi, 2049);
  REQUIRE_FALSE(found.empty());
  CHECK_THAT(found.times.front(), WithinAbs(pi / 4, 1e-9));
}

TEST_CASE("pst_scan argument checks", "[pst]") {
  const auto h = xyz_hamiltonian(complete_graph(4));
  CHECK_THROWS_AS(pst_scan(h, 1, 5, pi, 1000), Error);
  CHECK_THROWS_AS(pst_scan(h, 1, 2, pi, 99), Error);
  CHECK_THROWS_AS(pst_scan(h, 1, 2, pi, 1000, 0.0), Error);
  CHECK_THROWS_AS(pst_scan(h, 1, 2, pi, 1000, 1.0), Error);
}

TEST_CASE("reported PST times hold up on re-evaluation", "[pst][property]") {
  for (int n : {4, 8, 12, 16}) {
    const auto h = xyz_hamiltonian(complete_minus_matching(n, {{1, n}}));
    const auto found = pst_scan(h, 1, n, kDefaultPstWindow, default_pst_grid_steps(kDefaultPstWindow));
    CHECK(found.times.size() == 8);  // pi/4 + k pi/2 inside [0, 4pi]
    for (std::size_t k = 0; k < found.times.size(); ++k) {
      CHECK_THAT(found.times[k], WithinAbs(pi / 4 + k * pi / 2, 1e-9));
      CHECK(fidelity(h, 1, n, found.times[k]) >= 1.0 - found.epsilon);
      if (k > 0) CHECK(found.times[k] > found.times[k - 1]);
    }
  }
}

TEST_CASE("no PST between distinct vertices of K_n", "[pst][property]") {
  for (int n = 3; n <= 12; ++n) {
    const SpectralEvolution evo(xyz_hamiltonian(complete_graph(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(pst_scan(evo, i, j, kDefaultPstWindow, 4096, 0.05).empty());
  }
}

TEST_CASE("no PST across the missing link unless 4 divides n", "[pst][property]") {
  for (int n : {5, 6, 7, 9, 10, 11}) {
    const auto h = xyz_hamiltonian(complete_minus_matching(n, {{1, n}}));
    INFO("n=" << n);
    CHECK(pst_scan(h, 1, n, kDefaultPstWindow, default_pst_grid_steps(kDefaultPstWindow), 1e-3)
              .empty());
  }
}

TEST_CASE("verify_matching_pst", "[pst]") {
  for (const auto& pf : verify_matching_pst(8, {{1, 8}, {2, 7}, {3, 6}, {4, 5}}, 0))
    CHECK(pf.fidelity >= 1.0 - 1e-9);
  const auto partial = verify_matching_pst(8, {{1, 8}, {3, 6}}, 0);
  REQUIRE(partial.size() == 2);
  for (const auto& pf : partial) CHECK(pf.fidelity >= 1.0 - 1e-9);
  const auto later = verify_matching_pst(8, {{1, 8}}, 1);
  CHECK(later.front().fidelity >= 1.0 - 1e-9);

  CHECK_THROWS_MATCHES(verify_matching_pst(6, {{1, 6}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::UnsupportedOrder;
                       }));
  CHECK_THROWS_MATCHES(verify_matching_pst(8, {{1, 8}, {8, 2}}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::NotVertexDisjoint;
                       }));
}

TEST_CASE("matching PST at every tested order", "[pst][property]") {
  for (int n : {4, 8, 12, 16}) {
    std::vector<std::pair<int, int>> matching;
    for (int v = 1; v <= n / 2; ++v) matching.emplace_back(v, n + 1 - v);
    for (std::size_t size = 1; size <= matching.size(); ++size) {
      const std::span<const std::pair<int, int>> prefix(matching.data(), size);
      for (int k = 0; k <= 2; ++k)
        for (const auto& pf : verify_matching_pst(n, prefix, k)) CHECK(pf.fidelity >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("matching PST is invariant under relabelling", "[pst][property]") {
  std::mt19937_64 rng(8);
  const std::vector<std::pair<int, int>> base{{1, 8}, {2, 7}, {3, 6}};
  const auto reference = verify_matching_pst(8, std::span<const std::pair<int, int>>(base), 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = testing::random_relabelling(rng, 8);
    std::vector<std::pair<int, int>> relabelled;
    for (auto [a, b] : base) relabelled.emplace_back(perm[a], perm[b]);
    const auto got = verify_matching_pst(8, std::span<const std::pair<int, int>>(relabelled), 0);
    for (std::size_t p = 0; p < base.size(); ++p)
      CHECK_THAT(got[p].fidelity, WithinAbs(reference[p].fidelity, 1e-10));
  }
}
