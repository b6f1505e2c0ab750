// Copyright 2026 The decohere Authors
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
#include <vector>

#include "../support/random_models.hpp"
#include "decohere/collisional/momentum_transfer.hpp"
#include "decohere/collisional/position_state.hpp"
#include "decohere/collisional/structure_factor.hpp"
#include "decohere/error.hpp"
#include "decohere/gksl/channel.hpp"
#include "decohere/gksl/propagate.hpp"

using namespace decohere;
using namespace decohere::collisional;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

bool has_code(const std::function<void()>& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<double> uniform_grid(std::size_t n, double spacing) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = spacing * static_cast<double>(i);
  return g;
}

// Max entrywise deviation between ODE-integrated discretized dynamics and the
// closed-form suppression.
double ode_vs_exact(const MomentumTransferLaw& law, std::size_t n,
                    double spacing, std::size_t n_q, double t,
                    std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  const auto grid = uniform_grid(n, spacing);
  const auto rho0 =
      PositionDensityMatrix::from_matrix(grid, testing::random_state(rng, n));
  const auto gen = build_discretized_generator(law, grid, n_q);
  numcore::OdeSpec ode;
  ode.abs_tol = tol;
  ode.rel_tol = tol;
  const std::vector<double> times{0.0, t};
  const auto traj = gksl::integrate_linear(
      gksl::to_superoperator(gen),
      gksl::DensityMatrix::from_matrix(rho0.matrix()), times, ode);
  const auto exact = evolve_exact(rho0, law, t);
  return numcore::max_abs_difference(traj.states.back(), exact.matrix());
}

}  // namespace

TEST_CASE("characteristic function examples", "[collisional]") {
  const auto g = MomentumTransferLaw::gaussian(1.0, 1.0);
  const auto p = MomentumTransferLaw::two_point(1.0, std::numbers::pi);
  CHECK(characteristic_function(g, 0.0) == 1.0);
  CHECK(characteristic_function(p, 0.0) == 1.0);
  CHECK_THAT(characteristic_function(g, 1.0), WithinAbs(0.606530659712633, 1e-15));
  CHECK_THAT(characteristic_function(p, 1.0), WithinAbs(-1.0, 1e-15));
  for (double x : {-3.0, -0.4, 0.9, 7.5}) {
    CHECK(std::abs(characteristic_function(g, x)) <= 1.0);
    CHECK(std::abs(characteristic_function(p, x)) <= 1.0);
  }
  CHECK_THROWS_AS(MomentumTransferLaw::gaussian(0.0, 1.0), Error);
  CHECK_THROWS_AS(MomentumTransferLaw::gaussian(1.0, -1.0), Error);
  CHECK_THROWS_AS(MomentumTransferLaw::two_point(1.0, 0.0), Error);
}

TEST_CASE("decoherence factor examples", "[collisional]") {
  const auto g1 = MomentumTransferLaw::gaussian(1.0, 1.0);
  CHECK(decoherence_factor(g1, 0.0, 3.0) == 1.0);
  CHECK_THAT(decoherence_factor(g1, 50.0, 1.0),
             WithinAbs(0.367879441171442, 1e-12));
  const auto g2 = MomentumTransferLaw::gaussian(2.0, 1.0);
  CHECK_THAT(decoherence_factor(g2, 1.0, 1.0),
             WithinAbs(0.455236287985313, 1e-12));
  double prev = 1.0;
  for (double dx = 0.25; dx < 10.0; dx += 0.25) {
    const double f = decoherence_factor(g2, dx, 1.0);
    CHECK(f <= prev);
    CHECK(f >= std::exp(-2.0) - 1e-15);
    prev = f;
  }
  CHECK_THROWS_AS(decoherence_factor(g1, 1.0, -1.0), Error);
}

TEST_CASE("exact evolution", "[collisional]") {
  const auto law = MomentumTransferLaw::gaussian(1.0, 100.0);
  const std::vector<std::size_t> sites{0, 1};
  const auto rho0 = PositionDensityMatrix::superposition({0.0, 1.0}, sites);
  CHECK(evolve_exact(rho0, law, 0.0).matrix() == rho0.matrix());
  const auto half = evolve_exact(rho0, law, std::log(2.0));
  CHECK_THAT(half(0, 1).real(), WithinAbs(0.25, 1e-12));
  CHECK(half(0, 0) == rho0(0, 0));

  const auto diag = PositionDensityMatrix::from_matrix(
      {-1.0, 0.0, 2.0},
      numcore::ComplexMatrix::diagonal(std::vector<double>{0.2, 0.3, 0.5}));
  CHECK(evolve_exact(diag, law, 4.0).matrix() == diag.matrix());

  std::mt19937_64 rng(7);
  const auto grid = uniform_grid(6, 0.4);
  const auto rho = PositionDensityMatrix::from_matrix(
      grid, testing::random_state(rng, 6));
  const auto g = MomentumTransferLaw::gaussian(1.5, 1.0);
  std::vector<double> prev(36, 1e300);
  for (double t : {0.0, 0.5, 1.0, 3.0, 5.0}) {
    const auto r = evolve_exact(rho, g, t);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(std::abs(r(i, i) - rho(i, i)) <= 1e-12);
      for (std::size_t j = 0; j < 6; ++j) {
        const double a = std::abs(r(i, j));
        CHECK(a <= prev[i * 6 + j] + 1e-15);
        prev[i * 6 + j] = a;
      }
    }
    CHECK(gksl::measure_state_defects(r.matrix()).min_eigenvalue >= -1e-8);
  }
}

TEST_CASE("position state validation", "[collisional]") {
  const std::vector<std::size_t> sites{0, 2};
  CHECK(has_code([&] { PositionDensityMatrix::superposition({1.0, 0.0}, sites); },
                 ErrorCode::InvalidArgument));
  CHECK(has_code([&] {
          PositionDensityMatrix::from_matrix({0.0, 1.0},
                                             numcore::ComplexMatrix::identity(2));
        },
        ErrorCode::InvariantViolation));
  CHECK(has_code([&] {
          PositionDensityMatrix::from_matrix({0.0, 1.0, 2.0},
                                             numcore::ComplexMatrix::identity(2));
        },
        ErrorCode::DimensionMismatch));
}

TEST_CASE("transfer quadrature", "[collisional]") {
  const auto g = MomentumTransferLaw::gaussian(1.0, 1.3);
  CHECK(has_code([&] { transfer_quadrature(g, 8); }, ErrorCode::QuadratureSupport));
  const auto rule = transfer_quadrature(g, 64);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  CHECK_THAT(total, WithinAbs(1.0, 1e-14));
  for (double dx = 0.0; dx <= 4.0; dx += 0.05) {
    CHECK(std::abs(approximate_characteristic(rule, dx) -
                   characteristic_function(g, dx)) <= 1e-10);
  }
  const auto p = MomentumTransferLaw::two_point(2.0, 0.7);
  CHECK(has_code([&] { transfer_quadrature(p, 1); }, ErrorCode::QuadratureSupport));
  const auto atoms = transfer_quadrature(p, 2);
  for (double dx : {0.3, 2.0, 11.0}) {
    CHECK_THAT(approximate_characteristic(atoms, dx),
               WithinAbs(std::cos(0.7 * dx), 1e-15));
  }
}

TEST_CASE("discretized generator action", "[collisional]") {
  const auto p = MomentumTransferLaw::two_point(1.5, 0.8);
  const auto grid = uniform_grid(5, 0.7);
  const auto gen = build_discretized_generator(p, grid, 2);
  std::mt19937_64 rng(3);
  const auto rho = testing::random_state(rng, 5);
  const auto out = gen.apply(rho);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const double r = -1.5 * (1.0 - std::cos(0.8 * (grid[i] - grid[j])));
      CHECK(std::abs(out(i, j) - r * rho(i, j)) <= 1e-12);
    }
  }

  const auto wide = MomentumTransferLaw::gaussian(1.0, 1.0);
  CHECK(has_code([&] { build_discretized_generator(wide, uniform_grid(4, 20.0), 16); },
                 ErrorCode::QuadratureSupport));
}

TEST_CASE("discretized generator reproduces exact suppression",
          "[collisional][slow]") {
  const auto g = MomentumTransferLaw::gaussian(1.0, 1.0);
  CHECK(ode_vs_exact(g, 8, 0.5, 64, 1.0, 11, 1e-10) <= 1e-7);
  CHECK(ode_vs_exact(g, 12, 0.3, 64, 5.0, 12, 1e-10) <= 1e-7);
  const auto p = MomentumTransferLaw::two_point(2.0, 1.1);
  CHECK(ode_vs_exact(p, 16, 0.4, 2, 5.0, 13, 1e-10) <= 1e-7);
  CHECK(ode_vs_exact(p, 8, 0.5, 2, 1.0, 14, 1e-13) <= 1e-12);

  // exp(tS) against the closed form for the two-atom law.
  const auto grid = uniform_grid(6, 0.5);
  const auto gen = build_discretized_generator(p, grid, 2);
  const auto map = gksl::propagator(gen, 1.0);
  std::mt19937_64 rng(15);
  const auto rho0 =
      PositionDensityMatrix::from_matrix(grid, testing::random_state(rng, 6));
  const auto via_map = numcore::unvec(
      numcore::multiply(map.matrix, numcore::vec(rho0.matrix())), 6);
  CHECK(numcore::max_abs_difference(via_map,
                                    evolve_exact(rho0, p, 1.0).matrix()) <= 1e-12);
}

TEST_CASE("discretized semigroup is completely positive", "[collisional]") {
  const auto g = MomentumTransferLaw::gaussian(0.8, 1.2);
  const auto gen = build_discretized_generator(g, uniform_grid(4, 0.6), 32);
  for (double t : {0.1, 1.0, 5.0}) {
    const auto rep = gksl::is_completely_positive(
        gksl::choi_of_propagator(gksl::propagator(gen, t)));
    CHECK(rep.min_eigenvalue >= -1e-8);
  }
}

TEST_CASE("structure factor examples", "[collisional]") {
  const GasSpec gas{1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK_THAT(mb_structure_factor(gas, 1.0, -0.5), WithinAbs(0.398942280401433, 1e-14));
  CHECK_THAT(mb_structure_factor(gas, 1.0, 0.5), WithinAbs(0.241970724519143, 1e-14));
  CHECK_THAT(structure_factor_sum_rule(gas, 1.0, -40.0, 40.0), WithinAbs(1.0, 1e-8));
  CHECK(has_code([&] { mb_structure_factor(gas, 0.0, 1.0); },
                 ErrorCode::ZeroMomentumTransfer));

  CHECK(detailed_balance_ratio(gas, 1.0, 0.0) == 1.0);
  CHECK_THAT(detailed_balance_ratio(gas, 1.0, 0.5), WithinRel(0.606530659712633, 1e-12));
  const GasSpec cold{1.0, 1.0, 2.0, 1.0, 1.0};
  CHECK_THAT(detailed_balance_ratio(cold, 1.0, 1.0), WithinRel(0.135335283236613, 1e-12));

  CHECK(fdt_response(gas, 1.0, 0.0) == 0.0);
  CHECK_THAT(fdt_response(gas, 1.0, 0.5), WithinAbs(-0.493140686782360, 1e-12));
  CHECK_THAT(fdt_response(gas, 1.0, 0.5) + fdt_response(gas, 1.0, -0.5),
             WithinAbs(0.0, 1e-12));
}

TEST_CASE("structure factor grid identities", "[collisional]") {
  for (double q : {0.3, 1.0, 4.0}) {
    for (double m : {0.5, 1.0, 10.0}) {
      for (double beta : {0.1, 1.0, 20.0}) {
        const GasSpec gas{m, 1.0, beta, 1.0, 1.0};
        CHECK_THAT(structure_factor_sum_rule(gas, q), WithinAbs(1.0, 1e-8));
        for (double e : {-3.0, -0.2, 0.05, 1.0, 2.5}) {
          CHECK_THAT(detailed_balance_ratio(gas, q, e),
                     WithinRel(std::exp(-beta * e), 1e-9));
          const double a = fdt_response(gas, q, e);
          const double b = fdt_response(gas, q, -e);
          CHECK(std::abs(a + b) <= 1e-9 * std::max(std::abs(a), 1e-300));
        }
      }
    }
  }
  // beta E beyond the log-space threshold.
  const GasSpec gas{1.0, 1.0, 40.0, 1.0, 1.0};
  const double a = fdt_response(gas, 1.0, 1.0);
  const double b = fdt_response(gas, 1.0, -1.0);
  CHECK(std::isfinite(a));
  CHECK_THAT(a, WithinRel(-b, 1e-9));
}

TEST_CASE("gas interaction weight", "[collisional]") {
  const GasSpec gas{1.0, 2.0, 1.0, 0.5, 1.0};
  const double two_pi4 = std::pow(2.0 * std::numbers::pi, 4);
  CHECK_THAT(interaction_weight(gas, 0.0), WithinRel(two_pi4 * 2.0 * 0.25, 1e-14));
  CHECK_THAT(interaction_weight(gas, 1.0),
             WithinRel(two_pi4 * 2.0 * 0.25 * std::exp(-1.0), 1e-14));
  CHECK_THROWS_AS((GasSpec{0.0, 1.0, 1.0, 1.0, 1.0}.validate()), Error);
}
