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

#include "decohere/collisional/position_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decohere/error.hpp"
#include "decohere/gksl/density_matrix.hpp"
#include "decohere/numcore/kernels.hpp"

namespace decohere::collisional {

namespace {

// The discretized generator is refused when its characteristic function
// misses the exact one by more than this anywhere on the grid.
constexpr double kSupportTolerance = 1e-6;

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) {
    throw Error(ErrorCode::InvalidArgument, "position grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      throw Error(ErrorCode::InvalidArgument, "position grid is not finite");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  "position grid must be strictly ascending");
    }
  }
}

}  // namespace

PositionDensityMatrix PositionDensityMatrix::from_matrix(
    std::vector<double> grid, ComplexMatrix matrix) {
  validate_grid(grid);
  if (matrix.rows() != grid.size() || matrix.cols() != grid.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "position density matrix is " + std::to_string(matrix.rows()) +
                    "x" + std::to_string(matrix.cols()) + " on a grid of " +
                    std::to_string(grid.size()));
  }
  if (!matrix.all_finite()) {
    throw Error(ErrorCode::NonFinite, "position density matrix not finite");
  }
  const auto d = gksl::measure_state_defects(matrix);
  if (d.hermiticity > kPositionHermitianTolerance) {
    throw Error(ErrorCode::InvariantViolation,
                "position density matrix not Hermitian (" +
                    std::to_string(d.hermiticity) + ")");
  }
  if (d.trace_error > kPositionTraceTolerance) {
    throw Error(ErrorCode::InvariantViolation,
                "position density matrix trace off by " +
                    std::to_string(d.trace_error));
  }
  if (d.min_eigenvalue < -kPositionPsdTolerance) {
    throw Error(ErrorCode::InvariantViolation,
                "position density matrix has eigenvalue " +
                    std::to_string(d.min_eigenvalue));
  }
  return {std::move(grid), std::move(matrix)};
}

PositionDensityMatrix PositionDensityMatrix::superposition(
    std::vector<double> grid, std::span<const std::size_t> sites) {
  validate_grid(grid);
  if (sites.empty()) {
    throw Error(ErrorCode::InvalidArgument, "superposition needs a site");
  }
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end() ||
      !std::is_sorted(sites.begin(), sites.end())) {
    throw Error(ErrorCode::InvalidArgument,
                "superposition sites must be strictly ascending");
  }
  const std::size_t n = grid.size();
  ComplexMatrix m(n, n);
  const double amp = 1.0 / static_cast<double>(sites.size());
  for (std::size_t a : sites) {
    if (a >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "site " + std::to_string(a) + " outside grid of " +
                      std::to_string(n));
    }
    for (std::size_t b : sites) m(a, b) += amp;
  }
  return {std::move(grid), std::move(m)};
}

std::vector<double> decoherence_factor_matrix(const MomentumTransferLaw& law,
                                              std::span<const double> grid,
                                              double t) {
  const std::size_t n = grid.size();
  std::vector<double> f(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f[i * n + j] = decoherence_factor(law, grid[i] - grid[j], t);
    }
  }
  return f;
}

PositionDensityMatrix evolve_exact(const PositionDensityMatrix& rho0,
                                   const MomentumTransferLaw& law, double t) {
  const auto f = decoherence_factor_matrix(law, rho0.grid(), t);
  ComplexMatrix m = rho0.matrix();
  numcore::kernels::active().scale_by_real(f.size(), f.data(), m.data().data());
  return PositionDensityMatrix::from_matrix(rho0.grid(), std::move(m));
}

gksl::GkslGenerator build_discretized_generator(const MomentumTransferLaw& law,
                                                std::span<const double> grid,
                                                std::size_t n_q) {
  validate_grid(std::vector<double>(grid.begin(), grid.end()));
  const TransferQuadrature rule = transfer_quadrature(law, n_q);
  const double span_x = grid.back() - grid.front();
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double dx = grid[j] - grid[i];
      worst = std::max(worst, std::abs(approximate_characteristic(rule, dx) -
                                       characteristic_function(law, dx)));
    }
  }
  if (worst > kSupportTolerance) {
    throw Error(ErrorCode::QuadratureSupport,
                std::to_string(rule.nodes.size()) +
                    " transfer nodes do not resolve separations up to " +
                    std::to_string(span_x) + " (error " +
                    std::to_string(worst) + ")");
  }

  const std::size_t n = grid.size();
  std::vector<ComplexMatrix> ops;
  std::vector<double> rates;
  ops.reserve(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      u(i, i) = std::polar(1.0, rule.nodes[k] * grid[i]);
    }
    ops.push_back(std::move(u));
    rates.push_back(law.rate() * rule.weights[k]);
  }
  return gksl::GkslGenerator::with_rates(ComplexMatrix(n, n), std::move(ops),
                                         rates);
}

}  // namespace decohere::collisional
