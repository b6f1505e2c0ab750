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

#pragma once

// Density matrices sampled on a one-dimensional position grid. Every grid
// point carries unit weight, so the trace is the plain sum of the diagonal.

#include <cstddef>
#include <span>
#include <vector>

#include "decohere/collisional/momentum_transfer.hpp"
#include "decohere/gksl/generator.hpp"
#include "decohere/numcore/matrix.hpp"

namespace decohere::collisional {

using numcore::Complex;
using numcore::ComplexMatrix;

inline constexpr double kPositionHermitianTolerance = 1e-10;
inline constexpr double kPositionTraceTolerance = 1e-8;
inline constexpr double kPositionPsdTolerance = 1e-8;

class PositionDensityMatrix {
 public:
  /// Throws InvalidArgument for a non-ascending or non-finite grid,
  /// DimensionMismatch if sizes disagree, InvariantViolation if the matrix is
  /// not Hermitian, unit-trace and PSD within the tolerances above.
  static PositionDensityMatrix from_matrix(std::vector<double> grid,
                                           ComplexMatrix matrix);

  /// Equal-amplitude superposition of the listed grid sites.
  static PositionDensityMatrix superposition(std::vector<double> grid,
                                             std::span<const std::size_t> sites);

  std::size_t size() const noexcept { return grid_.size(); }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

 private:
  PositionDensityMatrix(std::vector<double> grid, ComplexMatrix matrix)
      : grid_(std::move(grid)), matrix_(std::move(matrix)) {}

  std::vector<double> grid_;
  ComplexMatrix matrix_;
};

/// rho(x_i, x_j, t) = decoherence_factor(x_i - x_j, t) rho(x_i, x_j, 0).
PositionDensityMatrix evolve_exact(const PositionDensityMatrix& rho0,
                                   const MomentumTransferLaw& law, double t);

/// Matrix of decoherence factors for every pair of grid points.
std::vector<double> decoherence_factor_matrix(const MomentumTransferLaw& law,
                                              std::span<const double> grid,
                                              double t);

/// Generator on the grid built from the transfer quadrature: one Lindblad
/// operator diag(exp(i q_k x)) per node with rate rate * w_k and H = 0. Its
/// action on entry (i, j) is -rate (1 - Phi_n(x_i - x_j)) rho_ij.
gksl::GkslGenerator build_discretized_generator(const MomentumTransferLaw& law,
                                                std::span<const double> grid,
                                                std::size_t n_q);

}  // namespace decohere::collisional
