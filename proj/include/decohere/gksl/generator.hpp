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

#include <vector>

#include "decohere/gksl/density_matrix.hpp"

namespace decohere::gksl {

inline constexpr double kGeneratorTolerance = 1e-10;

/// Whether construction insists on a positive semidefinite Kossakowski
/// matrix. Time-local generators may carry negative rates; those are built
/// with AllowIndefinite and report positive() == false.
enum class RateCheck { RequirePositive, AllowIndefinite };

/// L(rho) = -i[H, rho] + sum_jk a_jk (L_j rho L_k^dagger - 1/2 {L_k^dagger L_j, rho})
///
/// H must be Hermitian, the Kossakowski matrix a Hermitian, and (unless
/// AllowIndefinite) positive semidefinite, all within kGeneratorTolerance.
/// Construction throws NotHermitian, NotPositive or DimensionMismatch.
class GkslGenerator {
 public:
  GkslGenerator(ComplexMatrix hamiltonian,
                std::vector<ComplexMatrix> lindblad_ops,
                ComplexMatrix kossakowski,
                RateCheck check = RateCheck::RequirePositive);

  /// Diagonal Kossakowski matrix diag(rates).
  static GkslGenerator with_rates(ComplexMatrix hamiltonian,
                                  std::vector<ComplexMatrix> lindblad_ops,
                                  std::span<const double> rates,
                                  RateCheck check = RateCheck::RequirePositive);

  /// Zero dissipator.
  static GkslGenerator hamiltonian_only(ComplexMatrix hamiltonian);

  std::size_t dim() const noexcept { return hamiltonian_.rows(); }
  std::size_t channel_count() const noexcept { return lindblad_ops_.size(); }
  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<ComplexMatrix>& lindblad_ops() const noexcept {
    return lindblad_ops_;
  }
  const ComplexMatrix& kossakowski() const noexcept { return kossakowski_; }
  /// Smallest eigenvalue of the Kossakowski matrix (0 with no channels).
  double min_rate() const noexcept { return min_rate_; }
  bool positive() const noexcept { return min_rate_ >= -kGeneratorTolerance; }

  /// Action on an arbitrary square matrix of matching dimension.
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix apply(const DensityMatrix& rho) const {
    return apply(rho.matrix());
  }

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> lindblad_ops_;
  ComplexMatrix kossakowski_;
  ComplexMatrix decay_;  // sum_jk a_jk L_k^dagger L_j
  double min_rate_ = 0.0;
};

ComplexMatrix apply_generator(const GkslGenerator& gen,
                              const DensityMatrix& rho);

/// Equivalent generator with diagonal Kossakowski matrix (rates >= 0,
/// descending) and rotated operators M_m = sum_j U_jm L_j, where
/// a = U diag(rates) U^dagger. Rates within rounding of zero are clamped to 0.
GkslGenerator canonical_form(const GkslGenerator& gen);

}  // namespace decohere::gksl
