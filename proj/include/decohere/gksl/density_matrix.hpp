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

#include <cstddef>
#include <span>

#include "decohere/numcore/matrix.hpp"

namespace decohere::gksl {

using numcore::Complex;
using numcore::ComplexMatrix;

inline constexpr double kStateTolerance = 1e-10;

struct StateDefects {
  double hermiticity = 0.0;     // max |rho - rho^dagger|
  double trace_error = 0.0;     // |tr rho - 1|
  double min_eigenvalue = 0.0;  // of the Hermitian part
};

/// Measures how far `m` is from a valid density matrix.
StateDefects measure_state_defects(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Throws InvariantViolation if any defect exceeds `tol`.
  static DensityMatrix from_matrix(ComplexMatrix m,
                                   double tol = kStateTolerance);
  /// |psi><psi| for the normalized `psi`.
  static DensityMatrix pure(std::span<const Complex> psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return matrix_(i, j);
  }
  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

}  // namespace decohere::gksl
