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

#include "decohere/numcore/matrix.hpp"

namespace decohere::numcore {

/// Absolute Hermiticity tolerance, scaled by max(1, max|m_ij|).
inline constexpr double kHermitianTolerance = 1e-10;

struct HermitianEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  ComplexMatrix vectors;
};

/// Eigenvalues of a Hermitian matrix, ascending. Throws NotHermitian when
/// max|m - m^dagger| exceeds kHermitianTolerance (scaled), NoConvergence
/// if the Jacobi sweeps stall.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Full eigendecomposition m = V diag(values) V^dagger.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Inputs with induced 1-norm above this are refused with Overflow.
inline constexpr double kMatrixExpNormLimit = 1e6;

/// exp(m) by scaling and squaring with a degree-13 Pade approximant.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Solves a x = b by LU with partial pivoting. b may have several columns.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace decohere::numcore
