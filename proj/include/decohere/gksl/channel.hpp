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

// Matrix representations of linear maps on d x d matrices.
//
// Vectorization is column-stacking: vec(rho)[i + j*d] = rho(i, j), so that
// vec(A X B) = (B^T kron A) vec(X). Every superoperator in the library uses
// this convention.

#include <functional>
#include <vector>

#include "decohere/gksl/density_matrix.hpp"
#include "decohere/gksl/generator.hpp"

namespace decohere::gksl {

/// d^2 x d^2 matrix acting on vec(rho).
struct Superoperator {
  std::size_t dim = 0;
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// C = sum_ij E_ij kron Map(E_ij); block (i, j) holds Map(E_ij). No 1/d
/// normalization.
struct ChoiMatrix {
  std::size_t dim = 0;
  ComplexMatrix matrix;
};

struct CpReport {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
  /// Ascending.
  std::vector<double> spectrum;
};

inline constexpr double kCpTolerance = 1e-9;

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// S = -i(I kron H - H^T kron I)
///     + sum_jk a_jk (conj(L_k) kron L_j)
///     - 1/2 (I kron K + K^T kron I),   K = sum_jk a_jk L_k^dagger L_j
Superoperator to_superoperator(const GkslGenerator& gen);

/// exp(t S).
Superoperator propagator(const GkslGenerator& gen, double t);
Superoperator propagator(const Superoperator& generator, double t);

ChoiMatrix choi_of_propagator(const Superoperator& map);
ChoiMatrix choi_of_map(std::size_t dim, const LinearMap& map);

/// true iff the minimum Choi eigenvalue is >= -tol. Throws NotHermitian if
/// the Choi matrix deviates from Hermitian by more than 1e-9.
CpReport is_completely_positive(const ChoiMatrix& choi,
                                double tol = kCpTolerance);

/// max over basis matrices E_ij of |tr Map(E_ij) - delta_ij|.
double trace_preservation_defect(const Superoperator& map);

}  // namespace decohere::gksl
