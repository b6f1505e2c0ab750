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

#include "decohere/gksl/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"

namespace decohere::gksl {

StateDefects measure_state_defects(const ComplexMatrix& m) {
  if (!m.is_square() || m.empty()) {
    throw Error(ErrorCode::DimensionMismatch,
                "density matrix must be square and non-empty");
  }
  if (!m.all_finite()) {
    throw Error(ErrorCode::NonFinite, "density matrix has NaN/Inf entries");
  }
  StateDefects d;
  d.hermiticity = numcore::hermiticity_deviation(m);
  d.trace_error = std::abs(m.trace() - Complex(1.0));
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  d.min_eigenvalue = numcore::hermitian_eigenvalues(herm).front();
  return d;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double tol) {
  const StateDefects d = measure_state_defects(m);
  if (d.hermiticity > tol || d.trace_error > tol || d.min_eigenvalue < -tol) {
    std::ostringstream msg;
    msg << "not a density matrix (hermiticity " << d.hermiticity
        << ", trace error " << d.trace_error << ", min eigenvalue "
        << d.min_eigenvalue << ", tolerance " << tol << ")";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  if (psi.empty() || !(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorCode::InvalidArgument, "state vector must be nonzero");
  }
  const std::size_t d = psi.size();
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi[i] * std::conj(psi[j]) / norm2;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  }
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

}  // namespace decohere::gksl
