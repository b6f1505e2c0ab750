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

#include "decohere/gksl/channel.hpp"

#include <cmath>
#include <string>

#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"

namespace decohere::gksl {

using numcore::kron;

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "superoperator applied to a matrix of the wrong size");
  }
  return numcore::unvec(numcore::multiply(matrix, numcore::vec(rho)), dim);
}

Superoperator to_superoperator(const GkslGenerator& gen) {
  const std::size_t d = gen.dim();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  const ComplexMatrix& h = gen.hamiltonian();
  ComplexMatrix s = Complex(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));

  const auto& ops = gen.lindblad_ops();
  const ComplexMatrix& a = gen.kossakowski();
  ComplexMatrix decay(d);
  for (std::size_t j = 0; j < ops.size(); ++j)
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const Complex ajk = a(j, k);
      if (ajk == Complex{}) continue;
      s.add_scaled(ajk, kron(ops[k].conjugate(), ops[j]));
      decay.add_scaled(ajk, ops[k].adjoint() * ops[j]);
    }
  s.add_scaled(-0.5, kron(id, decay) + kron(decay.transpose(), id));
  return Superoperator{d, std::move(s)};
}

Superoperator propagator(const Superoperator& generator, double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument, "propagation time must be finite");
  }
  return Superoperator{generator.dim,
                       numcore::matrix_exp(Complex(t) * generator.matrix)};
}

Superoperator propagator(const GkslGenerator& gen, double t) {
  return propagator(to_superoperator(gen), t);
}

ChoiMatrix choi_of_map(std::size_t dim, const LinearMap& map) {
  const std::size_t d = dim;
  ChoiMatrix choi{d, ComplexMatrix(d * d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d);
      unit(i, j) = 1.0;
      const ComplexMatrix image = map(unit);
      if (image.rows() != d || image.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch,
                    "map image has the wrong dimension");
      }
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          choi.matrix(i * d + k, j * d + l) = image(k, l);
    }
  return choi;
}

ChoiMatrix choi_of_propagator(const Superoperator& map) {
  const std::size_t d = map.dim;
  if (map.matrix.rows() != d * d || map.matrix.cols() != d * d) {
    throw Error(ErrorCode::DimensionMismatch,
                "superoperator is not d^2 x d^2");
  }
  // Map(E_ij) is column (i + j d) of the superoperator, unvectorized.
  ChoiMatrix choi{d, ComplexMatrix(d * d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t col = i + j * d;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          choi.matrix(i * d + k, j * d + l) = map.matrix(k + l * d, col);
    }
  return choi;
}

CpReport is_completely_positive(const ChoiMatrix& choi, double tol) {
  const double dev = numcore::hermiticity_deviation(choi.matrix);
  if (dev > 1e-9) {
    throw Error(ErrorCode::NotHermitian,
                "Choi matrix is not Hermitian (deviation " +
                    std::to_string(dev) + ")");
  }
  const ComplexMatrix herm = 0.5 * (choi.matrix + choi.matrix.adjoint());
  CpReport report;
  report.spectrum = numcore::hermitian_eigenvalues(herm);
  report.min_eigenvalue = report.spectrum.front();
  report.completely_positive = report.min_eigenvalue >= -tol;
  return report;
}

double trace_preservation_defect(const Superoperator& map) {
  const std::size_t d = map.dim;
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex tr{};
      const std::size_t col = i + j * d;
      for (std::size_t k = 0; k < d; ++k) tr += map.matrix(k + k * d, col);
      worst = std::max(worst, std::abs(tr - Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace decohere::gksl
