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

#include "decohere/gksl/generator.hpp"

#include <algorithm>
#include <string>

#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"

namespace decohere::gksl {
namespace {

void require_dim(const ComplexMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be " + std::to_string(d) + "x" +
                    std::to_string(d));
  }
}

}  // namespace

GkslGenerator::GkslGenerator(ComplexMatrix hamiltonian,
                             std::vector<ComplexMatrix> lindblad_ops,
                             ComplexMatrix kossakowski, RateCheck check)
    : hamiltonian_(std::move(hamiltonian)),
      lindblad_ops_(std::move(lindblad_ops)),
      kossakowski_(std::move(kossakowski)) {
  const std::size_t d = hamiltonian_.rows();
  if (d == 0) {
    throw Error(ErrorCode::DimensionMismatch, "Hamiltonian must be non-empty");
  }
  require_dim(hamiltonian_, d, "Hamiltonian");
  for (const auto& l : lindblad_ops_) require_dim(l, d, "Lindblad operator");
  const std::size_t m = lindblad_ops_.size();
  if (m == 0 && kossakowski_.empty()) kossakowski_ = ComplexMatrix(0, 0);
  require_dim(kossakowski_, m, "Kossakowski matrix");

  if (!hamiltonian_.all_finite() || !kossakowski_.all_finite() ||
      std::any_of(lindblad_ops_.begin(), lindblad_ops_.end(),
                  [](const ComplexMatrix& l) { return !l.all_finite(); })) {
    throw Error(ErrorCode::NonFinite, "generator has NaN/Inf entries");
  }
  const double h_dev = numcore::hermiticity_deviation(hamiltonian_);
  if (h_dev > kGeneratorTolerance) {
    throw Error(ErrorCode::NotHermitian,
                "Hamiltonian is not Hermitian (deviation " +
                    std::to_string(h_dev) + ")");
  }
  if (m > 0) {
    const double a_dev = numcore::hermiticity_deviation(kossakowski_);
    if (a_dev > kGeneratorTolerance) {
      throw Error(ErrorCode::NotHermitian,
                  "Kossakowski matrix is not Hermitian (deviation " +
                      std::to_string(a_dev) + ")");
    }
    min_rate_ = numcore::hermitian_eigenvalues(kossakowski_).front();
    if (check == RateCheck::RequirePositive && min_rate_ < -kGeneratorTolerance) {
      throw Error(ErrorCode::NotPositive,
                  "Kossakowski matrix is not positive semidefinite (min "
                  "eigenvalue " +
                      std::to_string(min_rate_) + ")");
    }
  }

  decay_ = ComplexMatrix(d);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a = kossakowski_(j, k);
      if (a == Complex{}) continue;
      decay_.add_scaled(a, lindblad_ops_[k].adjoint() * lindblad_ops_[j]);
    }
}

GkslGenerator GkslGenerator::with_rates(ComplexMatrix hamiltonian,
                                        std::vector<ComplexMatrix> lindblad_ops,
                                        std::span<const double> rates,
                                        RateCheck check) {
  if (rates.size() != lindblad_ops.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "one rate per Lindblad operator is required");
  }
  return GkslGenerator(std::move(hamiltonian), std::move(lindblad_ops),
                       ComplexMatrix::diagonal(rates), check);
}

GkslGenerator GkslGenerator::hamiltonian_only(ComplexMatrix hamiltonian) {
  return GkslGenerator(std::move(hamiltonian), {}, ComplexMatrix(0, 0));
}

ComplexMatrix GkslGenerator::apply(const ComplexMatrix& rho) const {
  require_dim(rho, dim(), "state");
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix out = minus_i * (hamiltonian_ * rho - rho * hamiltonian_);
  out.add_scaled(-0.5, decay_ * rho + rho * decay_);

  // sum_j L_j (sum_k a_jk rho L_k^dagger)
  const std::size_t m = lindblad_ops_.size();
  if (m == 0) return out;
  std::vector<ComplexMatrix> rho_ldag;
  rho_ldag.reserve(m);
  for (const auto& l : lindblad_ops_) rho_ldag.push_back(rho * l.adjoint());
  for (std::size_t j = 0; j < m; ++j) {
    ComplexMatrix inner(dim());
    bool any = false;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex a = kossakowski_(j, k);
      if (a == Complex{}) continue;
      inner.add_scaled(a, rho_ldag[k]);
      any = true;
    }
    if (any) out += lindblad_ops_[j] * inner;
  }
  return out;
}

ComplexMatrix apply_generator(const GkslGenerator& gen,
                              const DensityMatrix& rho) {
  return gen.apply(rho);
}

GkslGenerator canonical_form(const GkslGenerator& gen) {
  const std::size_t m = gen.channel_count();
  if (m == 0) return gen;
  const numcore::HermitianEigen eig =
      numcore::hermitian_eigen(gen.kossakowski());
  std::vector<ComplexMatrix> ops;
  std::vector<double> rates;
  ops.reserve(m);
  rates.reserve(m);
  // Descending rates.
  for (std::size_t col = m; col-- > 0;) {
    ComplexMatrix op(gen.dim());
    for (std::size_t j = 0; j < m; ++j) {
      const Complex u = eig.vectors(j, col);
      if (u != Complex{}) op.add_scaled(u, gen.lindblad_ops()[j]);
    }
    ops.push_back(std::move(op));
    const double r = eig.values[col];
    rates.push_back(std::abs(r) <= kGeneratorTolerance ? 0.0 : r);
  }
  const RateCheck check = gen.positive() ? RateCheck::RequirePositive
                                         : RateCheck::AllowIndefinite;
  return GkslGenerator::with_rates(gen.hamiltonian(), std::move(ops), rates,
                                   check);
}

}  // namespace decohere::gksl
