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

#include "decohere/collisional/momentum_transfer.hpp"

#include <cmath>
#include <string>

#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"
#include "decohere/numcore/matrix.hpp"

namespace decohere::collisional {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be finite and > 0");
  }
}

// Golub-Welsch for the probabilists' Hermite weight exp(-z^2/2)/sqrt(2 pi):
// the Jacobi matrix has zero diagonal and off-diagonals sqrt(k).
TransferQuadrature gauss_hermite(std::size_t n) {
  numcore::ComplexMatrix jac(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double b = std::sqrt(static_cast<double>(k));
    jac(k - 1, k) = b;
    jac(k, k - 1) = b;
  }
  const auto eig = numcore::hermitian_eigen(jac);
  TransferQuadrature rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rule.nodes[k] = eig.values[k];
    rule.weights[k] = std::norm(eig.vectors(0, k));
  }
  // Enforce the exact mirror symmetry of the rule.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t m = n - 1 - k;
    const double z = 0.5 * (rule.nodes[m] - rule.nodes[k]);
    const double w = 0.5 * (rule.weights[m] + rule.weights[k]);
    rule.nodes[k] = -z;
    rule.nodes[m] = z;
    rule.weights[k] = w;
    rule.weights[m] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

}  // namespace

MomentumTransferLaw::MomentumTransferLaw(double rate, Shape shape)
    : rate_(rate), shape_(shape) {
  require_positive(rate, "collision rate");
  std::visit(Overloaded{
                 [](const GaussianTransfer& g) {
                   require_positive(g.sigma_q, "sigma_q");
                 },
                 [](const TwoPointTransfer& p) { require_positive(p.q0, "q0"); },
             },
             shape_);
}

double characteristic_function(const MomentumTransferLaw& law, double x) {
  return std::visit(
      Overloaded{
          [x](const GaussianTransfer& g) {
            const double y = g.sigma_q * x;
            return std::exp(-0.5 * y * y);
          },
          [x](const TwoPointTransfer& p) { return std::cos(p.q0 * x); },
      },
      law.shape());
}

double decoherence_factor(const MomentumTransferLaw& law, double dx, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "time must be >= 0");
  }
  if (dx == 0.0) return 1.0;
  return std::exp(-law.rate() * (1.0 - characteristic_function(law, dx)) * t);
}

TransferQuadrature transfer_quadrature(const MomentumTransferLaw& law,
                                       std::size_t n_q) {
  return std::visit(
      Overloaded{
          [n_q](const GaussianTransfer& g) {
            if (n_q < kMinGaussianNodes) {
              throw Error(ErrorCode::QuadratureSupport,
                          "gaussian transfer law needs at least " +
                              std::to_string(kMinGaussianNodes) +
                              " nodes, got " + std::to_string(n_q));
            }
            TransferQuadrature rule = gauss_hermite(n_q);
            for (double& q : rule.nodes) q *= g.sigma_q;
            return rule;
          },
          [n_q](const TwoPointTransfer& p) {
            if (n_q < 2) {
              throw Error(ErrorCode::QuadratureSupport,
                          "two-point transfer law needs 2 nodes, got " +
                              std::to_string(n_q));
            }
            return TransferQuadrature{{-p.q0, p.q0}, {0.5, 0.5}};
          },
      },
      law.shape());
}

double approximate_characteristic(const TransferQuadrature& rule, double x) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * std::cos(rule.nodes[k] * x);
  }
  return sum;
}

}  // namespace decohere::collisional
