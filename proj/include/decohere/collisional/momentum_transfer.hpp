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
#include <variant>
#include <vector>

namespace decohere::collisional {

struct GaussianTransfer {
  double sigma_q = 1.0;
  friend bool operator==(const GaussianTransfer&, const GaussianTransfer&) = default;
};

/// Momentum transfers of +q0 or -q0 with probability 1/2 each.
struct TwoPointTransfer {
  double q0 = 1.0;
  friend bool operator==(const TwoPointTransfer&, const TwoPointTransfer&) = default;
};

/// Collision rate together with the distribution of momentum transfers per
/// collision. The transfer density in the master equation is rate * pdf(q).
class MomentumTransferLaw {
 public:
  using Shape = std::variant<GaussianTransfer, TwoPointTransfer>;

  /// Throws InvalidArgument unless rate > 0 and the shape parameter is > 0.
  MomentumTransferLaw(double rate, Shape shape);

  static MomentumTransferLaw gaussian(double rate, double sigma_q) {
    return {rate, GaussianTransfer{sigma_q}};
  }
  static MomentumTransferLaw two_point(double rate, double q0) {
    return {rate, TwoPointTransfer{q0}};
  }

  double rate() const noexcept { return rate_; }
  const Shape& shape() const noexcept { return shape_; }

  friend bool operator==(const MomentumTransferLaw&, const MomentumTransferLaw&) = default;

 private:
  double rate_;
  Shape shape_;
};

/// Phi(x) = E[exp(i q x)]; real because both laws are symmetric.
double characteristic_function(const MomentumTransferLaw& law, double x);

/// exp(-rate (1 - Phi(dx)) t). Throws InvalidArgument for t < 0.
double decoherence_factor(const MomentumTransferLaw& law, double dx, double t);

/// Discrete transfer measure: nodes q_k with probability weights summing to 1.
struct TransferQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Minimum node count accepted for the Gaussian law.
inline constexpr std::size_t kMinGaussianNodes = 16;

/// Gaussian law: n_q-point Gauss-Hermite rule (probabilists' weight) scaled by
/// sigma_q. Two-point law: its two atoms, exact for any n_q >= 2.
/// Throws QuadratureSupport when n_q is too small for the law.
TransferQuadrature transfer_quadrature(const MomentumTransferLaw& law,
                                       std::size_t n_q);

/// sum_k w_k cos(q_k x), the quadrature approximant of Phi.
double approximate_characteristic(const TransferQuadrature& rule, double x);

}  // namespace decohere::collisional
