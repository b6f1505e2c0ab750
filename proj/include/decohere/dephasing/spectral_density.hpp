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

#include <limits>

namespace decohere::dephasing {

/// Ohmic-family spectral density with exponential cutoff,
///   J(w) = coupling * w^s * cutoff^(1-s) * exp(-w / cutoff).
/// s < 1 is sub-Ohmic, s = 1 Ohmic, s > 1 super-Ohmic.
class SpectralDensity {
 public:
  /// Throws InvalidArgument unless coupling >= 0, exponent > 0, cutoff > 0.
  SpectralDensity(double coupling, double exponent, double cutoff);

  double coupling() const noexcept { return coupling_; }
  double exponent() const noexcept { return exponent_; }
  double cutoff() const noexcept { return cutoff_; }

  /// Throws NegativeFrequency for omega < 0.
  double operator()(double omega) const;

  friend bool operator==(const SpectralDensity&, const SpectralDensity&) = default;

 private:
  double coupling_;
  double exponent_;
  double cutoff_;
};

double spectral_value(const SpectralDensity& j, double omega);

/// Thermal bath at inverse temperature beta; beta = +inf is the vacuum, where
/// coth(beta w / 2) is replaced by 1 exactly.
class BathSpec {
 public:
  /// Throws InvalidArgument unless beta > 0 (infinity allowed).
  explicit BathSpec(double beta);
  static BathSpec zero_temperature() {
    return BathSpec(std::numeric_limits<double>::infinity());
  }

  double beta() const noexcept { return beta_; }
  bool is_zero_temperature() const noexcept;

  /// coth(beta * omega / 2) for omega > 0.
  double thermal_factor(double omega) const;

  friend bool operator==(const BathSpec&, const BathSpec&) = default;

 private:
  double beta_;
};

}  // namespace decohere::dephasing
