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

#include "decohere/dephasing/spectral_density.hpp"

#include <cmath>
#include <string>

#include "decohere/error.hpp"

namespace decohere::dephasing {

SpectralDensity::SpectralDensity(double coupling, double exponent,
                                 double cutoff)
    : coupling_(coupling), exponent_(exponent), cutoff_(cutoff) {
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    throw Error(ErrorCode::InvalidArgument, "spectral coupling must be >= 0");
  }
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidArgument, "spectral exponent must be > 0");
  }
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw Error(ErrorCode::InvalidArgument, "spectral cutoff must be > 0");
  }
}

double SpectralDensity::operator()(double omega) const {
  if (omega < 0.0) {
    throw Error(ErrorCode::NegativeFrequency,
                "spectral density evaluated at omega = " +
                    std::to_string(omega));
  }
  if (omega == 0.0 || coupling_ == 0.0) return 0.0;
  return coupling_ * std::pow(omega, exponent_) *
         std::pow(cutoff_, 1.0 - exponent_) * std::exp(-omega / cutoff_);
}

double spectral_value(const SpectralDensity& j, double omega) {
  return j(omega);
}

BathSpec::BathSpec(double beta) : beta_(beta) {
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "inverse temperature must be > 0 (or +inf)");
  }
}

bool BathSpec::is_zero_temperature() const noexcept {
  return std::isinf(beta_);
}

double BathSpec::thermal_factor(double omega) const {
  if (is_zero_temperature()) return 1.0;
  return 1.0 / std::tanh(0.5 * beta_ * omega);
}

}  // namespace decohere::dephasing
