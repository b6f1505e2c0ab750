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

#include "decohere/collisional/structure_factor.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "decohere/error.hpp"

namespace decohere::collisional {

namespace {

// Above this beta E the factor 1 - exp(beta E) is folded into log S.
constexpr double kLogSpaceThreshold = 30.0;
constexpr double kSumRuleWidths = 20.0;

void require_nonzero_q(double q) {
  if (q == 0.0) {
    throw Error(ErrorCode::ZeroMomentumTransfer,
                "structure factor is undefined at q = 0");
  }
  if (!std::isfinite(q)) {
    throw Error(ErrorCode::InvalidArgument, "momentum transfer not finite");
  }
}

}  // namespace

void GasSpec::validate() const {
  const auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("gas ") + name + " must be finite and > 0");
    }
  };
  check(mass, "mass");
  check(density, "density");
  check(beta, "beta");
  check(v0, "v0");
  check(sigma_v, "sigma_v");
}

double interaction_ft(const GasSpec& gas, double q) {
  const double y = gas.sigma_v * q;
  return gas.v0 * std::exp(-0.5 * y * y);
}

double interaction_weight(const GasSpec& gas, double q) {
  const double v = interaction_ft(gas, q);
  const double two_pi = 2.0 * std::numbers::pi;
  return two_pi * two_pi * two_pi * two_pi * gas.density * v * v;
}

double log_structure_factor(const GasSpec& gas, double q, double energy) {
  gas.validate();
  require_nonzero_q(q);
  const double bm = gas.beta * gas.mass;
  const double q2 = q * q;
  const double shift = energy + q2 / (2.0 * gas.mass);
  return 0.5 * std::log(bm / (2.0 * std::numbers::pi * q2)) -
         bm * shift * shift / (2.0 * q2);
}

double mb_structure_factor(const GasSpec& gas, double q, double energy) {
  return std::exp(log_structure_factor(gas, q, energy));
}

double detailed_balance_ratio(const GasSpec& gas, double q, double energy) {
  return std::exp(log_structure_factor(gas, q, energy) -
                  log_structure_factor(gas, q, -energy));
}

double fdt_response(const GasSpec& gas, double q, double energy) {
  if (energy == 0.0) {
    require_nonzero_q(q);
    gas.validate();
    return 0.0;
  }
  const double x = gas.beta * energy;
  const double log_s = log_structure_factor(gas, q, energy);
  if (x > kLogSpaceThreshold) {
    // 1 - e^x = -e^x (1 - e^-x)
    return -std::numbers::pi * std::exp(x + log_s) * -std::expm1(-x);
  }
  return -std::numbers::pi * std::expm1(x) * std::exp(log_s);
}

double structure_factor_sum_rule(const GasSpec& gas, double q, double e_min,
                                 double e_max,
                                 const numcore::QuadratureSpec& spec) {
  gas.validate();
  require_nonzero_q(q);
  const double peak = -q * q / (2.0 * gas.mass);
  const double breaks[] = {peak};
  const bool inside = peak > e_min && peak < e_max;
  return numcore::integrate_adaptive(
             [&](double e) { return mb_structure_factor(gas, q, e); }, e_min,
             e_max, spec,
             inside ? std::span<const double>(breaks) : std::span<const double>())
      .value;
}

double structure_factor_sum_rule(const GasSpec& gas, double q,
                                 const numcore::QuadratureSpec& spec) {
  gas.validate();
  require_nonzero_q(q);
  const double peak = -q * q / (2.0 * gas.mass);
  const double width = std::abs(q) / std::sqrt(gas.beta * gas.mass);
  return structure_factor_sum_rule(gas, q, peak - kSumRuleWidths * width,
                                   peak + kSumRuleWidths * width, spec);
}

}  // namespace decohere::collisional
