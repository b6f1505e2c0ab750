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

// Dynamic structure factor of an ideal one-dimensional Maxwell-Boltzmann gas
//   S(q, E) = sqrt(beta M / (2 pi q^2)) exp(-beta M (E + q^2/(2M))^2 / (2 q^2))
// with E the energy transferred to the gas particle's partner (so that
// S(q, E) = exp(-beta E) S(q, -E)).

#include "decohere/numcore/quadrature.hpp"

namespace decohere::collisional {

struct GasSpec {
  double mass = 1.0;
  double density = 1.0;
  double beta = 1.0;
  /// Gaussian interaction potential in momentum space,
  /// v(q) = v0 exp(-sigma_v^2 q^2 / 2).
  double v0 = 1.0;
  double sigma_v = 1.0;

  /// Throws InvalidArgument unless every field is finite and > 0.
  void validate() const;

  friend bool operator==(const GasSpec&, const GasSpec&) = default;
};

double interaction_ft(const GasSpec& gas, double q);

/// mu(q) = (2 pi)^4 n |v(q)|^2.
double interaction_weight(const GasSpec& gas, double q);

/// Throws ZeroMomentumTransfer for q = 0.
double mb_structure_factor(const GasSpec& gas, double q, double energy);
double log_structure_factor(const GasSpec& gas, double q, double energy);

/// S(q, E) / S(q, -E), evaluated from log S so it never divides underflowed
/// values.
double detailed_balance_ratio(const GasSpec& gas, double q, double energy);

/// chi''(q, E) = pi (1 - exp(beta E)) S(q, E); 0 at E = 0. Large positive
/// beta E is handled in log space.
double fdt_response(const GasSpec& gas, double q, double energy);

/// int S(q, E) dE over [e_min, e_max].
double structure_factor_sum_rule(const GasSpec& gas, double q, double e_min,
                                 double e_max,
                                 const numcore::QuadratureSpec& spec = {});

/// Same over the peak +- 20 thermal widths.
double structure_factor_sum_rule(const GasSpec& gas, double q,
                                 const numcore::QuadratureSpec& spec = {});

}  // namespace decohere::collisional
