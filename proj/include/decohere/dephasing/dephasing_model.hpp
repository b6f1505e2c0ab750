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

// Two-level system coupled through sigma_z to a bosonic bath: populations are
// frozen and the coherence decays with the decoherence function Gamma(t).
//
// Basis convention: index 0 is the sigma_z = +1 eigenvector ("|1>"), index 1
// is sigma_z = -1 ("|0>"), so sigma_z = diag(+1, -1) and the coherence
// <1|rho|0> is rho(0, 1). With H0 = omega0 sigma_z the commutator gives
//   rho(0, 1)(t) = exp(-Gamma(t)) exp(-2 i omega0 t) rho(0, 1)(0).

#include <complex>

#include "decohere/dephasing/spectral_density.hpp"
#include "decohere/gksl/density_matrix.hpp"
#include "decohere/gksl/generator.hpp"
#include "decohere/numcore/quadrature.hpp"

namespace decohere::dephasing {

using numcore::Complex;
using numcore::QuadratureSpec;

struct DephasingModel {
  double omega0 = 0.0;
  SpectralDensity spectral;
  BathSpec bath;

  friend bool operator==(const DephasingModel&, const DephasingModel&) = default;
};

/// alpha(t) = int_0^inf J(w) [coth(beta w/2) cos(w t) - i sin(w t)] dw.
/// Real part even in t, imaginary part odd.
Complex bath_correlation(const DephasingModel& model, double t,
                         const QuadratureSpec& spec = {});

/// gamma(t) = int_0^inf J(w) coth(beta w/2) sin(w t) / w dw.
double dephasing_rate(const DephasingModel& model, double t,
                      const QuadratureSpec& spec = {});

/// gamma(t) through the time-domain route Re int_0^t alpha(tau) dtau
/// (nested quadrature). Used as an independent cross-check.
double dephasing_rate_time_domain(const DephasingModel& model, double t,
                                  const QuadratureSpec& spec = {});

/// Gamma(t) = int_0^inf J(w) coth(beta w/2) (1 - cos w t) / w^2 dw >= 0.
double decoherence_function(const DephasingModel& model, double t,
                            const QuadratureSpec& spec = {});

/// Gamma(t) as int_0^t gamma(tau) dtau.
double decoherence_function_time_domain(const DephasingModel& model, double t,
                                        const QuadratureSpec& spec = {});

/// Predicted rho(0, 1) at time t. Throws DimensionMismatch unless rho0 is 2x2.
Complex coherence(const DephasingModel& model, const gksl::DensityMatrix& rho0,
                  double t, const QuadratureSpec& spec = {});

struct TimeLocalGenerator {
  gksl::GkslGenerator generator;
  double rate = 0.0;           // gamma(t)
  bool negative_rate = false;  // gamma(t) < 0: not a GKSL generator at t
};

/// The time-local master equation at time t:
///   d rho/dt = -i[omega0 sigma_z, rho] + (gamma(t)/2) (sigma_z rho sigma_z - rho),
/// i.e. H = omega0 sigma_z, L = sigma_z, Kossakowski [gamma(t) / 2]. The
/// factor 1/2 makes the integrated coherence decay as exp(-Gamma(t)) with
/// Gamma = int gamma. Negative rates are flagged, not rejected.
TimeLocalGenerator build_generator_at(const DephasingModel& model, double t,
                                      const QuadratureSpec& spec = {});

}  // namespace decohere::dephasing
