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

#include <functional>
#include <span>
#include <vector>

#include "decohere/gksl/channel.hpp"
#include "decohere/gksl/density_matrix.hpp"
#include "decohere/gksl/generator.hpp"
#include "decohere/numcore/ode.hpp"

namespace decohere::gksl {

/// Drift beyond this during integration raises InvariantViolation.
inline constexpr double kDriftLimit = 1e-6;
/// Tolerance used to validate propagated states.
inline constexpr double kPropagatedStateTolerance = 1e-8;

/// unvec(exp(t S) vec(rho0)). Throws InvalidArgument for t < 0.
DensityMatrix propagate_semigroup(const GkslGenerator& gen,
                                  const DensityMatrix& rho0, double t);

/// States along a time grid. States are plain matrices: with indefinite
/// time-local rates positivity is not guaranteed, only trace and Hermiticity.
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> states;
  double trace_drift_max = 0.0;
  double hermiticity_drift_max = 0.0;
};

using GeneratorAt = std::function<GkslGenerator(double t)>;

/// Integrates d rho/dt = L(t) rho, re-evaluating `gen_at` at every Runge-Kutta
/// stage. Throws InvariantViolation if trace or Hermiticity drift exceeds
/// kDriftLimit.
Trajectory integrate_time_dependent(const GeneratorAt& gen_at,
                                    const DensityMatrix& rho0,
                                    std::span<const double> t_grid,
                                    const numcore::OdeSpec& spec);

/// Same contract for a constant generator given as a superoperator; each
/// right-hand side evaluation is a single matrix-vector product.
Trajectory integrate_linear(const Superoperator& generator,
                            const DensityMatrix& rho0,
                            std::span<const double> t_grid,
                            const numcore::OdeSpec& spec);

/// Solves the master equation from an arbitrary (not necessarily physical)
/// initial matrix, without drift checks.
std::vector<ComplexMatrix> evolve_matrix(const GeneratorAt& gen_at,
                                         const ComplexMatrix& m0,
                                         std::span<const double> t_grid,
                                         const numcore::OdeSpec& spec);

/// The dynamical map from t_grid.front() to each grid time, assembled by
/// evolving every matrix unit. One superoperator per grid entry.
std::vector<Superoperator> time_dependent_propagators(
    const GeneratorAt& gen_at, std::size_t dim, std::span<const double> t_grid,
    const numcore::OdeSpec& spec);

}  // namespace decohere::gksl
