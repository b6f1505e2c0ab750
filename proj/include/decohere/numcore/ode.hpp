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
#include <functional>
#include <span>
#include <vector>

namespace decohere::numcore {

struct OdeSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  double initial_step = 1e-3;
  std::size_t max_steps = 1'000'000;

  /// Throws InvalidArgument if a field is out of range.
  void validate() const;

  friend bool operator==(const OdeSpec&, const OdeSpec&) = default;
};

/// dy/dt = rhs(t, y), written into `dydt`.
using OdeRhs = std::function<void(double t, std::span<const double> y,
                                  std::span<double> dydt)>;

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
};

/// Dormand-Prince 5(4) with PI step-size control. Steps are shortened to land
/// exactly on every grid time; the returned list holds the state at each
/// entry of `t_grid` (the first one is y0).
///
/// Throws InvalidArgument (grid not strictly ascending), StepUnderflow,
/// MaxSteps, NonFinite.
std::vector<std::vector<double>> ode_solve(const OdeRhs& rhs,
                                           std::span<const double> y0,
                                           std::span<const double> t_grid,
                                           const OdeSpec& spec,
                                           OdeStats* stats = nullptr);

}  // namespace decohere::numcore
