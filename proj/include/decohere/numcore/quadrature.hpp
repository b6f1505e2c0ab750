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

namespace decohere::numcore {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 50000;
  /// Semi-infinite integrals stop at tail_cutoff_multiplier * scale.
  double tail_cutoff_multiplier = 40.0;

  /// Throws InvalidArgument if a field is out of range.
  void validate() const;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
///
/// `breakpoints` (any order, points outside (a, b) ignored) seed the initial
/// partition; use them for known oscillation nodes or kinks. The requested
/// tolerance is max(abs_tol, rel_tol * |value|); once every interval is at
/// its rounding floor the estimate is returned as-is.
///
/// Throws MaxSubdivisions or NonFinite.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    std::span<const double> breakpoints = {});

/// Integral over [a, inf) for integrands that decay exponentially past
/// `scale`: the range is truncated at a + tail_cutoff_multiplier * scale.
QuadratureResult integrate_semi_infinite(
    const RealFunction& f, double a, double scale, const QuadratureSpec& spec,
    std::span<const double> breakpoints = {});

}  // namespace decohere::numcore
