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

#include "decohere/dephasing/dephasing_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "decohere/error.hpp"
#include "decohere/numcore/matrix.hpp"

namespace decohere::dephasing {

using numcore::ComplexMatrix;
using numcore::RealFunction;

namespace {

// Oscillatory tails get a breakpoint every half period once the integrand
// has this many oscillations below the cutoff.
constexpr double kOscillationThreshold = 20.0;

void require_finite_time(double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument, "time must be finite");
  }
}

// J(w) coth(beta w / 2), the weight shared by every frequency integrand.
double weighted_density(const DephasingModel& m, double w) {
  if (w <= 0.0) return 0.0;
  return m.spectral(w) * m.bath.thermal_factor(w);
}

// int_0^inf g(w) dw where g carries the spectral weight. The segment near the
// origin is integrated in u = sqrt(w) to tame w^(s-1) behaviour; the rest runs
// to the tail cutoff with breakpoints at the zeros of the oscillation.
double frequency_integral(const DephasingModel& m, double t,
                          const RealFunction& g, const QuadratureSpec& spec) {
  spec.validate();
  const double wc = m.spectral.cutoff();
  const double upper = spec.tail_cutoff_multiplier * wc;
  double w0 = wc;
  if (t > 0.0) w0 = std::min(w0, 1.0 / t);
  w0 = std::min(w0, upper);

  const RealFunction near = [&g](double u) {
    return u > 0.0 ? 2.0 * u * g(u * u) : 0.0;
  };
  double total = numcore::integrate_adaptive(near, 0.0, std::sqrt(w0), spec)
                     .value;

  std::vector<double> breaks;
  if (t * wc > kOscillationThreshold) {
    const double step = std::numbers::pi / t;
    for (double k = std::ceil(w0 / step); k * step < upper; k += 1.0) {
      if (k * step > w0) breaks.push_back(k * step);
    }
  }
  total += numcore::integrate_adaptive(g, w0, upper, spec, breaks).value;
  return total;
}

QuadratureSpec inner_spec(const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  inner.abs_tol = std::max(1e-14, spec.abs_tol * 1e-2);
  inner.rel_tol = std::max(1e-14, spec.rel_tol * 1e-2);
  return inner;
}

}  // namespace

Complex bath_correlation(const DephasingModel& model, double t,
                         const QuadratureSpec& spec) {
  require_finite_time(t);
  const double at = std::abs(t);
  const double re = frequency_integral(
      model, at,
      [&](double w) { return weighted_density(model, w) * std::cos(w * at); },
      spec);
  double im = 0.0;
  if (at > 0.0) {
    im = -frequency_integral(
        model, at,
        [&](double w) {
          return w > 0.0 ? model.spectral(w) * std::sin(w * at) : 0.0;
        },
        spec);
  }
  return {re, t < 0.0 ? -im : im};
}

double dephasing_rate(const DephasingModel& model, double t,
                      const QuadratureSpec& spec) {
  require_finite_time(t);
  if (t == 0.0) return 0.0;
  const double at = std::abs(t);
  const double v = frequency_integral(
      model, at,
      [&](double w) {
        return weighted_density(model, w) * std::sin(w * at) / w;
      },
      spec);
  return t < 0.0 ? -v : v;
}

double dephasing_rate_time_domain(const DephasingModel& model, double t,
                                  const QuadratureSpec& spec) {
  require_finite_time(t);
  if (t == 0.0) return 0.0;
  const double at = std::abs(t);
  const QuadratureSpec inner = inner_spec(spec);
  const double v =
      numcore::integrate_adaptive(
          [&](double tau) { return bath_correlation(model, tau, inner).real(); },
          0.0, at, spec)
          .value;
  return t < 0.0 ? -v : v;
}

double decoherence_function(const DephasingModel& model, double t,
                            const QuadratureSpec& spec) {
  require_finite_time(t);
  if (t == 0.0) return 0.0;
  const double at = std::abs(t);
  return frequency_integral(
      model, at,
      [&](double w) {
        const double s = std::sin(0.5 * w * at);
        return weighted_density(model, w) * 2.0 * s * s / (w * w);
      },
      spec);
}

double decoherence_function_time_domain(const DephasingModel& model, double t,
                                        const QuadratureSpec& spec) {
  require_finite_time(t);
  if (t == 0.0) return 0.0;
  const double at = std::abs(t);
  const QuadratureSpec inner = inner_spec(spec);
  return numcore::integrate_adaptive(
             [&](double tau) { return dephasing_rate(model, tau, inner); }, 0.0,
             at, spec)
      .value;
}

Complex coherence(const DephasingModel& model, const gksl::DensityMatrix& rho0,
                  double t, const QuadratureSpec& spec) {
  if (rho0.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "dephasing coherence needs a qubit state, got dim " +
                    std::to_string(rho0.dim()));
  }
  const double big_gamma = decoherence_function(model, t, spec);
  const Complex phase = std::polar(1.0, -2.0 * model.omega0 * t);
  return rho0(0, 1) * std::exp(-big_gamma) * phase;
}

TimeLocalGenerator build_generator_at(const DephasingModel& model, double t,
                                      const QuadratureSpec& spec) {
  const double rate = dephasing_rate(model, t, spec);
  ComplexMatrix h = numcore::pauli::z();
  h *= Complex(model.omega0, 0.0);
  ComplexMatrix a(1, 1);
  a(0, 0) = 0.5 * rate;
  gksl::GkslGenerator gen(std::move(h), {numcore::pauli::z()}, std::move(a),
                          gksl::RateCheck::AllowIndefinite);
  return {std::move(gen), rate, rate < 0.0};
}

}  // namespace decohere::dephasing
