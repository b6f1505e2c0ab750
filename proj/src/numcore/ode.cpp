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

#include "decohere/numcore/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "decohere/error.hpp"
#include "decohere/numcore/kernels.hpp"

namespace decohere::numcore {
namespace {

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// 5th minus 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller constants (Hairer, Norsett & Wanner, DOPRI5).
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;
constexpr double kSafety = 0.9;
constexpr double kMaxShrink = 5.0;   // h may shrink by at most 1/5
constexpr double kMaxGrow = 0.1;     // ... and grow by at most 10

}  // namespace

void OdeSpec::validate() const {
  if (!(abs_tol >= 1e-13) || !(rel_tol >= 1e-13)) {
    throw Error(ErrorCode::InvalidArgument, "ODE tolerances must be >= 1e-13");
  }
  if (!(initial_step > 0.0) || !std::isfinite(initial_step)) {
    throw Error(ErrorCode::InvalidArgument, "ODE initial_step must be > 0");
  }
  if (max_steps == 0) {
    throw Error(ErrorCode::InvalidArgument, "ODE max_steps must be positive");
  }
}

std::vector<std::vector<double>> ode_solve(const OdeRhs& rhs,
                                           std::span<const double> y0,
                                           std::span<const double> t_grid,
                                           const OdeSpec& spec,
                                           OdeStats* stats) {
  spec.validate();
  if (t_grid.empty()) return {};
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  "ODE time grid must be strictly ascending");
    }
  }
  const auto& kern = kernels::active();
  const std::size_t n = y0.size();
  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  std::vector<double> stage(n), ynew(n), err(n);

  OdeStats local;
  auto eval = [&](double t, const std::vector<double>& state,
                  std::vector<double>& out) {
    rhs(t, state, out);
    ++local.rhs_evaluations;
  };
  auto combine = [&](const std::vector<double>& base,
                     std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                     std::vector<double>& out) {
    out = base;
    for (const auto& [coef, k] : terms)
      if (coef != 0.0) kern.daxpy(n, coef, k->data(), out.data());
  };

  std::vector<std::vector<double>> result;
  result.reserve(t_grid.size());
  result.push_back(y);

  double t = t_grid.front();
  double h = std::min(spec.initial_step, t_grid.back() - t);
  double facold = 1e-4;
  bool last_rejected = false;
  std::size_t attempts = 0;
  eval(t, y, k1);

  for (std::size_t next = 1; next < t_grid.size(); ++next) {
    const double target = t_grid[next];
    while (t < target) {
      if (attempts++ >= spec.max_steps) {
        throw Error(ErrorCode::MaxSteps,
                    "ODE integrator exceeded " +
                        std::to_string(spec.max_steps) + " steps at t = " +
                        std::to_string(t));
      }
      bool lands = false;
      double step = h;
      if (t + step >= target || target - (t + step) < 1e-12 * std::abs(target)) {
        step = target - t;
        lands = true;
      }
      if (step < 16.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(t))) {
        throw Error(ErrorCode::StepUnderflow,
                    "ODE step size underflow at t = " + std::to_string(t));
      }

      combine(y, {{step * a21, &k1}}, stage);
      eval(t + c2 * step, stage, k2);
      combine(y, {{step * a31, &k1}, {step * a32, &k2}}, stage);
      eval(t + c3 * step, stage, k3);
      combine(y, {{step * a41, &k1}, {step * a42, &k2}, {step * a43, &k3}},
              stage);
      eval(t + c4 * step, stage, k4);
      combine(y,
              {{step * a51, &k1}, {step * a52, &k2}, {step * a53, &k3},
               {step * a54, &k4}},
              stage);
      eval(t + c5 * step, stage, k5);
      combine(y,
              {{step * a61, &k1}, {step * a62, &k2}, {step * a63, &k3},
               {step * a64, &k4}, {step * a65, &k5}},
              stage);
      eval(t + step, stage, k6);
      combine(y,
              {{step * a71, &k1}, {step * a73, &k3}, {step * a74, &k4},
               {step * a75, &k5}, {step * a76, &k6}},
              ynew);
      const double t_new = lands ? target : t + step;
      eval(t_new, ynew, k7);

      std::fill(err.begin(), err.end(), 0.0);
      combine(err,
              {{step * e1, &k1}, {step * e3, &k3}, {step * e4, &k4},
               {step * e5, &k5}, {step * e6, &k6}, {step * e7, &k7}},
              err);
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double sc = spec.abs_tol +
                          spec.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const double r = err[i] / sc;
        norm += r * r;
      }
      norm = n == 0 ? 0.0 : std::sqrt(norm / static_cast<double>(n));
      if (!std::isfinite(norm)) {
        throw Error(ErrorCode::NonFinite,
                    "ODE right-hand side produced NaN/Inf near t = " +
                        std::to_string(t));
      }

      const double fac11 = std::pow(norm, kExpo);
      if (norm <= 1.0) {
        double fac = fac11 / std::pow(facold, kBeta);
        fac = std::clamp(fac / kSafety, kMaxGrow, kMaxShrink);
        double h_new = step / fac;
        if (last_rejected) h_new = std::min(h_new, step);
        facold = std::max(norm, 1e-4);
        ++local.accepted;
        last_rejected = false;
        t = t_new;
        y.swap(ynew);
        k1.swap(k7);
        // A step shortened to hit the grid says little about the natural
        // step size; keep the larger of the two.
        h = lands ? std::max(h_new, h) : h_new;
      } else {
        ++local.rejected;
        last_rejected = true;
        h = step / std::min(kMaxShrink, fac11 / kSafety);
      }
    }
    result.push_back(y);
  }
  if (stats != nullptr) *stats = local;
  return result;
}

}  // namespace decohere::numcore
