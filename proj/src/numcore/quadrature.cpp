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

#include "decohere/numcore/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "decohere/error.hpp"

namespace decohere::numcore {
namespace {

// Kronrod abscissae (descending, last is the centre) and weights; every
// second abscissa starting at index 1 is a 7-point Gauss node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Interval {
  double a;
  double b;
  double value;
  double error;
  double roundoff;  // rounding floor of `error`
  bool operator<(const Interval& other) const { return error < other.error; }
};

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw Error(ErrorCode::NonFinite,
                "integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Interval gauss_kronrod(const RealFunction& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, centre);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = checked(f, centre - dx);
    fv2[j] = checked(f, centre + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double abs_half = std::abs(half);
  resasc *= abs_half;
  resabs *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  return Interval{a, b, resk * half, std::max(err, floor), floor};
}

bool refinable(const Interval& iv) {
  if (iv.error <= iv.roundoff) return false;
  const double mid = 0.5 * (iv.a + iv.b);
  return mid > iv.a && mid < iv.b &&
         (iv.b - iv.a) > 64.0 * kEps * std::max(std::abs(iv.a), std::abs(iv.b));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 1e-14) || !(rel_tol >= 1e-14)) {
    throw Error(ErrorCode::InvalidArgument,
                "quadrature tolerances must be >= 1e-14");
  }
  if (max_subdivisions <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "quadrature max_subdivisions must be positive");
  }
  if (!(tail_cutoff_multiplier >= 10.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "quadrature tail_cutoff_multiplier must be >= 10");
  }
}

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    std::span<const double> breakpoints) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument,
                "integrate_adaptive needs finite limits");
  }
  if (a == b) return {};
  const double sign = b > a ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints)
    if (p > lo && p < hi) cuts.push_back(p);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Interval> active;
  double value = 0.0;
  double error = 0.0;
  double settled_value = 0.0;
  double settled_error = 0.0;
  int evaluations = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval iv = gauss_kronrod(f, cuts[i], cuts[i + 1]);
    evaluations += 15;
    value += iv.value;
    error += iv.error;
    if (refinable(iv)) {
      active.push(iv);
    } else {
      settled_value += iv.value;
      settled_error += iv.error;
    }
  }

  int subdivisions = 0;
  while (!active.empty() &&
         error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    if (subdivisions >= spec.max_subdivisions) {
      throw Error(ErrorCode::MaxSubdivisions,
                  "adaptive quadrature exhausted " +
                      std::to_string(spec.max_subdivisions) +
                      " subdivisions (error estimate " +
                      std::to_string(error) + ")");
    }
    const Interval worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Interval left = gauss_kronrod(f, worst.a, mid);
    const Interval right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    ++subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    for (const Interval& part : {left, right}) {
      if (refinable(part)) {
        active.push(part);
      } else {
        settled_value += part.value;
        settled_error += part.error;
      }
    }
  }

  // Re-sum to drop the drift of the running totals.
  value = settled_value;
  error = settled_error;
  while (!active.empty()) {
    value += active.top().value;
    error += active.top().error;
    active.pop();
  }
  return {sign * value, error, evaluations};
}

QuadratureResult integrate_semi_infinite(const RealFunction& f, double a,
                                         double scale,
                                         const QuadratureSpec& spec,
                                         std::span<const double> breakpoints) {
  spec.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument,
                "semi-infinite quadrature needs a positive finite scale");
  }
  return integrate_adaptive(f, a, a + spec.tail_cutoff_multiplier * scale,
                            spec, breakpoints);
}

}  // namespace decohere::numcore
