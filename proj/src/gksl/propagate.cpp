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

#include "decohere/gksl/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "decohere/error.hpp"
#include "decohere/numcore/linalg.hpp"

namespace decohere::gksl {
namespace {

std::span<const Complex> as_complex(std::span<const double> y) {
  return {reinterpret_cast<const Complex*>(y.data()), y.size() / 2};
}

std::vector<double> as_reals(std::span<const Complex> z) {
  std::vector<double> out(2 * z.size());
  std::memcpy(out.data(), z.data(), out.size() * sizeof(double));
  return out;
}

ComplexMatrix state_from(std::span<const double> y, std::size_t d) {
  const auto z = as_complex(y);
  return ComplexMatrix(d, d, std::vector<Complex>(z.begin(), z.end()));
}

void copy_into(const ComplexMatrix& m, std::span<double> out) {
  std::memcpy(out.data(), m.data().data(), out.size() * sizeof(double));
}

Trajectory finish(std::span<const double> t_grid,
                  const std::vector<std::vector<double>>& raw, std::size_t d,
                  const DensityMatrix& rho0) {
  Trajectory traj;
  traj.times.assign(t_grid.begin(), t_grid.end());
  const Complex trace0 = rho0.matrix().trace();
  for (const auto& y : raw) {
    ComplexMatrix m = state_from(y, d);
    traj.trace_drift_max =
        std::max(traj.trace_drift_max, std::abs(m.trace() - trace0));
    traj.hermiticity_drift_max = std::max(traj.hermiticity_drift_max,
                                          numcore::hermiticity_deviation(m));
    traj.states.push_back(std::move(m));
  }
  if (traj.trace_drift_max > kDriftLimit ||
      traj.hermiticity_drift_max > kDriftLimit) {
    std::ostringstream msg;
    msg << "integration drift exceeded " << kDriftLimit << " (trace "
        << traj.trace_drift_max << ", hermiticity "
        << traj.hermiticity_drift_max << ")";
    throw Error(ErrorCode::InvariantViolation, msg.str());
  }
  return traj;
}

}  // namespace

DensityMatrix propagate_semigroup(const GkslGenerator& gen,
                                  const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "propagation time must be >= 0");
  }
  if (rho0.dim() != gen.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and generator dimensions");
  }
  if (t == 0.0) return rho0;
  const Superoperator p = propagator(gen, t);
  return DensityMatrix::from_matrix(p.apply(rho0.matrix()),
                                    kPropagatedStateTolerance);
}

std::vector<ComplexMatrix> evolve_matrix(const GeneratorAt& gen_at,
                                         const ComplexMatrix& m0,
                                         std::span<const double> t_grid,
                                         const numcore::OdeSpec& spec) {
  const std::size_t d = m0.rows();
  auto rhs = [&](double t, std::span<const double> y, std::span<double> dy) {
    const GkslGenerator gen = gen_at(t);
    if (gen.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator dimension changed during integration");
    }
    copy_into(gen.apply(state_from(y, d)), dy);
  };
  const auto raw = numcore::ode_solve(rhs, as_reals(m0.data()), t_grid, spec);
  std::vector<ComplexMatrix> out;
  out.reserve(raw.size());
  for (const auto& y : raw) out.push_back(state_from(y, d));
  return out;
}

Trajectory integrate_time_dependent(const GeneratorAt& gen_at,
                                    const DensityMatrix& rho0,
                                    std::span<const double> t_grid,
                                    const numcore::OdeSpec& spec) {
  const std::size_t d = rho0.dim();
  auto rhs = [&](double t, std::span<const double> y, std::span<double> dy) {
    const GkslGenerator gen = gen_at(t);
    if (gen.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator dimension does not match the state");
    }
    copy_into(gen.apply(state_from(y, d)), dy);
  };
  const auto raw =
      numcore::ode_solve(rhs, as_reals(rho0.matrix().data()), t_grid, spec);
  return finish(t_grid, raw, d, rho0);
}

Trajectory integrate_linear(const Superoperator& generator,
                            const DensityMatrix& rho0,
                            std::span<const double> t_grid,
                            const numcore::OdeSpec& spec) {
  const std::size_t d = rho0.dim();
  if (generator.dim != d) {
    throw Error(ErrorCode::DimensionMismatch,
                "superoperator dimension does not match the state");
  }
  // Work on vec(rho) (column-stacked); convert back at the end.
  const std::size_t n = d * d;
  auto rhs = [&](double, std::span<const double> y, std::span<double> dy) {
    const auto z = as_complex(y);
    const auto out = numcore::multiply(generator.matrix, z);
    std::memcpy(dy.data(), out.data(), 2 * n * sizeof(double));
  };
  const auto raw = numcore::ode_solve(
      rhs, as_reals(numcore::vec(rho0.matrix())), t_grid, spec);
  std::vector<std::vector<double>> row_major;
  row_major.reserve(raw.size());
  for (const auto& y : raw) {
    const ComplexMatrix m = numcore::unvec(as_complex(y), d);
    row_major.push_back(as_reals(m.data()));
  }
  return finish(t_grid, row_major, d, rho0);
}

std::vector<Superoperator> time_dependent_propagators(
    const GeneratorAt& gen_at, std::size_t dim, std::span<const double> t_grid,
    const numcore::OdeSpec& spec) {
  const std::size_t d = dim;
  std::vector<Superoperator> maps(t_grid.size(),
                                  Superoperator{d, ComplexMatrix(d * d)});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d);
      unit(i, j) = 1.0;
      const auto images = evolve_matrix(gen_at, unit, t_grid, spec);
      const std::size_t col = i + j * d;
      for (std::size_t k = 0; k < images.size(); ++k) {
        const auto v = numcore::vec(images[k]);
        for (std::size_t r = 0; r < v.size(); ++r) maps[k].matrix(r, col) = v[r];
      }
    }
  return maps;
}

}  // namespace decohere::gksl
