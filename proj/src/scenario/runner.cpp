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

#include "decohere/scenario/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

#include "decohere/collisional/position_state.hpp"
#include "decohere/error.hpp"
#include "decohere/gksl/channel.hpp"
#include "decohere/gksl/density_matrix.hpp"
#include "decohere/gksl/propagate.hpp"

namespace decohere::scenario {

namespace {

using numcore::Complex;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// |a - b| scaled by max(1, |b|): absolute for O(1) values, relative above.
double mixed_residual(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

double trace_drift(const ComplexMatrix& m) {
  return std::abs(m.trace() - Complex(1.0, 0.0));
}

void read_seed(InvariantReport& r) {
  if (const char* s = std::getenv("DECOHERE_SEED")) r.seed = s;
}

void judge(InvariantReport& r) {
  const auto over = [&](const std::string& name, double v) {
    if (!(v <= kViolationThreshold)) {
      r.violations.push_back(name + " = " + fmt(v) + " exceeds " +
                             fmt(kViolationThreshold));
    }
  };
  over("trace_drift_max", r.trace_drift_max);
  over("hermiticity_drift_max", r.hermiticity_drift_max);
  for (const auto& [name, v] : r.cross_check_residuals) over(name, v);
  for (const auto& [t, v] : r.choi_eigenvalues) {
    if (!(v >= kCpThreshold)) {
      r.violations.push_back("min Choi eigenvalue " + fmt(v) + " at t = " +
                             fmt(t) + " is below " + fmt(kCpThreshold));
    }
  }
}

template <class F>
auto with_context(const char* model, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(model) + ": " + e.what());
  }
}

gksl::GeneratorAt dephasing_generator(const dephasing::DephasingModel& m,
                                      const numcore::QuadratureSpec& q) {
  return [m, q](double t) { return dephasing::build_generator_at(m, t, q).generator; };
}

RunResult run_dephasing(const Scenario& s, const DephasingParams& p) {
  const auto grid = s.time.points();
  const auto rho0 = gksl::DensityMatrix::from_matrix(p.initial_state);
  const auto traj = gksl::integrate_time_dependent(
      dephasing_generator(p.model, s.quadrature), rho0, grid, s.ode);

  RunResult r;
  r.columns = {"t",           "gamma",        "Gamma",
               "coherence_re", "coherence_im", "coherence_abs",
               "coherence_abs_numeric", "trace_drift"};
  double gamma_res = 0.0;
  double big_res = 0.0;
  double coh_res = 0.0;
  double pop_drift = 0.0;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const double g = dephasing::dephasing_rate(p.model, t, s.quadrature);
    const double big = dephasing::decoherence_function(p.model, t, s.quadrature);
    const Complex c = dephasing::coherence(p.model, rho0, t, s.quadrature);
    const ComplexMatrix& st = traj.states[i];
    const double drift = trace_drift(st);
    r.rows.push_back({t, g, big, c.real(), c.imag(), std::abs(c),
                      std::abs(st(0, 1)), drift});
    if (g < 0.0) ++negative;
    gamma_res = std::max(gamma_res, mixed_residual(
        dephasing::dephasing_rate_time_domain(p.model, t, s.quadrature), g));
    big_res = std::max(big_res, mixed_residual(
        dephasing::decoherence_function_time_domain(p.model, t, s.quadrature), big));
    coh_res = std::max(coh_res, std::abs(st(0, 1) - c));
    pop_drift = std::max({pop_drift, std::abs(st(0, 0) - rho0(0, 0)),
                          std::abs(st(1, 1) - rho0(1, 1))});
  }
  r.report.trace_drift_max = traj.trace_drift_max;
  r.report.hermiticity_drift_max = traj.hermiticity_drift_max;
  r.report.cross_check_residuals = {
      {"gamma_two_forms", gamma_res},
      {"Gamma_two_forms", big_res},
      {"coherence_analytic_vs_numeric", coh_res},
      {"population_drift", pop_drift}};
  if (negative > 0) {
    r.report.warnings.push_back("dephasing rate negative at " +
                                std::to_string(negative) +
                                " grid time(s); generator not GKSL there");
  }
  return r;
}

RunResult run_collisional(const Scenario& s, const CollisionalParams& p) {
  const auto grid = s.time.points();
  const auto rho0 = collisional::PositionDensityMatrix::superposition(p.grid, p.sites);
  const auto gen = collisional::build_discretized_generator(p.law, p.grid, p.n_q);
  const auto traj = gksl::integrate_linear(
      gksl::to_superoperator(gen), gksl::DensityMatrix::from_matrix(rho0.matrix()),
      grid, s.ode);

  const std::size_t a = p.sites.front();
  const std::size_t b = p.sites.back();
  const double dx = p.grid[b] - p.grid[a];
  RunResult r;
  r.columns = {"t", "offdiag_abs", "offdiag_abs_numeric", "factor", "trace_drift"};
  double res = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const auto exact = collisional::evolve_exact(rho0, p.law, t);
    const ComplexMatrix& st = traj.states[i];
    r.rows.push_back({t, std::abs(exact(a, b)), std::abs(st(a, b)),
                      collisional::decoherence_factor(p.law, dx, t),
                      trace_drift(st)});
    res = std::max(res, numcore::max_abs_difference(st, exact.matrix()));
  }
  r.report.trace_drift_max = traj.trace_drift_max;
  r.report.hermiticity_drift_max = traj.hermiticity_drift_max;
  r.report.cross_check_residuals = {{"exact_vs_generator", res}};
  return r;
}

RunResult run_gksl(const Scenario& s, const GkslParams& p) {
  const auto grid = s.time.points();
  const gksl::GkslGenerator gen(p.hamiltonian, p.lindblad_ops, p.kossakowski);
  const auto rho0 = gksl::DensityMatrix::from_matrix(p.initial_state);
  const auto super = gksl::to_superoperator(gen);
  const auto traj = gksl::integrate_linear(super, rho0, grid, s.ode);

  const std::size_t d = gen.dim();
  RunResult r;
  r.columns.push_back("t");
  for (std::size_t k = 0; k < d; ++k) {
    r.columns.push_back("population_" + std::to_string(k));
  }
  r.columns.insert(r.columns.end(), {"coherence_abs", "purity", "trace_drift"});
  double res = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ComplexMatrix& st = traj.states[i];
    std::vector<double> row{grid[i]};
    for (std::size_t k = 0; k < d; ++k) row.push_back(st(k, k).real());
    row.push_back(d > 1 ? std::abs(st(0, 1)) : 0.0);
    row.push_back((st * st).trace().real());
    row.push_back(trace_drift(st));
    r.rows.push_back(std::move(row));
    const auto exact = gksl::propagate_semigroup(gen, rho0, grid[i]);
    res = std::max(res, numcore::max_abs_difference(st, exact.matrix()));
  }
  r.report.trace_drift_max = traj.trace_drift_max;
  r.report.hermiticity_drift_max = traj.hermiticity_drift_max;
  r.report.cross_check_residuals = {{"semigroup_vs_ode", res}};
  return r;
}

std::vector<std::pair<double, double>> choi_minima(const Scenario& s,
                                                   std::span<const double> times) {
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw Error(ErrorCode::InvalidArgument,
                  "CP check times must be finite and >= 0");
    }
  }
  const auto min_eig = [](const gksl::Superoperator& map) {
    return gksl::is_completely_positive(gksl::choi_of_propagator(map)).min_eigenvalue;
  };
  std::vector<std::pair<double, double>> out;
  if (const auto* d = std::get_if<DephasingParams>(&s.parameters)) {
    std::vector<double> grid{0.0};
    grid.insert(grid.end(), times.begin(), times.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const auto maps = gksl::time_dependent_propagators(
        dephasing_generator(d->model, s.quadrature), 2, grid, s.ode);
    for (double t : times) {
      const auto k = static_cast<std::size_t>(
          std::lower_bound(grid.begin(), grid.end(), t) - grid.begin());
      out.emplace_back(t, min_eig(maps[k]));
    }
    return out;
  }
  gksl::Superoperator super{0, ComplexMatrix()};
  if (const auto* c = std::get_if<CollisionalParams>(&s.parameters)) {
    super = gksl::to_superoperator(
        collisional::build_discretized_generator(c->law, c->grid, c->n_q));
  } else {
    const auto& g = std::get<GkslParams>(s.parameters);
    super = gksl::to_superoperator(
        gksl::GkslGenerator(g.hamiltonian, g.lindblad_ops, g.kossakowski));
  }
  for (double t : times) out.emplace_back(t, min_eig(gksl::propagator(super, t)));
  return out;
}

void merge_cp(InvariantReport& r, std::vector<std::pair<double, double>> minima) {
  r.choi_eigenvalues = std::move(minima);
  if (r.choi_eigenvalues.empty()) return;
  double m = r.choi_eigenvalues.front().second;
  for (const auto& [t, v] : r.choi_eigenvalues) m = std::min(m, v);
  r.min_choi_eigenvalue = m;
}

}  // namespace

RunResult run_scenario(const Scenario& s) {
  const char* name = to_string(s.model());
  RunResult r = with_context(name, [&] {
    return std::visit(
        [&](const auto& p) -> RunResult {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, DephasingParams>) {
            return run_dephasing(s, p);
          } else if constexpr (std::is_same_v<P, CollisionalParams>) {
            return run_collisional(s, p);
          } else {
            RunResult g = run_gksl(s, p);
            if (!p.check_cp_times.empty()) {
              merge_cp(g.report, choi_minima(s, p.check_cp_times));
            }
            return g;
          }
        },
        s.parameters);
  });
  read_seed(r.report);
  judge(r.report);
  return r;
}

InvariantReport check_cp(const Scenario& s, std::span<const double> times) {
  InvariantReport r;
  merge_cp(r, with_context(to_string(s.model()),
                           [&] { return choi_minima(s, times); }));
  read_seed(r);
  judge(r);
  return r;
}

std::string format_csv(const RunResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += r.columns[i];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += fmt(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string report_to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["trace_drift_max"] = r.trace_drift_max;
  j["hermiticity_drift_max"] = r.hermiticity_drift_max;
  if (r.min_choi_eigenvalue) {
    j["min_choi_eigenvalue"] = *r.min_choi_eigenvalue;
  } else {
    j["min_choi_eigenvalue"] = nullptr;
  }
  auto cp = nlohmann::ordered_json::array();
  for (const auto& [t, v] : r.choi_eigenvalues) {
    cp.push_back({{"t", t}, {"min_eigenvalue", v}});
  }
  j["choi_eigenvalues"] = std::move(cp);
  j["cross_check_residuals"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.cross_check_residuals) j["cross_check_residuals"][k] = v;
  j["violations"] = r.violations;
  j["warnings"] = r.warnings;
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace decohere::scenario
