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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/random_models.hpp"
#include "decohere/collisional/momentum_transfer.hpp"
#include "decohere/collisional/position_state.hpp"
#include "decohere/collisional/structure_factor.hpp"
#include "decohere/dephasing/dephasing_model.hpp"
#include "decohere/error.hpp"
#include "decohere/gksl/channel.hpp"
#include "decohere/gksl/propagate.hpp"

namespace fs = std::filesystem;
using namespace decohere;
using numcore::Complex;
using numcore::ComplexMatrix;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst value of a quantity against its bound.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (!(v <= value)) {
      value = v;
      where = at;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double abs_diff(double a, double b) { return std::abs(a - b); }

Outcome gksl_certification() {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  std::uniform_int_distribution<std::size_t> channels(1, 3);
  double min_eig = kInf;
  double drift = 0.0;
  for (int n = 0; n < 50; ++n) {
    const std::size_t d = dim(rng);
    const std::size_t m = channels(rng);
    const auto gen = testing::random_generator(rng, d, m);
    const auto super = gksl::to_superoperator(gen);
    const auto rho0 = gksl::DensityMatrix::from_matrix(testing::random_state(rng, d));
    for (double t : {0.1, 1.0, 10.0}) {
      const auto map = gksl::propagator(super, t);
      const auto cp = gksl::is_completely_positive(gksl::choi_of_propagator(map));
      min_eig = std::min(min_eig, cp.min_eigenvalue);
      drift = std::max(drift, gksl::trace_preservation_defect(map));
      const auto rho = numcore::unvec(
          numcore::multiply(map.matrix, numcore::vec(rho0.matrix())), d);
      drift = std::max(drift, std::abs(rho.trace() - Complex(1.0, 0.0)));
    }
  }
  return {min_eig >= -1e-8 && drift <= 1e-10,
          "50 generators, min Choi eigenvalue " + fmt(min_eig) +
              ", max trace drift " + fmt(drift)};
}

dephasing::DephasingModel model(double lambda, double s, double wc, double beta,
                                double omega0 = 0.0) {
  return {omega0, dephasing::SpectralDensity(lambda, s, wc),
          dephasing::BathSpec(beta)};
}

Outcome dephasing_two_forms() {
  Worst g;
  Worst big;
  for (double lambda : {0.1, 1.0})
    for (double s : {0.5, 1.0, 2.0})
      for (double wc : {1.0, 5.0})
        for (double beta : {0.1, 1.0, kInf}) {
          const auto m = model(lambda, s, wc, beta);
          for (double t : {0.0, 0.5, 2.0, 5.0, 10.0}) {
            const std::string at = "lambda=" + fmt(lambda) + " s=" + fmt(s) +
                                   " wc=" + fmt(wc) + " beta=" + fmt(beta) +
                                   " t=" + fmt(t);
            g.update(abs_diff(dephasing::dephasing_rate_time_domain(m, t),
                           dephasing::dephasing_rate(m, t)),
                     at);
            big.update(abs_diff(dephasing::decoherence_function_time_domain(m, t),
                             dephasing::decoherence_function(m, t)),
                       at);
          }
        }
  return {g.value <= 1e-7 && big.value <= 1e-7,
          "gamma residual " + fmt(g.value) + " (" + g.where +
              "), Gamma residual " + fmt(big.value) + " (" + big.where + ")"};
}

Outcome dephasing_closed_form() {
  const auto m = model(1.0, 1.0, 1.0, kInf);
  const double g = dephasing::dephasing_rate(m, 1.0);
  const double big = dephasing::decoherence_function(m, 1.0);
  const double eg = std::abs(g - 0.5);
  const double eb = std::abs(big - 0.5 * std::log(2.0));
  return {eg <= 1e-8 && eb <= 1e-8,
          "|gamma(1) - 0.5| = " + fmt(eg) + ", |Gamma(1) - ln2/2| = " + fmt(eb)};
}

Outcome dephasing_end_to_end() {
  std::vector<double> grid(50);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 5.0 * i / 49.0;
  const std::vector<Complex> psi{Complex(1.0, 0.0), Complex(0.6, 0.8)};
  const auto rho0 = gksl::DensityMatrix::pure(psi);
  numcore::OdeSpec ode;
  ode.abs_tol = 1e-10;
  ode.rel_tol = 1e-10;
  Worst coh;
  Worst pop;
  for (double s : {0.5, 1.0, 2.0})
    for (double beta : {0.5, 2.0, kInf}) {
      const auto m = model(0.5, s, 1.0, beta, 1.0);
      const auto traj = gksl::integrate_time_dependent(
          [&](double t) { return dephasing::build_generator_at(m, t).generator; },
          rho0, grid, ode);
      const std::string at = "s=" + fmt(s) + " beta=" + fmt(beta);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expect =
            std::exp(-dephasing::decoherence_function(m, grid[i])) *
            std::abs(rho0(0, 1));
        const auto& st = traj.states[i];
        coh.update(std::abs(std::abs(st(0, 1)) - expect), at);
        pop.update(std::max(std::abs(st(0, 0) - rho0(0, 0)),
                            std::abs(st(1, 1) - rho0(1, 1))),
                   at);
      }
    }
  return {coh.value <= 1e-6 && pop.value <= 1e-8,
          "9 models x 50 times, coherence error " + fmt(coh.value) +
              ", population drift " + fmt(pop.value)};
}

Outcome collisional_equivalence() {
  using namespace collisional;
  std::mt19937_64 rng(88);
  std::vector<double> grid(8);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.5 * i;
  const auto rho0 = PositionDensityMatrix::from_matrix(grid, testing::random_state(rng, 8));
  const auto dm0 = gksl::DensityMatrix::from_matrix(rho0.matrix());
  const std::vector<double> times{0.0, 0.5, 1.0, 2.5, 5.0};

  numcore::OdeSpec ode;
  ode.abs_tol = 1e-10;
  ode.rel_tol = 1e-10;
  double ode_err = 0.0;
  const auto gauss = MomentumTransferLaw::gaussian(1.0, 1.0);
  const auto pair = MomentumTransferLaw::two_point(1.3, 0.9);
  for (const auto& [law, n_q] : {std::pair{gauss, std::size_t{64}},
                                 std::pair{pair, std::size_t{2}}}) {
    const auto super = gksl::to_superoperator(build_discretized_generator(law, grid, n_q));
    const auto traj = gksl::integrate_linear(super, dm0, times, ode);
    for (std::size_t i = 0; i < times.size(); ++i) {
      ode_err = std::max(ode_err, numcore::max_abs_difference(
                                      traj.states[i], evolve_exact(rho0, law, times[i]).matrix()));
    }
  }

  // Two atoms are exact: generator entries, exp(tS) and a tight ODE run.
  double exact_err = 0.0;
  const auto gen = build_discretized_generator(pair, grid, 2);
  const auto action = gen.apply(rho0.matrix());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const double rate = -1.3 * (1.0 - std::cos(0.9 * (grid[i] - grid[j])));
      exact_err = std::max(exact_err, std::abs(action(i, j) - rate * rho0(i, j)));
    }
  const auto super = gksl::to_superoperator(gen);
  numcore::OdeSpec tight;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-13;
  const auto traj = gksl::integrate_linear(super, dm0, times, tight);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto exact = evolve_exact(rho0, pair, times[i]).matrix();
    const auto via_map = numcore::unvec(
        numcore::multiply(gksl::propagator(super, times[i]).matrix,
                          numcore::vec(rho0.matrix())),
        8);
    exact_err = std::max(exact_err, numcore::max_abs_difference(via_map, exact));
    exact_err = std::max(exact_err, numcore::max_abs_difference(traj.states[i], exact));
  }
  return {ode_err <= 1e-7 && exact_err <= 1e-12,
          "N=8, t<=5: ODE vs closed form " + fmt(ode_err) +
              ", two-point exact paths " + fmt(exact_err)};
}

Outcome saturation() {
  double worst = 0.0;
  for (double sigma : {0.5, 1.0, 2.0}) {
    const auto law = collisional::MomentumTransferLaw::gaussian(1.0, sigma);
    worst = std::max(worst, std::abs(collisional::decoherence_factor(law, 10.0 / sigma, 1.0) -
                                     std::exp(-1.0)));
  }
  return {worst <= 1e-6, "|factor - e^-1| = " + fmt(worst)};
}

Outcome structure_factor() {
  using namespace collisional;
  double balance = 0.0;
  double sum_rule = 0.0;
  double antisym = 0.0;
  for (double q : {0.3, 1.0, 4.0})
    for (double beta : {0.1, 1.0, 20.0})
      for (double mass : {0.5, 1.0, 10.0}) {
        const GasSpec gas{mass, 1.0, beta, 1.0, 1.0};
        sum_rule = std::max(sum_rule, std::abs(structure_factor_sum_rule(gas, q) - 1.0));
        for (double e : {0.01, 0.1, 0.5, 1.0, 3.0}) {
          const double ratio = mb_structure_factor(gas, q, e) / mb_structure_factor(gas, q, -e);
          const double expect = std::exp(-beta * e);
          balance = std::max(balance, std::abs(ratio - expect) / expect);
          balance = std::max(balance,
                             std::abs(detailed_balance_ratio(gas, q, e) - expect) / expect);
          const double a = fdt_response(gas, q, e);
          const double b = fdt_response(gas, q, -e);
          antisym = std::max(antisym, std::abs(a + b) / std::abs(a));
        }
      }
  return {balance <= 1e-9 && sum_rule <= 1e-8 && antisym <= 1e-9,
          "27 (q, beta, M) points: detailed balance " + fmt(balance) +
              ", sum rule " + fmt(sum_rule) + ", chi'' antisymmetry " + fmt(antisym)};
}

int run_cli(const fs::path& dir, const std::string& args) {
  const std::string cmd = "cd '" + dir.string() + "' && '" + DECOHERE_CLI_PATH +
                          "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cli_contract() {
  const fs::path base = fs::temp_directory_path() /
                        ("decohere_acceptance_" + std::to_string(::getpid()));
  const fs::path first = base / "a";
  const fs::path second = base / "b";
  fs::create_directories(first);
  fs::create_directories(second);
  const std::string dir = DECOHERE_SCENARIO_DIR;
  Outcome out;
  for (const char* name : {"dephasing", "collisional", "gksl"}) {
    const std::string arg = "run '" + dir + "/" + name + ".json'";
    const int c1 = run_cli(first, arg);
    const int c2 = run_cli(second, arg);
    const fs::path csv = fs::path("out") / (std::string(name) + ".csv");
    const std::string a = read_bytes(first / csv);
    const std::string b = read_bytes(second / csv);
    const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b;
    out.pass = out.pass && ok;
    out.detail += std::string(name) + ": exit " + std::to_string(c1) + "/" +
                  std::to_string(c2) + (a == b && !a.empty() ? ", identical CSV" : ", CSV differs") +
                  "; ";
  }
  const int bad = run_cli(first, "run '" + dir + "/invalid_kossakowski.json'");
  out.pass = out.pass && bad == 2;
  out.detail += "invalid_kossakowski: exit " + std::to_string(bad);
  std::error_code ec;
  fs::remove_all(base, ec);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gksl complete positivity", gksl_certification},
      {"dephasing two-form consistency", dephasing_two_forms},
      {"dephasing closed form", dephasing_closed_form},
      {"dephasing end-to-end", dephasing_end_to_end},
      {"collisional equivalence", collisional_equivalence},
      {"collisional saturation", saturation},
      {"structure factor identities", structure_factor},
      {"cli contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
