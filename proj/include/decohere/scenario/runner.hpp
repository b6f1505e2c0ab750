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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "decohere/scenario/scenario.hpp"

namespace decohere::scenario {

/// Drift or residual above this marks the run as violated.
inline constexpr double kViolationThreshold = 1e-6;
/// Choi eigenvalues below this fail the CP check.
inline constexpr double kCpThreshold = -1e-8;

struct InvariantReport {
  double trace_drift_max = 0.0;
  double hermiticity_drift_max = 0.0;
  std::optional<double> min_choi_eigenvalue;
  /// Per requested time, when a CP check ran.
  std::vector<std::pair<double, double>> choi_eigenvalues;
  std::map<std::string, double> cross_check_residuals;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  std::optional<std::string> seed;

  bool passed() const { return violations.empty(); }
};

struct RunResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  InvariantReport report;
};

/// Evaluates the scenario on its time grid. Model errors propagate with the
/// model name prepended.
RunResult run_scenario(const Scenario& s);

/// Minimum Choi eigenvalue of the dynamical map at each time (t >= 0).
InvariantReport check_cp(const Scenario& s, std::span<const double> times);

/// Header plus one line per row, 17 significant digits, LF endings.
std::string format_csv(const RunResult& r);

std::string report_to_json(const InvariantReport& r);

}  // namespace decohere::scenario
