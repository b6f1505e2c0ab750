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

// Declarative run descriptions. A scenario is a strict JSON document:
//
//   {
//     "model": "dephasing" | "collisional" | "gksl",
//     "parameters": { ...model specific... },
//     "time": {"t_max": 5, "n_points": 100},
//     "numerics": {"quadrature": {...}, "ode": {...}},   (optional)
//     "output": {"csv_path": "out.csv", "report_path": "out.json"}
//   }
//
// Unknown keys anywhere are rejected. README.md documents every block.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "decohere/collisional/momentum_transfer.hpp"
#include "decohere/dephasing/dephasing_model.hpp"
#include "decohere/numcore/matrix.hpp"
#include "decohere/numcore/ode.hpp"
#include "decohere/numcore/quadrature.hpp"

namespace decohere::scenario {

using numcore::ComplexMatrix;

enum class ModelKind { Dephasing, Collisional, Gksl };

const char* to_string(ModelKind kind);

struct TimeGrid {
  double t_max = 1.0;
  std::size_t n_points = 2;

  /// t_i = t_max * i / (n_points - 1).
  std::vector<double> points() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct OutputSpec {
  std::string csv_path;
  std::string report_path;

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct DephasingParams {
  dephasing::DephasingModel model;
  ComplexMatrix initial_state;  // 2x2

  friend bool operator==(const DephasingParams&, const DephasingParams&) = default;
};

/// Default transfer-quadrature size for the Gaussian law.
inline constexpr std::size_t kDefaultTransferNodes = 96;

struct CollisionalParams {
  collisional::MomentumTransferLaw law;
  std::vector<double> grid;
  std::vector<std::size_t> sites;  // equal-amplitude superposition
  std::size_t n_q = kDefaultTransferNodes;

  friend bool operator==(const CollisionalParams&, const CollisionalParams&) = default;
};

struct GkslParams {
  ComplexMatrix hamiltonian;
  std::vector<ComplexMatrix> lindblad_ops;
  ComplexMatrix kossakowski;
  ComplexMatrix initial_state;
  std::vector<double> check_cp_times;

  friend bool operator==(const GkslParams&, const GkslParams&) = default;
};

using ModelParams = std::variant<DephasingParams, CollisionalParams, GkslParams>;

struct Scenario {
  ModelParams parameters;
  TimeGrid time;
  numcore::QuadratureSpec quadrature;
  numcore::OdeSpec ode;
  OutputSpec output;

  ModelKind model() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ParseError ("line L, column C: ...") for malformed JSON and
/// ValidationError naming the key and constraint for anything else.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a file; ParseError if it cannot be read.
Scenario load_scenario(const std::string& path);

/// Canonical JSON for a validated scenario; parse_scenario accepts it and
/// returns an equal Scenario.
std::string serialize_scenario(const Scenario& s);

}  // namespace decohere::scenario
