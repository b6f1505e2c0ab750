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

#include "decohere/scenario/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "decohere/collisional/position_state.hpp"
#include "decohere/error.hpp"
#include "decohere/gksl/density_matrix.hpp"
#include "decohere/gksl/generator.hpp"

namespace decohere::scenario {

using json = nlohmann::json;
using numcore::Complex;

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::ValidationError, msg);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Strict view of a JSON object: every key must be consumed before finish().
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) invalid(label() + " must be an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& at(const std::string& key) {
    if (!j_.contains(key)) invalid("missing required key " + join(path_, key));
    seen_.insert(key);
    return j_.at(key);
  }

  const json* find(const std::string& key) {
    if (!j_.contains(key)) return nullptr;
    seen_.insert(key);
    return &j_.at(key);
  }

  std::string path(const std::string& key) const { return join(path_, key); }

  void finish() const {
    std::string unknown;
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.count(k)) unknown += (unknown.empty() ? "" : ", ") + k;
    }
    if (!unknown.empty()) {
      invalid("unknown key(s) in " + label() + ": " + unknown);
    }
  }

 private:
  std::string label() const { return path_.empty() ? "scenario" : path_; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) invalid(path + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(path + " must be finite");
  return v;
}

std::size_t as_count(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v >= 0.0 && v == std::floor(v) && v < 1e15) {
      return static_cast<std::size_t>(v);
    }
  }
  invalid(path + " must be a non-negative integer");
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) invalid(path + " must be a string");
  return j.get<std::string>();
}

Complex as_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {as_number(j, path), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
  }
  invalid(path + " must be a number or [re, im]");
}

ComplexMatrix as_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    invalid(path + " must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].empty()) {
      invalid(path + "[" + std::to_string(r) + "] must be a non-empty row");
    }
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) invalid(path + " has rows of unequal length");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = as_complex(j[r][c], path + "[" + std::to_string(r) + "][" +
                                        std::to_string(c) + "]");
    }
  }
  return m;
}

std::vector<double> as_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path + " must be an array of numbers");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

// Runs a module constructor and turns its errors into validation errors.
template <class F>
auto checked(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    invalid(path + ": " + e.what());
  }
}

ComplexMatrix density_matrix(const json& j, const std::string& path,
                             std::size_t dim) {
  ComplexMatrix m = as_matrix(j, path);
  if (m.rows() != dim || m.cols() != dim) {
    invalid(path + " must be " + std::to_string(dim) + "x" +
            std::to_string(dim));
  }
  checked(path, [&] { return gksl::DensityMatrix::from_matrix(m); });
  return m;
}

dephasing::DephasingModel parse_dephasing_model(Fields& f) {
  const double omega0 = as_number(f.at("omega0"), f.path("omega0"));
  Fields sp(f.at("spectral"), f.path("spectral"));
  const double coupling = as_number(sp.at("coupling"), sp.path("coupling"));
  const double s = as_number(sp.at("s"), sp.path("s"));
  const double cutoff = as_number(sp.at("cutoff"), sp.path("cutoff"));
  sp.finish();
  if (coupling < 0.0) invalid(sp.path("coupling") + " must be >= 0");
  if (!(s > 0.0)) invalid(sp.path("s") + " must be > 0");
  if (!(cutoff > 0.0)) invalid(sp.path("cutoff") + " must be > 0");

  const json& b = f.at("beta");
  double beta = 0.0;
  if (b.is_string()) {
    if (b.get<std::string>() != "inf") {
      invalid(f.path("beta") + " must be a number > 0 or \"inf\"");
    }
    beta = std::numeric_limits<double>::infinity();
  } else {
    beta = as_number(b, f.path("beta"));
    if (!(beta > 0.0)) invalid(f.path("beta") + " must be > 0");
  }
  return {omega0, dephasing::SpectralDensity(coupling, s, cutoff),
          dephasing::BathSpec(beta)};
}

DephasingParams parse_dephasing(const json& j) {
  Fields f(j, "parameters");
  auto model = parse_dephasing_model(f);
  ComplexMatrix rho0;
  const json& init = f.at("initial_state");
  if (init.is_string()) {
    if (init.get<std::string>() != "plus") {
      invalid(f.path("initial_state") + " must be \"plus\" or a 2x2 matrix");
    }
    rho0 = ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}};
  } else {
    rho0 = density_matrix(init, f.path("initial_state"), 2);
  }
  f.finish();
  return {std::move(model), std::move(rho0)};
}

collisional::MomentumTransferLaw parse_law(Fields& f) {
  const double rate = as_number(f.at("rate"), f.path("rate"));
  if (!(rate > 0.0)) invalid(f.path("rate") + " must be > 0");
  Fields law(f.at("law"), f.path("law"));
  const std::string type = as_string(law.at("type"), law.path("type"));
  if (type == "gaussian") {
    const double sigma = as_number(law.at("sigma_q"), law.path("sigma_q"));
    law.finish();
    if (!(sigma > 0.0)) invalid(law.path("sigma_q") + " must be > 0");
    return collisional::MomentumTransferLaw::gaussian(rate, sigma);
  }
  if (type == "two_point") {
    const double q0 = as_number(law.at("q0"), law.path("q0"));
    law.finish();
    if (!(q0 > 0.0)) invalid(law.path("q0") + " must be > 0");
    return collisional::MomentumTransferLaw::two_point(rate, q0);
  }
  invalid(law.path("type") + " must be \"gaussian\" or \"two_point\"");
}

std::vector<double> parse_grid(const json& j, const std::string& path) {
  Fields g(j, path);
  std::vector<double> grid;
  if (g.has("positions")) {
    grid = as_numbers(g.at("positions"), g.path("positions"));
  } else {
    const double lo = as_number(g.at("x_min"), g.path("x_min"));
    const double hi = as_number(g.at("x_max"), g.path("x_max"));
    const std::size_t n = as_count(g.at("n"), g.path("n"));
    if (n < 2) invalid(g.path("n") + " must be >= 2");
    if (!(hi > lo)) invalid(g.path("x_max") + " must exceed x_min");
    for (std::size_t i = 0; i < n; ++i) {
      grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
    }
  }
  g.finish();
  if (grid.empty()) invalid(path + " must contain at least one position");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      invalid(path + " positions must be strictly ascending");
    }
  }
  return grid;
}

CollisionalParams parse_collisional(const json& j) {
  Fields f(j, "parameters");
  auto law = parse_law(f);
  auto grid = parse_grid(f.at("grid"), f.path("grid"));
  Fields init(f.at("initial_state"), f.path("initial_state"));
  const json& sites_j = init.at("superposition");
  init.finish();
  if (!sites_j.is_array() || sites_j.empty()) {
    invalid(init.path("superposition") + " must be a non-empty array of sites");
  }
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < sites_j.size(); ++i) {
    sites.push_back(as_count(sites_j[i], init.path("superposition") + "[" +
                                             std::to_string(i) + "]"));
  }
  std::size_t n_q = kDefaultTransferNodes;
  if (const json* q = f.find("n_q")) n_q = as_count(*q, f.path("n_q"));
  f.finish();

  checked(init.path("superposition"), [&] {
    return collisional::PositionDensityMatrix::superposition(grid, sites);
  });
  checked(f.path("n_q"), [&] {
    return collisional::build_discretized_generator(law, grid, n_q);
  });
  return {std::move(law), std::move(grid), std::move(sites), n_q};
}

GkslParams parse_gksl(const json& j) {
  Fields f(j, "parameters");
  GkslParams p;
  p.hamiltonian = as_matrix(f.at("hamiltonian"), f.path("hamiltonian"));
  const std::size_t d = p.hamiltonian.rows();
  if (const json* ops = f.find("lindblad_ops")) {
    if (!ops->is_array()) invalid(f.path("lindblad_ops") + " must be an array");
    for (std::size_t k = 0; k < ops->size(); ++k) {
      p.lindblad_ops.push_back(as_matrix(
          (*ops)[k], f.path("lindblad_ops") + "[" + std::to_string(k) + "]"));
    }
  }
  if (const json* a = f.find("kossakowski");
      a != nullptr && !(a->is_array() && a->empty())) {
    p.kossakowski = as_matrix(*a, f.path("kossakowski"));
  } else {
    p.kossakowski = ComplexMatrix(p.lindblad_ops.size(), p.lindblad_ops.size());
  }
  p.initial_state = density_matrix(f.at("initial_state"),
                                   f.path("initial_state"), d);
  if (const json* t = f.find("check_cp_times")) {
    p.check_cp_times = as_numbers(*t, f.path("check_cp_times"));
    for (double v : p.check_cp_times) {
      if (v < 0.0) invalid(f.path("check_cp_times") + " entries must be >= 0");
    }
  }
  f.finish();
  checked("parameters", [&] {
    return gksl::GkslGenerator(p.hamiltonian, p.lindblad_ops, p.kossakowski);
  });
  return p;
}

TimeGrid parse_time(const json& j) {
  Fields f(j, "time");
  TimeGrid t;
  t.t_max = as_number(f.at("t_max"), f.path("t_max"));
  t.n_points = as_count(f.at("n_points"), f.path("n_points"));
  f.finish();
  if (!(t.t_max > 0.0)) invalid("time.t_max must be > 0");
  if (t.n_points < 2) invalid("time.n_points must be >= 2");
  return t;
}

void parse_numerics(const json& j, Scenario& s) {
  Fields f(j, "numerics");
  if (const json* q = f.find("quadrature")) {
    Fields g(*q, "numerics.quadrature");
    if (const json* v = g.find("abs_tol")) s.quadrature.abs_tol = as_number(*v, g.path("abs_tol"));
    if (const json* v = g.find("rel_tol")) s.quadrature.rel_tol = as_number(*v, g.path("rel_tol"));
    if (const json* v = g.find("max_subdivisions")) {
      s.quadrature.max_subdivisions =
          static_cast<int>(as_count(*v, g.path("max_subdivisions")));
    }
    if (const json* v = g.find("tail_cutoff_multiplier")) {
      s.quadrature.tail_cutoff_multiplier =
          as_number(*v, g.path("tail_cutoff_multiplier"));
    }
    g.finish();
    checked("numerics.quadrature", [&] {
      s.quadrature.validate();
      return 0;
    });
  }
  if (const json* o = f.find("ode")) {
    Fields g(*o, "numerics.ode");
    if (const json* v = g.find("abs_tol")) s.ode.abs_tol = as_number(*v, g.path("abs_tol"));
    if (const json* v = g.find("rel_tol")) s.ode.rel_tol = as_number(*v, g.path("rel_tol"));
    if (const json* v = g.find("initial_step")) {
      s.ode.initial_step = as_number(*v, g.path("initial_step"));
    }
    if (const json* v = g.find("max_steps")) s.ode.max_steps = as_count(*v, g.path("max_steps"));
    g.finish();
    checked("numerics.ode", [&] {
      s.ode.validate();
      return 0;
    });
  }
  f.finish();
}

OutputSpec parse_output(const json& j) {
  Fields f(j, "output");
  OutputSpec o;
  o.csv_path = as_string(f.at("csv_path"), f.path("csv_path"));
  o.report_path = as_string(f.at("report_path"), f.path("report_path"));
  f.finish();
  if (o.csv_path.empty()) invalid("output.csv_path must not be empty");
  if (o.report_path.empty()) invalid("output.report_path must not be empty");
  return o;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json complex_to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Dephasing: return "dephasing";
    case ModelKind::Collisional: return "collisional";
    case ModelKind::Gksl: return "gksl";
  }
  return "unknown";
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> t(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    t[i] = t_max * static_cast<double>(i) / last;
  }
  return t;
}

ModelKind Scenario::model() const {
  return static_cast<ModelKind>(parameters.index());
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                           ", column " + std::to_string(col) +
                                           ": " + e.what());
  }
  Fields top(doc, "");
  const std::string model = as_string(top.at("model"), "model");
  const json& params = top.at("parameters");
  ModelParams p = [&]() -> ModelParams {
    if (model == "dephasing") return parse_dephasing(params);
    if (model == "collisional") return parse_collisional(params);
    if (model == "gksl") return parse_gksl(params);
    invalid("model must be one of dephasing, collisional, gksl (got \"" +
            model + "\")");
  }();
  Scenario s{std::move(p), parse_time(top.at("time")), {}, {},
             parse_output(top.at("output"))};
  if (const json* n = top.find("numerics")) parse_numerics(*n, s);
  top.finish();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["model"] = to_string(s.model());
  json params;
  if (const auto* d = std::get_if<DephasingParams>(&s.parameters)) {
    const auto& m = d->model;
    params["omega0"] = m.omega0;
    params["spectral"] = {{"coupling", m.spectral.coupling()},
                          {"s", m.spectral.exponent()},
                          {"cutoff", m.spectral.cutoff()}};
    if (m.bath.is_zero_temperature()) {
      params["beta"] = "inf";
    } else {
      params["beta"] = m.bath.beta();
    }
    params["initial_state"] = matrix_to_json(d->initial_state);
  } else if (const auto* c = std::get_if<CollisionalParams>(&s.parameters)) {
    params["rate"] = c->law.rate();
    if (const auto* g = std::get_if<collisional::GaussianTransfer>(&c->law.shape())) {
      params["law"] = {{"type", "gaussian"}, {"sigma_q", g->sigma_q}};
    } else {
      const auto& t = std::get<collisional::TwoPointTransfer>(c->law.shape());
      params["law"] = {{"type", "two_point"}, {"q0", t.q0}};
    }
    params["grid"] = {{"positions", c->grid}};
    params["initial_state"] = {{"superposition", c->sites}};
    params["n_q"] = c->n_q;
  } else {
    const auto& g = std::get<GkslParams>(s.parameters);
    params["hamiltonian"] = matrix_to_json(g.hamiltonian);
    json ops = json::array();
    for (const auto& op : g.lindblad_ops) ops.push_back(matrix_to_json(op));
    params["lindblad_ops"] = std::move(ops);
    params["kossakowski"] = matrix_to_json(g.kossakowski);
    params["initial_state"] = matrix_to_json(g.initial_state);
    if (!g.check_cp_times.empty()) params["check_cp_times"] = g.check_cp_times;
  }
  doc["parameters"] = std::move(params);
  doc["time"] = {{"t_max", s.time.t_max}, {"n_points", s.time.n_points}};
  doc["numerics"] = {
      {"quadrature",
       {{"abs_tol", s.quadrature.abs_tol},
        {"rel_tol", s.quadrature.rel_tol},
        {"max_subdivisions", s.quadrature.max_subdivisions},
        {"tail_cutoff_multiplier", s.quadrature.tail_cutoff_multiplier}}},
      {"ode",
       {{"abs_tol", s.ode.abs_tol},
        {"rel_tol", s.ode.rel_tol},
        {"initial_step", s.ode.initial_step},
        {"max_steps", s.ode.max_steps}}}};
  doc["output"] = {{"csv_path", s.output.csv_path},
                   {"report_path", s.output.report_path}};
  return doc.dump(2) + "\n";
}

}  // namespace decohere::scenario
