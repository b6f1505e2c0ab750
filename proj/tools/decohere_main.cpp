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

// Command-line front end: run, check-cp and sweep over scenario files.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decohere/error.hpp"
#include "decohere/scenario/runner.hpp"
#include "decohere/scenario/scenario.hpp"

namespace fs = std::filesystem;
using decohere::Error;
using decohere::ErrorCode;
using namespace decohere::scenario;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

void write_file(const std::string& path, const std::string& text) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "short write to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_violations(const InvariantReport& r) {
  for (const auto& v : r.violations) std::cerr << "violation: " << v << "\n";
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

int run_one(const Scenario& s) {
  const RunResult r = run_scenario(s);
  write_file(s.output.csv_path, format_csv(r));
  write_file(s.output.report_path, report_to_json(r.report));
  print_violations(r.report);
  std::cout << to_string(s.model()) << ": " << r.rows.size() << " rows -> "
            << s.output.csv_path << (r.report.passed() ? " (passed)" : " (FAILED)")
            << "\n";
  return r.report.passed() ? kExitOk : kExitFailed;
}

int cmd_run(const std::string& path) { return run_one(load_scenario(path)); }

int cmd_check_cp(const std::string& path, const std::vector<double>& times,
                 const std::string& report_path) {
  const Scenario s = load_scenario(path);
  const InvariantReport r = check_cp(s, times);
  const std::string text = report_to_json(r);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    write_file(report_path, text);
  }
  print_violations(r);
  return r.passed() ? kExitOk : kExitFailed;
}

std::string value_tag(const std::string& v) {
  std::string tag;
  for (char c : v) tag += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
  return tag;
}

std::string sibling(const std::string& path, const std::string& suffix,
                    const std::string& ext) {
  fs::path p(path);
  fs::path out = p.parent_path() / (p.stem().string() + suffix + ext);
  return out.string();
}

struct SweepRun {
  std::string value;
  std::string csv_path;
  std::string report_path;
  int exit_code = kExitOk;
  std::string error;
};

SweepRun sweep_one(const nlohmann::json& base, const std::string& param,
                   const std::string& value) {
  SweepRun run{value, "", "", kExitOk, ""};
  try {
    nlohmann::json doc = base;
    if (!doc.contains("parameters") || !doc["parameters"].is_object()) {
      throw Error(ErrorCode::ValidationError, "scenario has no parameters block");
    }
    nlohmann::json* node = &doc["parameters"];
    std::stringstream parts(param);
    std::string key;
    std::vector<std::string> keys;
    while (std::getline(parts, key, '.')) keys.push_back(key);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (!node->is_object() || !node->contains(keys[i])) {
        throw Error(ErrorCode::ValidationError,
                    "sweep parameter parameters." + param + " not present");
      }
      node = &(*node)[keys[i]];
    }
    if (value == "inf") {
      *node = "inf";
    } else {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size()) {
        throw Error(ErrorCode::ValidationError, "sweep value '" + value +
                                                    "' is not a number");
      }
      *node = v;
    }
    const std::string suffix = "." + param + "-" + value_tag(value);
    auto& out = doc["output"];
    if (!out.is_object() || !out.contains("csv_path") || !out.contains("report_path") ||
        !out["csv_path"].is_string() || !out["report_path"].is_string()) {
      throw Error(ErrorCode::ValidationError, "scenario output block incomplete");
    }
    run.csv_path = sibling(out["csv_path"].get<std::string>(), suffix, ".csv");
    run.report_path = sibling(out["report_path"].get<std::string>(), suffix, ".json");
    out["csv_path"] = run.csv_path;
    out["report_path"] = run.report_path;

    const Scenario s = parse_scenario(doc.dump());
    const RunResult r = run_scenario(s);
    write_file(run.csv_path, format_csv(r));
    write_file(run.report_path, report_to_json(r.report));
    if (!r.report.passed()) {
      run.exit_code = kExitFailed;
      run.error = r.report.violations.front();
    }
  } catch (const Error& e) {
    run.exit_code = exit_code_for(e);
    run.error = e.what();
  }
  return run;
}

int cmd_sweep(const std::string& path, const std::string& param,
              const std::vector<std::string>& values, unsigned jobs) {
  const std::string text = read_file(path);
  nlohmann::json base;
  try {
    base = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // parse_scenario produces the line/column message.
    parse_scenario(text);
    throw;
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<SweepRun> runs(values.size());
  std::vector<std::future<void>> pending;
  std::size_t next = 0;
  while (next < values.size() || !pending.empty()) {
    while (next < values.size() && pending.size() < jobs) {
      const std::size_t i = next++;
      pending.push_back(std::async(std::launch::async, [&, i] {
        runs[i] = sweep_one(base, param, values[i]);
      }));
    }
    pending.front().get();
    pending.erase(pending.begin());
  }

  nlohmann::ordered_json manifest;
  manifest["scenario"] = path;
  manifest["param"] = param;
  manifest["runs"] = nlohmann::ordered_json::array();
  int code = kExitOk;
  for (const auto& r : runs) {
    manifest["runs"].push_back({{"value", r.value},
                                {"csv_path", r.csv_path},
                                {"report_path", r.report_path},
                                {"exit_code", r.exit_code},
                                {"error", r.error}});
    if (!r.error.empty()) std::cerr << "sweep " << param << "=" << r.value << ": " << r.error << "\n";
    code = std::max(code, r.exit_code);
  }
  std::string manifest_path = "sweep_manifest.json";
  if (base.contains("output") && base["output"].is_object() &&
      base["output"].contains("csv_path") && base["output"]["csv_path"].is_string()) {
    manifest_path = sibling(base["output"]["csv_path"].get<std::string>(),
                            "." + param + ".sweep", ".json");
  }
  write_file(manifest_path, manifest.dump(2) + "\n");
  std::cout << "sweep: " << runs.size() << " runs, manifest " << manifest_path << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decohere: open-system master equations and decoherence models"};
  app.require_subcommand(1);

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "Run a scenario and write CSV plus report");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();

  std::vector<double> times;
  std::string cp_report;
  auto* cp = app.add_subcommand("check-cp", "Certify complete positivity at given times");
  cp->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  cp->add_option("--times", times, "Comma-separated times >= 0")
      ->required()
      ->delimiter(',');
  cp->add_option("--report", cp_report, "Write the report here instead of stdout");

  std::string param;
  std::vector<std::string> values;
  unsigned jobs = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario for several parameter values");
  sweep->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sweep->add_option("--param", param, "Dotted key inside parameters, e.g. spectral.s")
      ->required();
  sweep->add_option("--values", values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--jobs", jobs, "Concurrent runs (default: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(scenario_path);
    if (*cp) return cmd_check_cp(scenario_path, times, cp_report);
    if (*sweep) return cmd_sweep(scenario_path, param, values, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
