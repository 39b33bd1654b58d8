// Copyright 2026 The bxgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: simulate, sweep, design, validate.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bxgate/harness/config.hpp"
#include "bxgate/harness/simulate.hpp"
#include "bxgate/harness/sweep.hpp"
#include "bxgate/harness/validation.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kBadConfig = 2, kNumerical = 3 };

struct GlobalOptions {
  std::string config_path;
  std::string out;
  std::string model;
  std::string initial;
  double window_factor = 0;
  int points = 0;
  std::vector<std::string> overrides;
  unsigned threads = 0;
};

bxgate::harness::RunConfig build_config(const GlobalOptions& g) {
  using bxgate::ParameterError;
  bxgate::harness::RunConfig config;
  if (!g.config_path.empty()) config = bxgate::harness::load_config(g.config_path);
  for (const std::string& item : g.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("--set expects key=value, got '" + item + "'");
    config.set_value(item.substr(0, eq), item.substr(eq + 1));
  }
  if (!g.out.empty()) config.out = g.out;
  if (!g.model.empty()) config.set_value("model", g.model);
  if (!g.initial.empty()) config.set_value("initial", g.initial);
  if (g.window_factor != 0) config.params.window_factor = g.window_factor;
  if (g.points != 0) config.sweep.points = g.points;
  return config;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bxgate::ParameterError("cannot write '" + path + "'");
  out << text;
}

std::string svg_path_for(const bxgate::harness::RunConfig& config) {
  if (!config.svg.empty()) return config.svg;
  std::string path = config.out;
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) path.erase(dot);
  return path + ".svg";
}

int cmd_simulate(const bxgate::harness::RunConfig& config) {
  const auto run = bxgate::harness::run_gate(config);
  const std::string kv = bxgate::harness::format_report_kv(run);
  std::cout << bxgate::harness::format_report_text(run) << "\n" << kv;
  if (!config.out.empty()) write_file(config.out, kv);
  return kOk;
}

int cmd_sweep(bxgate::harness::RunConfig config, unsigned threads) {
  bxgate::harness::validate_config(config);
  if (config.out.empty()) config.out = "sweep.csv";
  const auto rows = bxgate::harness::run_sweep(config, threads);
  write_file(config.out, bxgate::harness::sweep_csv(rows));
  const std::string svg = svg_path_for(config);
  write_file(svg, bxgate::harness::sweep_svg(rows));
  int failed = 0;
  for (const auto& row : rows) failed += row.error.empty() ? 0 : 1;
  std::cout << "wrote " << rows.size() << " rows to " << config.out << " (" << failed << " failed) and " << svg << "\n";
  return kOk;
}

int cmd_design(const bxgate::harness::RunConfig& config, double r, double delta_a) {
  bxgate::harness::validate_config(config);
  const auto point = bxgate::solve_tau_for_r(r, delta_a, config.params, config.window_mode);
  const auto asymptotic = bxgate::solve_tau_for_r(r, delta_a, config.params, bxgate::WindowMode::Infinite);
  const bool within = point.gate_time < bxgate::kDephasingBudgetPs;
  std::printf("design point R=%.12g delta_a=%.12g meV\n", point.r, point.delta_a);
  std::printf("  tau            %.12g ps (infinite window %.12g ps)\n", point.tau, asymptotic.tau);
  std::printf("  omega0         %.12g meV\n", point.omega0);
  std::printf("  nbar estimate  %.12g\n", point.nbar_estimate);
  std::printf("  gate time      %.12g ps\n", point.gate_time);
  std::printf("  within budget  %s (%.0f ps)\n", within ? "yes" : "no", bxgate::kDephasingBudgetPs);
  std::printf("\nr=%.12g\ndelta_a_meV=%.12g\ntau_ps=%.12g\ntau_infinite_ps=%.12g\nomega0_meV=%.12g\n"
              "nbar_estimate=%.12g\ngate_time_ps=%.12g\nwithin_budget=%d\n",
              point.r, point.delta_a, point.tau, asymptotic.tau, point.omega0, point.nbar_estimate, point.gate_time,
              within ? 1 : 0);
  return kOk;
}

int cmd_validate(const bxgate::harness::RunConfig& config) {
  bxgate::harness::validate_config(config);
  const auto results = bxgate::harness::run_validation_suite(bxgate::harness::resolve_params(config));
  std::cout << bxgate::harness::format_check_table(results);
  const bool ok = bxgate::harness::all_passed(results);
  std::cout << (ok ? "all checks passed\n" : "validation FAILED\n");
  return ok ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bichromatic two-dot conditional phase gate simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--out", g.out, "output path (report for simulate, CSV for sweep)");
  app.add_option("--model", g.model, "full | effective | lab");
  app.add_option("--initial", g.initial, "00 | 01 | 10 | 11");
  app.add_option("--window-factor", g.window_factor, "gate window T in units of tau");
  app.add_option("--points", g.points, "number of R grid points in a sweep");
  app.add_option("--set", g.overrides, "override any config key, key=value")->take_all();
  app.add_option("--threads", g.threads, "sweep worker threads (0: all cores)");

  auto* simulate = app.add_subcommand("simulate", "simulate one gate and print its report");
  auto* sweep = app.add_subcommand("sweep", "tau versus R sweep with full simulation, CSV + SVG");
  std::string svg;
  sweep->add_option("--svg", svg, "SVG output path (default: CSV path with .svg)");
  auto* design = app.add_subcommand("design", "solve the gate condition for one design point");
  double r = 1.0 / 7.0;
  std::optional<double> delta_a;
  design->add_option("--r", r, "R = omega0 / (2 delta_min)");
  design->add_option("--delta-a", delta_a, "laser 1 detuning from dot a, meV");
  auto* validate = app.add_subcommand("validate", "run the numerical invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    auto config = build_config(g);
    if (!svg.empty()) config.svg = svg;
    if (simulate->parsed()) return cmd_simulate(config);
    if (sweep->parsed()) return cmd_sweep(config, g.threads);
    if (design->parsed()) return cmd_design(config, r, delta_a.value_or(config.params.delta_a));
    if (validate->parsed()) return cmd_validate(config);
  } catch (const bxgate::ParameterError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const bxgate::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}
