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

#include "bxgate/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bxgate::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParameterError("'" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParameterError("'" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    values.push_back(parse_double(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.empty()) throw ParameterError("'" + std::string(key) + "' expects a comma-separated list");
  return values;
}

}  // namespace

std::vector<double> SweepSpec::r_grid() const {
  std::vector<double> grid;
  grid.reserve(points);
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? r_min : r_min + (r_max - r_min) * i / (points - 1));
  }
  return grid;
}

void RunConfig::set_value(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "omega_a") {
    params.omega_a = parse_double(key, value);
  } else if (key == "delta" || key == "delta_small") {
    params.delta_small = parse_double(key, value);
  } else if (key == "delta_big") {
    params.delta_big = parse_double(key, value);
  } else if (key == "delta_a") {
    params.delta_a = parse_double(key, value);
  } else if (key == "omega0") {
    omega0_a = omega0_b = parse_double(key, value);
  } else if (key == "omega0_a") {
    omega0_a = parse_double(key, value);
  } else if (key == "omega0_b") {
    omega0_b = parse_double(key, value);
  } else if (key == "tau") {
    tau = parse_double(key, value);
  } else if (key == "r") {
    r = parse_double(key, value);
  } else if (key == "window_factor") {
    params.window_factor = parse_double(key, value);
  } else if (key == "window_mode") {
    if (value == "finite") {
      window_mode = WindowMode::Finite;
    } else if (value == "infinite") {
      window_mode = WindowMode::Infinite;
    } else {
      throw ParameterError("window_mode must be finite or infinite");
    }
  } else if (key == "model") {
    model = parse_model(value);
  } else if (key == "initial") {
    initial = parse_computational_label(value);
  } else if (key == "step") {
    step = parse_double(key, value);
  } else if (key == "samples") {
    samples = parse_int(key, value);
  } else if (key == "sweep_delta_a") {
    sweep.delta_a = parse_list(key, value);
  } else if (key == "sweep_r_min") {
    sweep.r_min = parse_double(key, value);
  } else if (key == "sweep_r_max") {
    sweep.r_max = parse_double(key, value);
  } else if (key == "sweep_points" || key == "points") {
    sweep.points = parse_int(key, value);
  } else if (key == "out") {
    out = std::string(value);
  } else if (key == "svg") {
    svg = std::string(value);
  } else {
    throw ParameterError("unknown configuration key '" + std::string(key) + "'");
  }
}

PropagationOptions<double> RunConfig::propagation_options() const {
  PropagationOptions<double> options;
  options.step = step;
  options.samples = samples;
  return options;
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      config.set_value(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ParameterError& e) {
      throw ParameterError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate_config(const RunConfig& config) {
  if (!(config.r > 0)) throw ParameterError("design ratio r must be > 0");
  if (config.samples < 2) throw ParameterError("samples must be >= 2");
  if (config.step < 0) throw ParameterError("step must be >= 0");
  const SweepSpec& sweep = config.sweep;
  if (sweep.delta_a.empty()) throw ParameterError("sweep_delta_a must not be empty");
  if (sweep.points < 2) throw ParameterError("sweep_points must be >= 2");
  if (!(sweep.r_min > 0) || !(sweep.r_min < sweep.r_max)) {
    throw ParameterError("sweep R range requires 0 < sweep_r_min < sweep_r_max");
  }
  for (double delta_a : sweep.delta_a) {
    SystemParams<double> p = config.params;
    p.delta_a = delta_a;
    derive_detunings(p);
  }
  validate(resolve_params(config));
}

SystemParams<double> resolve_params(const RunConfig& config) {
  SystemParams<double> p = config.params;
  // Catch a bad window or detuning before any solver runs.
  validate(p.with_omega0(0.0));
  const bool has_omega = config.omega0_a.has_value() || config.omega0_b.has_value();
  if (has_omega) {
    p.omega0_a = config.omega0_a.value_or(*config.omega0_b);
    p.omega0_b = config.omega0_b.value_or(*config.omega0_a);
  }
  if (config.tau) {
    p.tau = *config.tau;
    if (!has_omega) p = p.with_omega0(solve_omega0_for_gate(p.tau, p, config.window_mode));
  } else if (has_omega && p.omega0_a == 0.0 && p.omega0_b == 0.0) {
    // Undriven run: keep the window of the default design.
    p.tau = solve_tau_for_r(config.r, p.delta_a, p, config.window_mode).tau;
  } else if (has_omega) {
    if (p.omega0_a != p.omega0_b) throw ParameterError("tau must be given when omega0_a != omega0_b");
    const double r = p.omega0_a / (2.0 * derive_detunings(p).d_min);
    p = apply_design(p, solve_tau_for_r(r, p.delta_a, p, config.window_mode));
  } else {
    p = apply_design(p, solve_tau_for_r(config.r, p.delta_a, p, config.window_mode));
  }
  validate(p);
  return p;
}

DesignPoint<double> resolved_design(const RunConfig& config) {
  const SystemParams<double> p = resolve_params(config);
  const double d_min = derive_detunings(p).d_min;
  const double omega0 = std::sqrt(p.omega0_a * p.omega0_b);
  const double r = omega0 / (2.0 * d_min);
  return {r, p.tau, omega0, p.delta_a, 2.0 * r * r, p.window()};
}

}  // namespace bxgate::harness
