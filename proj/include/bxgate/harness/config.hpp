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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bxgate/dynamics.hpp"
#include "bxgate/pulse_design.hpp"
#include "bxgate/system.hpp"

namespace bxgate::harness {

struct SweepSpec {
  std::vector<double> delta_a = {1.5, 2.5, 3.0};
  double r_min = 0.05;
  double r_max = 0.5;
  int points = 46;

  /// Evenly spaced R grid including both ends.
  std::vector<double> r_grid() const;
};

/// Everything a CLI run needs. Loaded from a `key = value` file; command-line
/// overrides are applied with set_value afterwards.
struct RunConfig {
  SystemParams<double> params;
  // Pulse settings given explicitly; whatever is missing is solved for.
  std::optional<double> omega0_a;
  std::optional<double> omega0_b;
  std::optional<double> tau;
  double r = 1.0 / 7.0;

  ModelKind model = ModelKind::FullRotating;
  int initial = kIndex11;
  SweepSpec sweep;
  WindowMode window_mode = WindowMode::Finite;

  std::string out;
  std::string svg;

  double step = 0;  // 0: integrator default
  int samples = 512;

  /// Applies one key/value pair. Throws ParameterError on unknown keys or
  /// malformed values.
  void set_value(std::string_view key, std::string_view value);

  PropagationOptions<double> propagation_options() const;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Checks RunConfig invariants (sweep ranges, sample counts) and the
/// physical parameters. Throws ParameterError.
void validate_config(const RunConfig& config);

/// System parameters with the pulse fully determined: explicit omega0/tau are
/// used as given, otherwise the gate condition is solved (from R when neither
/// is set).
SystemParams<double> resolve_params(const RunConfig& config);

/// The design point implied by resolve_params.
DesignPoint<double> resolved_design(const RunConfig& config);

}  // namespace bxgate::harness
