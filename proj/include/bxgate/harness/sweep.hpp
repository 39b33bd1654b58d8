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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bxgate/harness/config.hpp"

namespace bxgate::harness {

/// One (delta_a, R) grid point: solved design plus full simulation metrics.
struct SweepRow {
  double delta_a_meV = 0;
  double r = 0;
  double tau_ps = 0;
  double omega0_meV = 0;
  double gate_time_ps = 0;
  double conditional_phase_rad = 0;
  double phase_error_rad = 0;
  double leakage_11 = 0;
  double peak_intermediate = 0;
  double compensated_fidelity = 0;
  bool within_budget = false;
  std::string error;  // empty when the row succeeded
};

inline constexpr std::array<std::string_view, 12> kSweepColumns = {
    "delta_a_meV",       "r",          "tau_ps",          "omega0_meV",
    "gate_time_ps",      "conditional_phase_rad", "phase_error_rad", "leakage_11",
    "peak_intermediate", "compensated_fidelity",  "within_budget",   "error"};

/// Computes one row; failures are captured in SweepRow::error.
SweepRow sweep_point(const RunConfig& config, double delta_a, double r);

/// All grid points, delta_a major and R minor. Points are spread over
/// `threads` workers (0: hardware concurrency); the result does not depend
/// on the thread count.
std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads = 0);

/// CSV with a units comment line, a header row and 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// tau versus R, one polyline per delta_a, log-scaled tau axis.
std::string sweep_svg(const std::vector<SweepRow>& rows);

}  // namespace bxgate::harness
