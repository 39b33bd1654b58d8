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

#include <string>

#include "bxgate/dynamics.hpp"
#include "bxgate/harness/config.hpp"
#include "bxgate/metrics.hpp"

namespace bxgate::harness {

struct GateRun {
  SystemParams<double> params;
  ModelKind model = ModelKind::FullRotating;
  int initial = kIndex11;
  UnitaryPropagation<double> propagation;
  GateReport<double> report;
};

/// Propagates the gate window [-T/2, T/2] and evaluates the gate metrics.
/// The intermediate population is taken from the |11> column.
GateRun run_gate(const SystemParams<double>& params, ModelKind model, const PropagationOptions<double>& options,
                 int initial = kIndex11);

GateRun run_gate(const RunConfig& config);

/// Human-readable summary.
std::string format_report_text(const GateRun& run);

/// One `key=value` per line, stable key order.
std::string format_report_kv(const GateRun& run);

}  // namespace bxgate::harness
