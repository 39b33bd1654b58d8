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

#include "bxgate/harness/simulate.hpp"

#include <cstdio>
#include <sstream>

namespace bxgate::harness {

namespace {

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

GateRun run_gate(const SystemParams<double>& params, ModelKind model, const PropagationOptions<double>& options,
                 int initial) {
  GateRun run;
  run.params = params;
  run.model = model;
  run.initial = initial;
  PropagationOptions<double> opts = options;
  opts.record_trajectory = true;
  const auto [t0, t1] = gate_window(params);
  run.propagation = propagate_unitary(model, params, t0, t1, opts);
  const double peak = intermediate_population(column_trajectory(run.propagation.trajectory, kIndex11));
  run.report = make_gate_report(run.propagation.unitary, peak, params.window());
  return run;
}

GateRun run_gate(const RunConfig& config) {
  validate_config(config);
  return run_gate(resolve_params(config), config.model, config.propagation_options(), config.initial);
}

std::string format_report_text(const GateRun& run) {
  const GateReport<double>& r = run.report;
  const Detunings<double> d = derive_detunings(run.params);
  const double ratio = std::sqrt(run.params.omega0_a * run.params.omega0_b) / (2.0 * d.d_min);
  std::ostringstream out;
  out << "conditional phase gate, model " << to_string(run.model) << "\n"
      << "  delta_a " << num(run.params.delta_a) << " meV, delta_min " << num(d.d_min) << " meV, R "
      << num(ratio) << "\n"
      << "  omega0 " << num(run.params.omega0_a) << "/" << num(run.params.omega0_b) << " meV, tau "
      << num(run.params.tau) << " ps, gate time " << num(r.gate_time) << " ps\n"
      << "  conditional phase " << num(r.conditional_phase) << " rad (error " << num(r.phase_error) << ")\n"
      << "  leakage 00/01/10/11 " << num(r.leakage_per_input[0]) << " " << num(r.leakage_per_input[1]) << " "
      << num(r.leakage_per_input[2]) << " " << num(r.leakage_per_input[3]) << "\n"
      << "  peak intermediate population " << num(r.peak_intermediate) << "\n"
      << "  compensated fidelity " << num(r.compensated_fidelity) << "\n"
      << "  within dephasing budget (" << num(kDephasingBudgetPs) << " ps): "
      << (r.within_dephasing_budget ? "yes" : "no") << "\n"
      << "  final populations from |" << basis_label(run.initial) << ">:";
  const auto column = run.propagation.unitary.col(run.initial);
  for (int k = 0; k < kDim; ++k) out << " " << basis_label(k) << "=" << num(std::norm(column(k)));
  out << "\n  steps " << run.propagation.steps << ", step " << num(run.propagation.step)
      << " ps, halving change " << num(run.propagation.convergence_change) << "\n";
  return out.str();
}

std::string format_report_kv(const GateRun& run) {
  const GateReport<double>& r = run.report;
  std::ostringstream out;
  out << "model=" << to_string(run.model) << "\n"
      << "delta_a_meV=" << num(run.params.delta_a) << "\n"
      << "omega0_a_meV=" << num(run.params.omega0_a) << "\n"
      << "omega0_b_meV=" << num(run.params.omega0_b) << "\n"
      << "tau_ps=" << num(run.params.tau) << "\n"
      << "gate_time_ps=" << num(r.gate_time) << "\n"
      << "conditional_phase_rad=" << num(r.conditional_phase) << "\n"
      << "phase_error_rad=" << num(r.phase_error) << "\n"
      << "leakage_00=" << num(r.leakage_per_input[0]) << "\n"
      << "leakage_01=" << num(r.leakage_per_input[1]) << "\n"
      << "leakage_10=" << num(r.leakage_per_input[2]) << "\n"
      << "leakage_11=" << num(r.leakage_per_input[3]) << "\n"
      << "peak_intermediate=" << num(r.peak_intermediate) << "\n"
      << "compensated_fidelity=" << num(r.compensated_fidelity) << "\n"
      << "within_budget=" << (r.within_dephasing_budget ? 1 : 0) << "\n"
      << "steps=" << run.propagation.steps << "\n";
  return out.str();
}

}  // namespace bxgate::harness
