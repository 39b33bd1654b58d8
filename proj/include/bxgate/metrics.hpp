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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "bxgate/basis.hpp"

namespace bxgate {

/// Exciton dephasing time used as the gate-duration budget, ps.
inline constexpr double kDephasingBudgetPs = 1000.0;

template <typename Scalar = double>
struct GateReport {
  Scalar conditional_phase{};
  Scalar phase_error{};
  std::array<Scalar, 4> leakage_per_input{};  // |00>, |01>, |10>, |11>
  Scalar peak_intermediate{};
  Scalar compensated_fidelity{};
  Scalar gate_time{};
  bool within_dephasing_budget = false;
};

/// Population that U moves out of the computational subspace.
template <typename Scalar>
Scalar leakage(const OperatorMatrix<Scalar>& u, const StateVector<Scalar>& input) {
  const StateVector<Scalar> out = u * input;
  Scalar kept = 0;
  for (int k : kComputationalIndices) kept += std::norm(out(k));
  return std::clamp(Scalar(1) - kept, Scalar(0), Scalar(1));
}

/// arg(U_11 U_00 / (U_01 U_10)) in (-pi, pi]. Unchanged by single-dot phase
/// rotations and by a global phase.
template <typename Scalar>
Scalar conditional_phase(const OperatorMatrix<Scalar>& u) {
  for (int k : kComputationalIndices) {
    if (std::abs(u(k, k)) <= Scalar(1e-6)) {
      throw NumericalError("conditional phase undefined: computational diagonal element of |" + basis_label(k) +
                           "> vanished (leakage dominated)");
    }
  }
  const std::complex<Scalar> z =
      u(kIndex11, kIndex11) * u(kIndex00, kIndex00) * std::conj(u(kIndex01, kIndex01) * u(kIndex10, kIndex10));
  Scalar phi = std::arg(z);
  if (phi <= -std::numbers::pi_v<Scalar>) phi += Scalar(2) * std::numbers::pi_v<Scalar>;
  return phi;
}

/// Overlap with diag(1, 1, 1, -1) after removing the global phase and the
/// single-dot Z phases that make the |00>, |01>, |10> diagonal elements real
/// and positive.
template <typename Scalar>
Scalar compensated_fidelity(const OperatorMatrix<Scalar>& u) {
  auto phase_of = [&](int k) { return std::abs(u(k, k)) > Scalar(0) ? std::arg(u(k, k)) : Scalar(0); };
  const Scalar p00 = phase_of(kIndex00);
  const Scalar p01 = phase_of(kIndex01);
  const Scalar p10 = phase_of(kIndex10);
  auto rotated = [&](int k, Scalar angle) { return u(k, k) * std::polar(Scalar(1), -angle); };
  const std::complex<Scalar> overlap = rotated(kIndex00, p00) + rotated(kIndex01, p01) + rotated(kIndex10, p10) -
                                       rotated(kIndex11, p01 + p10 - p00);
  return std::clamp(std::abs(overlap) / Scalar(4), Scalar(0), Scalar(1));
}

template <typename Scalar>
GateReport<Scalar> make_gate_report(const OperatorMatrix<Scalar>& u, Scalar peak_intermediate, Scalar gate_time) {
  GateReport<Scalar> report;
  report.conditional_phase = conditional_phase(u);
  // Distance to pi on the circle; phi lies in (-pi, pi] so this is pi - |phi|.
  report.phase_error = std::numbers::pi_v<Scalar> - std::abs(report.conditional_phase);
  for (std::size_t i = 0; i < kComputationalIndices.size(); ++i) {
    report.leakage_per_input[i] = leakage<Scalar>(u, basis_state<Scalar>(kComputationalIndices[i]));
  }
  report.peak_intermediate = peak_intermediate;
  report.compensated_fidelity = compensated_fidelity(u);
  report.gate_time = gate_time;
  report.within_dephasing_budget = gate_time < Scalar(kDephasingBudgetPs);
  return report;
}

}  // namespace bxgate
