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

#include <cmath>
#include <numbers>

#include "bxgate/hamiltonian.hpp"
#include "bxgate/quadrature.hpp"
#include "bxgate/system.hpp"

namespace bxgate {

/// Whether pulse areas are taken over the finite window T or over all time.
enum class WindowMode { Finite, Infinite };

/// A solved gate design point on one delta_a curve.
template <typename Scalar = double>
struct DesignPoint {
  Scalar r{};              // Omega0 / (2 delta_min)
  Scalar tau{};            // ps
  Scalar omega0{};         // meV
  Scalar delta_a{};        // meV
  Scalar nbar_estimate{};  // 2 r^2
  Scalar gate_time{};      // window_factor * tau, ps
};

/// Target pulse area of the |11> <-> |XX> cycle that closes with a sign flip.
template <typename Scalar = double>
inline constexpr Scalar kGateArea = Scalar(2) * std::numbers::pi_v<Scalar>;

/// (1/hbar) * integral of the effective Rabi frequency over [-T/2, T/2],
/// by adaptive quadrature.
template <typename Scalar>
Scalar pulse_area(const SystemParams<Scalar>& params) {
  derive_detunings(params);
  if (params.omega0_a == Scalar(0) || params.omega0_b == Scalar(0)) return Scalar(0);
  const Scalar half = params.window() / Scalar(2);
  const auto result = integrate_adaptive<Scalar>([&](Scalar t) { return effective_rabi(t, params); }, -half, half,
                                                 Scalar(1e-13));
  if (!(result.error_estimate <= Scalar(1e-10) * std::abs(result.value))) {
    throw NumericalError("pulse area quadrature error above 1e-10 relative");
  }
  return result.value / params.hbar;
}

/// Analytic counterpart of pulse_area for the Gaussian product envelope.
template <typename Scalar>
Scalar pulse_area_closed_form(const SystemParams<Scalar>& params, WindowMode mode = WindowMode::Finite) {
  const Scalar bracket = detuning_bracket(derive_detunings(params));
  const Scalar sqrt_pi = std::sqrt(std::numbers::pi_v<Scalar>);
  Scalar area = params.omega0_a * params.omega0_b * bracket * sqrt_pi * params.tau / params.hbar;
  if (mode == WindowMode::Finite) area *= std::erf(params.window_factor / Scalar(2));
  return area;
}

/// Peak coupling Omega0 (applied to both dots) that gives a 2 pi pulse area
/// for the given duration. In finite-window mode the infinite-window closed
/// form is refined against the quadrature area.
template <typename Scalar>
Scalar solve_omega0_for_gate(Scalar tau, const SystemParams<Scalar>& params, WindowMode mode = WindowMode::Finite) {
  if (!(tau > 0)) throw ParameterError("tau must be > 0");
  SystemParams<Scalar> p = params;
  p.tau = tau;
  const Scalar bracket = detuning_bracket(derive_detunings(p));
  const Scalar sqrt_pi = std::sqrt(std::numbers::pi_v<Scalar>);
  Scalar omega0 = std::sqrt(Scalar(2) * sqrt_pi * p.hbar / (bracket * tau));
  if (mode == WindowMode::Infinite) return omega0;
  // Area is exactly quadratic in omega0, so each pass is a Newton step on log(area).
  for (int iter = 0; iter < 8; ++iter) {
    const Scalar area = pulse_area(p.with_omega0(omega0));
    if (std::abs(area - kGateArea<Scalar>) < Scalar(1e-9)) return omega0;
    omega0 *= std::sqrt(kGateArea<Scalar> / area);
  }
  throw NumericalError("omega0 refinement did not reach |area - 2 pi| < 1e-9");
}

/// Fixes Omega0 = 2 r delta_min on the delta_a curve and solves the gate
/// condition for tau, with the window scaled as window_factor * tau.
template <typename Scalar>
DesignPoint<Scalar> solve_tau_for_r(Scalar r, Scalar delta_a, const SystemParams<Scalar>& params,
                                    WindowMode mode = WindowMode::Finite) {
  if (!(r > 0)) throw ParameterError("design ratio R must be > 0");
  SystemParams<Scalar> p = params;
  p.delta_a = delta_a;
  const Detunings<Scalar> d = derive_detunings(p);
  const Scalar bracket = detuning_bracket(d);
  const Scalar omega0 = Scalar(2) * r * d.d_min;
  const Scalar sqrt_pi = std::sqrt(std::numbers::pi_v<Scalar>);
  Scalar tau = Scalar(2) * sqrt_pi * p.hbar / (omega0 * omega0 * bracket);
  if (mode == WindowMode::Finite) {
    p = p.with_omega0(omega0);
    bool converged = false;
    // Area is linear in tau when the window scales with tau.
    for (int iter = 0; iter < 8 && !converged; ++iter) {
      p.tau = tau;
      const Scalar area = pulse_area(p);
      converged = std::abs(area - kGateArea<Scalar>) < Scalar(1e-9);
      if (!converged) tau *= kGateArea<Scalar> / area;
    }
    if (!converged) throw NumericalError("tau refinement did not reach |area - 2 pi| < 1e-9");
  }
  return {r, tau, omega0, delta_a, Scalar(2) * r * r, p.window_factor * tau};
}

/// Copies a design point into the system parameters.
template <typename Scalar>
SystemParams<Scalar> apply_design(const SystemParams<Scalar>& params, const DesignPoint<Scalar>& point) {
  SystemParams<Scalar> p = params.with_omega0(point.omega0);
  p.delta_a = point.delta_a;
  p.tau = point.tau;
  return p;
}

}  // namespace bxgate
