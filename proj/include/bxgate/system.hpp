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
#include <cmath>
#include <sstream>

#include "bxgate/basis.hpp"

namespace bxgate {

/// Reduced Planck constant in meV ps.
template <typename Scalar = double>
inline constexpr Scalar hbar_v = Scalar(0.6582119569L);

/// Two dots driven by two lasers. Energies in meV, times in ps.
///
/// The second dot sits at omega_b = omega_a + delta_small; laser 1 is
/// detuned from dot a by delta_a, and laser 2 is placed so that both
/// two-photon paths |11> -> |XX> are resonant with the biexcitonic shift.
template <typename Scalar = double>
struct SystemParams {
  Scalar omega_a = Scalar(1000);
  Scalar delta_small = Scalar(1);
  Scalar delta_big = Scalar(4);
  Scalar delta_a = Scalar(2.5);
  Scalar omega0_a = Scalar(0);
  Scalar omega0_b = Scalar(0);
  Scalar tau = Scalar(1);
  Scalar window_factor = Scalar(8);
  Scalar hbar = hbar_v<Scalar>;

  Scalar omega_b() const { return omega_a + delta_small; }
  Scalar laser1() const { return omega_a + delta_a; }
  Scalar laser2() const { return omega_a + delta_big - delta_a + delta_small; }
  Scalar window() const { return window_factor * tau; }

  /// Sets both peak couplings to the same value.
  SystemParams with_omega0(Scalar omega0) const {
    SystemParams p = *this;
    p.omega0_a = omega0;
    p.omega0_b = omega0;
    return p;
  }
};

template <typename Scalar = double>
struct Detunings {
  Scalar d_a{};
  Scalar d_a_prime{};
  Scalar d_b{};
  Scalar d_b_prime{};
  Scalar d_min{};
  Scalar resonance_residual{};
};

/// Laser-exciton detunings implied by (delta_big, delta_small, delta_a).
/// Throws ParameterError unless all four are strictly positive.
template <typename Scalar>
Detunings<Scalar> derive_detunings(const SystemParams<Scalar>& params) {
  Detunings<Scalar> d;
  d.d_a = params.delta_a;
  d.d_b = params.delta_a - params.delta_small;
  d.d_b_prime = params.delta_big - params.delta_a;
  d.d_a_prime = params.delta_big - params.delta_a + params.delta_small;
  d.d_min = std::min({d.d_a, d.d_a_prime, d.d_b, d.d_b_prime});
  d.resonance_residual = std::abs(d.d_a + d.d_b_prime - params.delta_big) +
                         std::abs(d.d_b + d.d_a_prime - params.delta_big);
  if (!(d.d_min > Scalar(0))) {
    std::ostringstream msg;
    msg << "detunings must be blue (> 0): delta_a=" << d.d_a << " delta_a'=" << d.d_a_prime
        << " delta_b=" << d.d_b << " delta_b'=" << d.d_b_prime << " meV";
    if (d.d_min == Scalar(0)) msg << " (zero detuning is a pole of the effective coupling)";
    throw ParameterError(msg.str());
  }
  return d;
}

/// 1/delta_a + 1/delta_a' + 1/delta_b + 1/delta_b' in 1/meV.
template <typename Scalar>
Scalar detuning_bracket(const Detunings<Scalar>& d) {
  return Scalar(1) / d.d_a + Scalar(1) / d.d_a_prime + Scalar(1) / d.d_b + Scalar(1) / d.d_b_prime;
}

/// Same bracket written directly in terms of the biexcitonic shift, the
/// dot splitting and delta_a.
template <typename Scalar>
Scalar detuning_bracket_closed_form(Scalar delta_big, Scalar delta_small, Scalar delta_a) {
  return Scalar(1) / delta_a + Scalar(1) / (delta_big + delta_small - delta_a) +
         Scalar(1) / (delta_a - delta_small) + Scalar(1) / (delta_big - delta_a);
}

/// Throws ParameterError describing the first violated invariant.
template <typename Scalar>
void validate(const SystemParams<Scalar>& params) {
  auto fail = [](const std::string& what) { throw ParameterError(what); };
  if (!(params.delta_big > 0)) fail("delta_big (biexcitonic shift) must be > 0");
  if (!(params.tau > 0)) fail("tau must be > 0");
  if (!(params.window_factor >= 4)) fail("window_factor must be >= 4 (window too short)");
  if (!(params.omega0_a >= 0) || !(params.omega0_b >= 0)) fail("peak couplings omega0_a, omega0_b must be >= 0");
  if (!(params.hbar > 0)) fail("hbar must be > 0");
  if (!std::isfinite(params.omega_a) || !std::isfinite(params.delta_small) || !std::isfinite(params.delta_a))
    fail("energies must be finite");
  derive_detunings(params);
}

}  // namespace bxgate
