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
#include <complex>

#include "bxgate/basis.hpp"
#include "bxgate/envelope.hpp"
#include "bxgate/system.hpp"

namespace bxgate {

namespace detail {

template <typename Scalar>
std::complex<Scalar> phase(Scalar angle) {
  return std::polar(Scalar(1), angle);
}

// Adds coef * |1,m><X,m| (dot a) or |m,1><m,X| (dot b) and the Hermitian
// conjugate. spectator_x_factor multiplies the component where the other dot
// is in |X>.
template <typename Scalar>
void add_lowering(OperatorMatrix<Scalar>& h, bool dot_a, std::complex<Scalar> coef,
                  std::complex<Scalar> spectator_x_factor) {
  for (int m = 0; m < kDotLevels; ++m) {
    const auto spectator = static_cast<DotLevel>(m);
    const int lower = dot_a ? basis_index(DotLevel::One, spectator) : basis_index(spectator, DotLevel::One);
    const int upper = dot_a ? basis_index(DotLevel::Exciton, spectator) : basis_index(spectator, DotLevel::Exciton);
    const std::complex<Scalar> c = spectator == DotLevel::Exciton ? coef * spectator_x_factor : coef;
    h(lower, upper) += c;
    h(upper, lower) += std::conj(c);
  }
}

}  // namespace detail

/// Bare dot Hamiltonian: exciton energies plus the biexcitonic shift on |XX>.
template <typename Scalar>
OperatorMatrix<Scalar> build_h0(const SystemParams<Scalar>& params) {
  OperatorMatrix<Scalar> h = OperatorMatrix<Scalar>::Zero();
  for (int i = 0; i < kDim; ++i) {
    Scalar e = 0;
    if (level_of_a(i) == DotLevel::Exciton) e += params.omega_a;
    if (level_of_b(i) == DotLevel::Exciton) e += params.omega_b();
    h(i, i) = e;
  }
  h(kIndexXX, kIndexXX) += params.delta_big;
  return h;
}

/// Laboratory-frame laser coupling H_I(t). Both laser frequencies reach both
/// dots; only |1> <-> |X> is driven (|0> is Pauli blocked).
template <typename Scalar>
OperatorMatrix<Scalar> build_drive_lab(Scalar t, const SystemParams<Scalar>& params) {
  OperatorMatrix<Scalar> h = OperatorMatrix<Scalar>::Zero();
  const Scalar w = t / params.hbar;
  const std::complex<Scalar> carrier = detail::phase(params.laser1() * w) + detail::phase(params.laser2() * w);
  const Scalar omega_a_t = gaussian_envelope(t, pulse_spec_a(params));
  const Scalar omega_b_t = gaussian_envelope(t, pulse_spec_b(params));
  const std::complex<Scalar> one(1);
  detail::add_lowering(h, true, omega_a_t / Scalar(2) * carrier, one);
  detail::add_lowering(h, false, omega_b_t / Scalar(2) * carrier, one);
  return h;
}

/// Drive in the interaction picture with respect to build_h0. The laser
/// carrier times exp(-i omega_k t) is evaluated through the detunings so the
/// large optical phases cancel analytically.
template <typename Scalar>
OperatorMatrix<Scalar> build_drive_rotating(Scalar t, const SystemParams<Scalar>& params) {
  const Detunings<Scalar> d = derive_detunings(params);
  OperatorMatrix<Scalar> h = OperatorMatrix<Scalar>::Zero();
  const Scalar w = t / params.hbar;
  const std::complex<Scalar> biexciton = detail::phase(-params.delta_big * w);
  const Scalar omega_a_t = gaussian_envelope(t, pulse_spec_a(params));
  const Scalar omega_b_t = gaussian_envelope(t, pulse_spec_b(params));
  const std::complex<Scalar> carrier_a = detail::phase(d.d_a * w) + detail::phase(d.d_a_prime * w);
  const std::complex<Scalar> carrier_b = detail::phase(d.d_b * w) + detail::phase(d.d_b_prime * w);
  detail::add_lowering(h, true, omega_a_t / Scalar(2) * carrier_a, biexciton);
  detail::add_lowering(h, false, omega_b_t / Scalar(2) * carrier_b, biexciton);
  return h;
}

/// Two-photon Rabi frequency between |11> and |XX> after eliminating the
/// single-exciton states: Omega_a(t) Omega_b(t) times the detuning bracket.
template <typename Scalar>
Scalar effective_rabi(Scalar t, const SystemParams<Scalar>& params) {
  const Detunings<Scalar> d = derive_detunings(params);
  return gaussian_envelope(t, pulse_spec_a(params)) * gaussian_envelope(t, pulse_spec_b(params)) *
         detuning_bracket(d);
}

template <typename Scalar>
OperatorMatrix<Scalar> build_h_eff(Scalar t, const SystemParams<Scalar>& params) {
  OperatorMatrix<Scalar> h = OperatorMatrix<Scalar>::Zero();
  const Scalar half = effective_rabi(t, params) / Scalar(2);
  h(kIndexXX, kIndex11) = half;
  h(kIndex11, kIndexXX) = half;
  return h;
}

}  // namespace bxgate
