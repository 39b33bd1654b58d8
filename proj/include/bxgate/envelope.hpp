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

#include "bxgate/system.hpp"

namespace bxgate {

/// Gaussian pulse centred at t = 0.
template <typename Scalar = double>
struct PulseSpec {
  Scalar omega0{};  // peak coupling, meV
  Scalar tau{};     // duration, ps
  Scalar window{};  // integration window, ps
};

template <typename Scalar>
Scalar gaussian_envelope(Scalar t, const PulseSpec<Scalar>& spec) {
  const Scalar x = t / spec.tau;
  return spec.omega0 * std::exp(-x * x / Scalar(2));
}

template <typename Scalar>
PulseSpec<Scalar> pulse_spec_a(const SystemParams<Scalar>& params) {
  return {params.omega0_a, params.tau, params.window()};
}

template <typename Scalar>
PulseSpec<Scalar> pulse_spec_b(const SystemParams<Scalar>& params) {
  return {params.omega0_b, params.tau, params.window()};
}

}  // namespace bxgate
