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
#include <queue>
#include <vector>

#include "bxgate/basis.hpp"

namespace bxgate {

template <typename Scalar>
struct QuadratureResult {
  Scalar value{};
  Scalar error_estimate{};
  int intervals = 0;
};

namespace detail {

template <typename Scalar>
struct KronrodSegment {
  Scalar a, b, value, error;
  bool operator<(const KronrodSegment& other) const { return error < other.error; }
};

// Gauss-Kronrod 7/15 rule on [a, b]; error is |K15 - G7|.
template <typename Scalar, typename F>
KronrodSegment<Scalar> kronrod15(F& f, Scalar a, Scalar b) {
  static constexpr std::array<long double, 8> xgk = {
      0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
      0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
      0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
      0.207784955007898467600689403773245L, 0.0L};
  static constexpr std::array<long double, 8> wgk = {
      0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
      0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
      0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
      0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
  static constexpr std::array<long double, 4> wg = {
      0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
      0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

  const Scalar center = (a + b) / Scalar(2);
  const Scalar half = (b - a) / Scalar(2);
  const Scalar fc = f(center);
  Scalar kronrod = Scalar(wgk[7]) * fc;
  Scalar gauss = Scalar(wg[3]) * fc;
  for (int j = 0; j < 7; ++j) {
    const Scalar dx = half * Scalar(xgk[j]);
    const Scalar sum = f(center - dx) + f(center + dx);
    kronrod += Scalar(wgk[j]) * sum;
    if (j % 2 == 1) gauss += Scalar(wg[j / 2]) * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]. Throws
/// NumericalError if the relative error target is not met within max_intervals.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_adaptive(F f, Scalar a, Scalar b, Scalar rel_tol = Scalar(1e-12),
                                            int max_intervals = 4000) {
  std::priority_queue<detail::KronrodSegment<Scalar>> heap;
  heap.push(detail::kronrod15(f, a, b));
  Scalar total = heap.top().value;
  Scalar error = heap.top().error;
  int intervals = 1;
  const Scalar floor = Scalar(50) * std::numeric_limits<Scalar>::epsilon();
  while (error > std::max(rel_tol, floor) * std::abs(total) && error > std::numeric_limits<Scalar>::min()) {
    if (intervals >= max_intervals) {
      throw NumericalError("adaptive quadrature did not converge to the requested relative tolerance");
    }
    const auto worst = heap.top();
    heap.pop();
    const Scalar mid = (worst.a + worst.b) / Scalar(2);
    const auto left = detail::kronrod15(f, worst.a, mid);
    const auto right = detail::kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum to drop the running-update rounding.
  Scalar value = 0;
  Scalar err = 0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err, intervals};
}

}  // namespace bxgate
