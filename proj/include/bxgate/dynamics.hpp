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
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "bxgate/basis.hpp"
#include "bxgate/hamiltonian.hpp"
#include "bxgate/system.hpp"

namespace bxgate {

/// Which Hamiltonian drives the evolution.
enum class ModelKind {
  FullRotating,  // full drive in the frame rotating with H0
  Effective,     // two-level |11> <-> |XX> effective coupling
  FullLab,       // H0 + lab-frame drive
};

enum class Integrator {
  ExponentialMidpoint,  // exp(-i H(t + dt/2) dt), second order
  Magnus4,              // commutator-free fourth-order Magnus, two exponentials per step
};

inline std::string_view to_string(ModelKind model) {
  switch (model) {
    case ModelKind::FullRotating: return "full";
    case ModelKind::Effective: return "effective";
    case ModelKind::FullLab: return "lab";
  }
  return "?";
}

inline ModelKind parse_model(std::string_view name) {
  if (name == "full" || name == "rotating") return ModelKind::FullRotating;
  if (name == "effective") return ModelKind::Effective;
  if (name == "lab") return ModelKind::FullLab;
  throw ParameterError("model must be one of full, effective, lab; got '" + std::string(name) + "'");
}

template <typename Scalar>
struct PropagationOptions {
  Scalar step = 0;  // 0 selects default_step
  int samples = 512;
  bool record_trajectory = false;
  bool check_convergence = true;
  Scalar convergence_tol = Scalar(1e-8);
  int max_halvings = 12;
  Integrator integrator = Integrator::Magnus4;
};

template <typename Scalar, typename State>
struct TrajectoryPoint {
  Scalar t{};
  State state;
};

template <typename Scalar>
struct PropagationResult {
  StateVector<Scalar> final_state;
  std::vector<TrajectoryPoint<Scalar, StateVector<Scalar>>> trajectory;
  Scalar norm_drift = 0;          // max | |psi|^2 - 1 | over the run
  long steps = 0;
  Scalar step = 0;
  Scalar convergence_change = 0;  // max |psi(dt) - psi(dt/2)| of the accepted pass
};

template <typename Scalar>
struct UnitaryPropagation {
  OperatorMatrix<Scalar> unitary;
  std::vector<TrajectoryPoint<Scalar, OperatorMatrix<Scalar>>> trajectory;
  Scalar norm_drift = 0;  // worst column norm drift
  long steps = 0;
  Scalar step = 0;
  Scalar convergence_change = 0;
};

/// Gate window [-T/2, T/2] centred on the pulse peak.
template <typename Scalar>
std::pair<Scalar, Scalar> gate_window(const SystemParams<Scalar>& params) {
  const Scalar half = params.window() / Scalar(2);
  return {-half, half};
}

template <typename Scalar>
OperatorMatrix<Scalar> model_hamiltonian(ModelKind model, Scalar t, const SystemParams<Scalar>& params) {
  switch (model) {
    case ModelKind::FullRotating: return build_drive_rotating(t, params);
    case ModelKind::Effective: return build_h_eff(t, params);
    case ModelKind::FullLab: return build_h0(params) + build_drive_lab(t, params);
  }
  return OperatorMatrix<Scalar>::Zero();
}

/// min(tau/200, 0.02 hbar / delta_min); the lab frame also resolves the
/// optical carrier.
template <typename Scalar>
Scalar default_step(ModelKind model, const SystemParams<Scalar>& params) {
  const Detunings<Scalar> d = derive_detunings(params);
  Scalar step = std::min(params.tau / Scalar(200), Scalar(0.02) * params.hbar / d.d_min);
  if (model == ModelKind::FullLab) {
    const Scalar fastest = std::max({std::abs(params.laser1()), std::abs(params.laser2()),
                                     std::abs(params.omega_a + params.omega_b() + params.delta_big)});
    step = std::min(step, Scalar(0.02) * params.hbar / fastest);
  }
  return step;
}

namespace detail {

// Closed-form exp(-i scale H) on a 2x2 Hermitian block.
template <typename Scalar>
void exp_block_2(const OperatorMatrix<Scalar>& h, OperatorMatrix<Scalar>& u, const std::array<int, kDim>& members,
                 Scalar scale) {
  using C = std::complex<Scalar>;
  const int p = members[0];
  const int q = members[1];
  const Scalar mean = (h(p, p).real() + h(q, q).real()) / Scalar(2);
  const Scalar split = (h(p, p).real() - h(q, q).real()) / Scalar(2);
  const C off = h(p, q);
  const Scalar w = std::sqrt(split * split + std::norm(off));
  const C global = std::polar(Scalar(1), -scale * mean);
  const Scalar c = std::cos(scale * w);
  // sin(scale w) / w, finite as w -> 0
  const Scalar sinc = w > Scalar(0) ? std::sin(scale * w) / w : scale;
  const C minus_i(0, -1);
  u(p, p) = global * (c + minus_i * sinc * split);
  u(q, q) = global * (c - minus_i * sinc * split);
  u(p, q) = global * minus_i * sinc * off;
  u(q, p) = global * minus_i * sinc * std::conj(off);
}

template <int N, typename Scalar>
void exp_block(const OperatorMatrix<Scalar>& h, OperatorMatrix<Scalar>& u, const std::array<int, kDim>& members,
               Scalar scale, int n = N) {
  using C = std::complex<Scalar>;
  using Block = Eigen::Matrix<C, N, N, 0, (N == Eigen::Dynamic ? kDim : N), (N == Eigen::Dynamic ? kDim : N)>;
  using Vec = Eigen::Matrix<C, N, 1, 0, (N == Eigen::Dynamic ? kDim : N), 1>;
  Block sub(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) sub(r, c) = h(members[r], members[c]);
  Eigen::SelfAdjointEigenSolver<Block> solver(sub);
  const Block& vecs = solver.eigenvectors();
  Vec phases(n);
  for (int k = 0; k < n; ++k) phases(k) = std::polar(Scalar(1), -scale * solver.eigenvalues()(k));
  const Block block = vecs * phases.asDiagonal() * vecs.adjoint();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) u(members[r], members[c]) = block(r, c);
}

}  // namespace detail

/// exp(-i scale H) for Hermitian H. Structurally decoupled blocks are
/// exponentiated separately, so states with no coupling evolve by an exact
/// phase and stay exactly unmixed.
template <typename Scalar>
OperatorMatrix<Scalar> exp_hermitian(const OperatorMatrix<Scalar>& h, Scalar scale) {
  using C = std::complex<Scalar>;
  std::array<int, kDim> parent{};
  for (int i = 0; i < kDim; ++i) parent[i] = i;
  auto root = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      if (h(i, j) != C(0) || h(j, i) != C(0)) parent[root(i)] = root(j);
    }
  }

  OperatorMatrix<Scalar> u = OperatorMatrix<Scalar>::Zero();
  std::array<bool, kDim> done{};
  for (int i = 0; i < kDim; ++i) {
    if (done[i]) continue;
    std::array<int, kDim> members{};
    int n = 0;
    for (int j = i; j < kDim; ++j) {
      if (!done[j] && root(j) == root(i)) {
        members[n++] = j;
        done[j] = true;
      }
    }
    switch (n) {
      case 1: u(i, i) = std::polar(Scalar(1), -scale * h(i, i).real()); break;
      case 2: detail::exp_block_2(h, u, members, scale); break;
      case 4: detail::exp_block<4>(h, u, members, scale); break;
      default: detail::exp_block<Eigen::Dynamic>(h, u, members, scale, n); break;
    }
  }
  return u;
}

namespace detail {

// Exponential factors of one step, in application order.
template <typename Scalar>
int step_factors(ModelKind model, const SystemParams<Scalar>& params, Scalar t, Scalar dt, Integrator integrator,
                 std::array<OperatorMatrix<Scalar>, 2>& factors) {
  const Scalar scale = dt / params.hbar;
  if (integrator == Integrator::ExponentialMidpoint) {
    factors[0] = exp_hermitian<Scalar>(model_hamiltonian(model, t + dt / Scalar(2), params), scale);
    return 1;
  }
  const Scalar s3 = std::sqrt(Scalar(3));
  const Scalar c1 = Scalar(0.5) - s3 / Scalar(6);
  const Scalar c2 = Scalar(0.5) + s3 / Scalar(6);
  const Scalar a1 = (Scalar(3) - Scalar(2) * s3) / Scalar(12);
  const Scalar a2 = (Scalar(3) + Scalar(2) * s3) / Scalar(12);
  const OperatorMatrix<Scalar> h1 = model_hamiltonian(model, t + c1 * dt, params);
  const OperatorMatrix<Scalar> h2 = model_hamiltonian(model, t + c2 * dt, params);
  factors[0] = exp_hermitian<Scalar>(a2 * h1 + a1 * h2, scale);
  factors[1] = exp_hermitian<Scalar>(a1 * h1 + a2 * h2, scale);
  return 2;
}

// x <- s x, skipping the structural zeros of s.
template <typename Scalar, typename State>
void apply_sparse(const OperatorMatrix<Scalar>& s, State& x) {
  using C = std::complex<Scalar>;
  std::array<std::pair<int, int>, kDim * kDim> nonzeros;
  int count = 0;
  for (int j = 0; j < kDim; ++j)
    for (int i = 0; i < kDim; ++i)
      if (s(i, j) != C(0)) nonzeros[count++] = {i, j};
  State y = State::Zero(x.rows(), x.cols());
  for (int c = 0; c < x.cols(); ++c)
    for (int k = 0; k < count; ++k) y(nonzeros[k].first, c) += s(nonzeros[k].first, nonzeros[k].second) * x(nonzeros[k].second, c);
  x = y;
}

}  // namespace detail

/// One-step propagator over [t, t + dt].
template <typename Scalar>
OperatorMatrix<Scalar> step_propagator(ModelKind model, const SystemParams<Scalar>& params, Scalar t, Scalar dt,
                                       Integrator integrator) {
  std::array<OperatorMatrix<Scalar>, 2> factors;
  const int n = detail::step_factors(model, params, t, dt, integrator, factors);
  return n == 1 ? factors[0] : OperatorMatrix<Scalar>(factors[1] * factors[0]);
}

namespace detail {

template <typename Scalar, typename Derived>
Scalar norm_drift_of(const Eigen::MatrixBase<Derived>& state) {
  return (state.colwise().squaredNorm().array() - Scalar(1)).abs().maxCoeff();
}

template <typename Scalar, typename State>
struct FixedStepRun {
  State final_state;
  std::vector<TrajectoryPoint<Scalar, State>> trajectory;
  Scalar norm_drift = 0;
};

template <typename Scalar, typename State>
FixedStepRun<Scalar, State> integrate_fixed(const State& initial, ModelKind model, const SystemParams<Scalar>& params,
                                            Scalar t0, Scalar t1, long steps, Integrator integrator, int samples) {
  FixedStepRun<Scalar, State> run;
  run.final_state = initial;
  const Scalar dt = (t1 - t0) / Scalar(steps);
  std::vector<long> marks;
  for (int i = 0; i < samples; ++i) {
    const long k = samples > 1 ? std::lround(Scalar(i) * Scalar(steps) / Scalar(samples - 1)) : 0;
    if (marks.empty() || k > marks.back()) marks.push_back(k);
  }
  run.trajectory.reserve(marks.size());
  std::size_t next = 0;
  auto record = [&](long k) {
    if (next < marks.size() && marks[next] == k) {
      run.trajectory.push_back({t0 + Scalar(k) * dt, run.final_state});
      ++next;
    }
  };
  record(0);
  std::array<OperatorMatrix<Scalar>, 2> factors;
  for (long k = 0; k < steps; ++k) {
    const Scalar t = t0 + Scalar(k) * dt;
    const int n = step_factors(model, params, t, dt, integrator, factors);
    for (int f = 0; f < n; ++f) apply_sparse(factors[f], run.final_state);
    run.norm_drift = std::max(run.norm_drift, norm_drift_of<Scalar>(run.final_state));
    record(k + 1);
  }
  return run;
}

// Integrates with step halving until two successive passes agree to the
// tolerance. Returns the finer pass.
template <typename Scalar, typename State>
std::pair<FixedStepRun<Scalar, State>, std::pair<long, Scalar>> integrate_converged(
    const State& initial, ModelKind model, const SystemParams<Scalar>& params, Scalar t0, Scalar t1,
    const PropagationOptions<Scalar>& options) {
  const Scalar step = options.step > 0 ? options.step : default_step(model, params);
  long steps = std::max<long>(1, static_cast<long>(std::ceil((t1 - t0) / step - Scalar(1e-9))));
  const int samples = options.record_trajectory ? options.samples : 0;
  auto coarse = integrate_fixed<Scalar>(initial, model, params, t0, t1, steps, options.integrator, samples);
  if (!options.check_convergence) return {std::move(coarse), {steps, Scalar(0)}};
  Scalar change = 0;
  for (int halving = 0; halving < options.max_halvings; ++halving) {
    auto fine = integrate_fixed<Scalar>(initial, model, params, t0, t1, 2 * steps, options.integrator, samples);
    change = (fine.final_state - coarse.final_state).cwiseAbs().maxCoeff();
    steps *= 2;
    if (change <= options.convergence_tol) return {std::move(fine), {steps, change}};
    coarse = std::move(fine);
  }
  throw NumericalError("integrator did not converge: step-size underflow after " +
                       std::to_string(options.max_halvings) + " halvings (last change " + std::to_string(change) +
                       ")");
}

template <typename Scalar>
void check_interval(Scalar t0, Scalar t1) {
  if (!(t1 > t0)) throw ParameterError("propagation interval requires t1 > t0");
}

}  // namespace detail

/// Solves i hbar d/dt psi = H(t) psi for the chosen model over [t0, t1].
template <typename Scalar>
PropagationResult<Scalar> propagate(const StateVector<Scalar>& psi0, ModelKind model,
                                    const SystemParams<Scalar>& params, Scalar t0, Scalar t1,
                                    const PropagationOptions<Scalar>& options = {}) {
  validate(params);
  detail::check_interval(t0, t1);
  if (std::abs(psi0.squaredNorm() - Scalar(1)) > Scalar(1e-9)) throw ParameterError("initial state must be normalised");
  auto [run, info] = detail::integrate_converged<Scalar>(psi0, model, params, t0, t1, options);
  PropagationResult<Scalar> result;
  result.final_state = run.final_state;
  result.trajectory = std::move(run.trajectory);
  result.norm_drift = run.norm_drift;
  result.steps = info.first;
  result.step = (t1 - t0) / Scalar(info.first);
  result.convergence_change = info.second;
  return result;
}

/// Full propagator with diagnostics and an optional sampled trajectory of U(t, t0).
template <typename Scalar>
UnitaryPropagation<Scalar> propagate_unitary(ModelKind model, const SystemParams<Scalar>& params, Scalar t0, Scalar t1,
                                             const PropagationOptions<Scalar>& options = {}) {
  validate(params);
  detail::check_interval(t0, t1);
  const OperatorMatrix<Scalar> identity = OperatorMatrix<Scalar>::Identity();
  auto [run, info] = detail::integrate_converged<Scalar>(identity, model, params, t0, t1, options);
  UnitaryPropagation<Scalar> result;
  result.unitary = run.final_state;
  result.trajectory = std::move(run.trajectory);
  result.norm_drift = run.norm_drift;
  result.steps = info.first;
  result.step = (t1 - t0) / Scalar(info.first);
  result.convergence_change = info.second;
  return result;
}

/// U(t1, t0); column k is the propagated basis state k.
template <typename Scalar>
OperatorMatrix<Scalar> propagator(ModelKind model, const SystemParams<Scalar>& params, Scalar t0, Scalar t1,
                                  const PropagationOptions<Scalar>& options = {}) {
  PropagationOptions<Scalar> opts = options;
  opts.record_trajectory = false;
  return propagate_unitary(model, params, t0, t1, opts).unitary;
}

/// Extracts U(t) e_k from a unitary trajectory.
template <typename Scalar>
std::vector<TrajectoryPoint<Scalar, StateVector<Scalar>>> column_trajectory(
    const std::vector<TrajectoryPoint<Scalar, OperatorMatrix<Scalar>>>& trajectory, int column) {
  std::vector<TrajectoryPoint<Scalar, StateVector<Scalar>>> out;
  out.reserve(trajectory.size());
  for (const auto& point : trajectory) out.push_back({point.t, point.state.col(column)});
  return out;
}

/// Peak population of the single-exciton intermediates |1X> and |X1>.
template <typename Scalar>
Scalar intermediate_population(const std::vector<TrajectoryPoint<Scalar, StateVector<Scalar>>>& trajectory) {
  if (trajectory.empty()) throw ParameterError("intermediate_population needs a non-empty trajectory");
  Scalar peak = 0;
  for (const auto& point : trajectory) {
    peak = std::max(peak, std::norm(point.state(kIndex1X)) + std::norm(point.state(kIndexX1)));
  }
  return peak;
}

}  // namespace bxgate
