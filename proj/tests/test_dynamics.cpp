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

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace bxgate;
using bxgate::testing::designed;
using bxgate::testing::reference_params;

namespace {

// Designed point rescaled so that the effective pulse area is `area`.
SystemParams<double> with_area(double area, double r = 1.0 / 7.0) {
  SystemParams<double> p = designed(r);
  const double scale = std::sqrt(area / kGateArea<double>);
  return p.with_omega0(p.omega0_a * scale);
}

double max_offdiag_identity(const OperatorMatrixd& u) { return (u - OperatorMatrixd::Identity()).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("zero drive leaves every state unchanged") {
  SystemParams<double> p = designed(1.0 / 7.0).with_omega0(0.0);
  const auto [t0, t1] = gate_window(p);
  for (ModelKind model : {ModelKind::FullRotating, ModelKind::Effective}) {
    CAPTURE(to_string(model));
    CHECK(max_offdiag_identity(propagator(model, p, t0, t1)) == 0.0);
  }
}

TEST_CASE("effective model Rabi transfer") {
  SUBCASE("area pi moves |11> fully into |XX>") {
    const SystemParams<double> p = with_area(std::numbers::pi);
    CHECK(std::abs(pulse_area(p) - std::numbers::pi) < 1e-9);
    const auto [t0, t1] = gate_window(p);
    const auto result = propagate(basis_state<double>(kIndex11), ModelKind::Effective, p, t0, t1);
    CHECK(std::abs(std::norm(result.final_state(kIndexXX)) - 1.0) < 1e-8);
    CHECK(result.norm_drift < 1e-9);
  }
  SUBCASE("area 2 pi gives -1 on the {11, XX} block and identity elsewhere") {
    const SystemParams<double> p = designed(1.0 / 7.0);
    const auto [t0, t1] = gate_window(p);
    const OperatorMatrixd u = propagator(ModelKind::Effective, p, t0, t1);
    OperatorMatrixd expected = OperatorMatrixd::Identity();
    expected(kIndex11, kIndex11) = -1.0;
    expected(kIndexXX, kIndexXX) = -1.0;
    CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("transfer follows sin^2(area / 2)") {
    for (double area : {0.3, 1.0, 2.5, 4.0}) {
      const SystemParams<double> p = with_area(area);
      const auto [t0, t1] = gate_window(p);
      const OperatorMatrixd u = propagator(ModelKind::Effective, p, t0, t1);
      CHECK(std::norm(u(kIndexXX, kIndex11)) == doctest::Approx(std::pow(std::sin(area / 2), 2)).epsilon(1e-8));
    }
  }
}

TEST_CASE("|01> is a dark state of the effective model") {
  const SystemParams<double> p = designed(1.0 / 7.0);
  const auto [t0, t1] = gate_window(p);
  const auto result = propagate(basis_state<double>(kIndex01), ModelKind::Effective, p, t0, t1);
  CHECK(result.final_state == basis_state<double>(kIndex01));
}

TEST_CASE("|00> is stationary in every model") {
  const SystemParams<double> p = designed(0.3);
  const auto psi = basis_state<double>(kIndex00);
  for (ModelKind model : {ModelKind::FullRotating, ModelKind::Effective}) {
    const auto [t0, t1] = gate_window(p);
    CHECK(propagate(psi, model, p, t0, t1).final_state == psi);
  }
  // The lab frame carries the bare energy of |00>, which is zero.
  CHECK(propagate(psi, ModelKind::FullLab, p, -0.02, 0.02).final_state == psi);
}

TEST_CASE("full model at the designed point") {
  const SystemParams<double> p = designed(1.0 / 7.0);
  const auto [t0, t1] = gate_window(p);
  PropagationOptions<double> options;
  options.record_trajectory = true;
  const auto run = propagate_unitary(ModelKind::FullRotating, p, t0, t1, options);

  SUBCASE("unitary with unit column norms") {
    CHECK(unitarity_error(run.unitary) < 1e-7);
    for (int k = 0; k < kDim; ++k) CHECK(std::abs(run.unitary.col(k).norm() - 1.0) < 1e-9);
    CHECK(run.norm_drift < 1e-9);
    CHECK(run.convergence_change <= 1e-8);
  }
  SUBCASE("trajectory samples are ordered and span the window") {
    REQUIRE(run.trajectory.size() == 512);
    CHECK(run.trajectory.front().t == t0);
    CHECK(run.trajectory.back().t == doctest::Approx(t1).epsilon(1e-14));
    for (std::size_t i = 1; i < run.trajectory.size(); ++i) CHECK(run.trajectory[i].t > run.trajectory[i - 1].t);
  }
  SUBCASE("virtual intermediate population is of order 2 R^2") {
    const double peak = intermediate_population(column_trajectory(run.trajectory, kIndex11));
    CHECK(peak == doctest::Approx(0.0674569).epsilon(1e-4));
    const double nbar = 2.0 / 49.0;
    CHECK(peak > nbar / 2);
    CHECK(peak < nbar * 2);
  }
}

TEST_CASE("intermediate population scales quadratically with R") {
  PropagationOptions<double> options;
  options.record_trajectory = true;
  auto peak_at = [&](double r) {
    const SystemParams<double> p = designed(r);
    const auto [t0, t1] = gate_window(p);
    const auto run = propagate(basis_state<double>(kIndex11), ModelKind::FullRotating, p, t0, t1, options);
    return intermediate_population(run.trajectory);
  };
  const double ratio = peak_at(1.0 / 7.0) / peak_at(1.0 / 14.0);
  CHECK(ratio > 4.0 * 0.7);
  CHECK(ratio < 4.0 * 1.3);
}

TEST_CASE("effective model never populates the intermediates") {
  const SystemParams<double> p = designed(0.3);
  const auto [t0, t1] = gate_window(p);
  PropagationOptions<double> options;
  options.record_trajectory = true;
  const auto run = propagate(basis_state<double>(kIndex11), ModelKind::Effective, p, t0, t1, options);
  CHECK(intermediate_population(run.trajectory) == 0.0);
}

TEST_CASE("full and effective models agree on |11> -> |XX> transfer for small R") {
  for (double r : {0.05, 1.0 / 14.0, 0.1}) {
    CAPTURE(r);
    const SystemParams<double> p = designed(r);
    const auto [t0, t1] = gate_window(p);
    const double full = std::norm(propagator(ModelKind::FullRotating, p, t0, t1)(kIndexXX, kIndex11));
    const double effective = std::norm(propagator(ModelKind::Effective, p, t0, t1)(kIndexXX, kIndex11));
    CHECK(std::abs(full - effective) < 0.05);
  }
}

TEST_CASE("property: unitarity over random designs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r_dist(0.1, 0.5);
  std::uniform_real_distribution<double> delta_dist(1.3, 3.7);
  for (int draw = 0; draw < 20; ++draw) {
    const SystemParams<double> p = designed(r_dist(rng), delta_dist(rng));
    const auto [t0, t1] = gate_window(p);
    for (ModelKind model : {ModelKind::FullRotating, ModelKind::Effective}) {
      CHECK(unitarity_error(propagator(model, p, t0, t1)) < 1e-7);
    }
  }
}

TEST_CASE("lab and rotating frames agree after removing the bare phases") {
  const SystemParams<double> p = designed(0.3);
  const double t0 = -0.05, t1 = 0.05;
  StateVectord psi = (basis_state<double>(kIndex11) + basis_state<double>(kIndex01) + basis_state<double>(kIndexX1)) /
                     std::sqrt(3.0);
  const OperatorMatrixd h0 = build_h0(p);
  auto to_lab = [&](double t) {
    StateVectord phases;
    for (int k = 0; k < kDim; ++k) phases(k) = std::polar(1.0, -h0(k, k).real() * t / p.hbar);
    return phases;
  };
  const StateVectord lab0 = to_lab(t0).cwiseProduct(psi);
  const StateVectord lab1 = propagate(lab0, ModelKind::FullLab, p, t0, t1).final_state;
  const StateVectord rot1 = propagate(psi, ModelKind::FullRotating, p, t0, t1).final_state;
  CHECK((to_lab(t1).cwiseProduct(rot1) - lab1).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("convergence order of the integrators") {
  const SystemParams<double> p = designed(0.3);
  const auto [t0, t1] = gate_window(p);
  const auto psi = basis_state<double>(kIndex11);
  for (auto [integrator, order] : {std::pair{Integrator::Magnus4, 4}, std::pair{Integrator::ExponentialMidpoint, 2}}) {
    CAPTURE(order);
    auto run = [&](double step) {
      PropagationOptions<double> o;
      o.step = step;
      o.check_convergence = false;
      o.integrator = integrator;
      return propagate(psi, ModelKind::FullRotating, p, t0, t1, o).final_state;
    };
    const double h = 4 * default_step(ModelKind::FullRotating, p);
    const StateVectord reference = run(h / 4);
    const double e1 = (run(h) - reference).norm();
    const double e2 = (run(h / 2) - reference).norm();
    // Measured against the quarter-step reference, C h^p (1 - 4^-p) over
    // C h^p (2^-p - 4^-p) gives a nominal ratio of 2^p + 1.
    const double nominal = std::pow(2.0, order) + 1.0;
    CHECK(e1 / e2 > nominal / 2);
    CHECK(e1 / e2 < nominal * 2);
  }
}

TEST_CASE("error paths") {
  const SystemParams<double> p = designed(0.3);
  const auto psi = basis_state<double>(kIndex11);
  CHECK_THROWS_AS(propagate(psi, ModelKind::FullRotating, p, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(propagate(psi, ModelKind::FullRotating, p, 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(propagate(StateVectord(2.0 * psi), ModelKind::FullRotating, p, 0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(intermediate_population(std::vector<TrajectoryPoint<double, StateVectord>>{}), ParameterError);

  PropagationOptions<double> strict;
  strict.step = 1.0;
  strict.max_halvings = 1;
  strict.convergence_tol = 1e-14;
  const auto [t0, t1] = gate_window(p);
  CHECK_THROWS_AS(propagate(psi, ModelKind::FullRotating, p, t0, t1, strict), NumericalError);

  SystemParams<double> bad = p;
  bad.delta_a = 1.0;
  CHECK_THROWS_AS(propagate(psi, ModelKind::FullRotating, bad, t0, t1), ParameterError);
}

TEST_CASE("model names round-trip") {
  for (ModelKind model : {ModelKind::FullRotating, ModelKind::Effective, ModelKind::FullLab}) {
    CHECK(parse_model(to_string(model)) == model);
  }
  CHECK(parse_model("rotating") == ModelKind::FullRotating);
  CHECK_THROWS_AS(parse_model("dense"), ParameterError);
}
