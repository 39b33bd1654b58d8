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

#include <cstdint>
#include <string>
#include <vector>

#include "bxgate/system.hpp"

namespace bxgate::harness {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0;      // measured figure (error, ratio, ...)
  double threshold = 0;  // pass bound on value
  std::string detail;
};

/// Numerical invariant checks around a designed operating point: Hermiticity,
/// Pauli-blocking zeros, detuning algebra, unitarity, norm drift, step
/// halving, convergence order, frame equivalence, |00> stationarity and
/// gauge invariance of the gate metrics.
std::vector<CheckResult> run_validation_suite(const SystemParams<double>& designed, std::uint64_t seed = 20261016);

bool all_passed(const std::vector<CheckResult>& results);

std::string format_check_table(const std::vector<CheckResult>& results);

}  // namespace bxgate::harness
