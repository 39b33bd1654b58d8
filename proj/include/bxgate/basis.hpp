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

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace bxgate {

/// Thrown for physically invalid or inconsistent parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an integrator or quadrature cannot reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single-dot levels. The enumerator order fixes the basis indexing.
enum class DotLevel : int { Zero = 0, One = 1, Exciton = 2 };

inline constexpr int kDotLevels = 3;
inline constexpr int kDim = kDotLevels * kDotLevels;

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Amplitudes over {0,1,X} (dot a) x {0,1,X} (dot b), row-major.
template <typename Scalar>
using StateVector = Eigen::Matrix<std::complex<Scalar>, kDim, 1>;

template <typename Scalar>
using OperatorMatrix = Eigen::Matrix<std::complex<Scalar>, kDim, kDim>;

using StateVectord = StateVector<double>;
using OperatorMatrixd = OperatorMatrix<double>;

constexpr int basis_index(DotLevel level_a, DotLevel level_b) noexcept {
  return kDotLevels * static_cast<int>(level_a) + static_cast<int>(level_b);
}

constexpr DotLevel level_of_a(int index) noexcept { return static_cast<DotLevel>(index / kDotLevels); }
constexpr DotLevel level_of_b(int index) noexcept { return static_cast<DotLevel>(index % kDotLevels); }

inline constexpr int kIndex00 = basis_index(DotLevel::Zero, DotLevel::Zero);
inline constexpr int kIndex01 = basis_index(DotLevel::Zero, DotLevel::One);
inline constexpr int kIndex10 = basis_index(DotLevel::One, DotLevel::Zero);
inline constexpr int kIndex11 = basis_index(DotLevel::One, DotLevel::One);
inline constexpr int kIndex1X = basis_index(DotLevel::One, DotLevel::Exciton);
inline constexpr int kIndexX1 = basis_index(DotLevel::Exciton, DotLevel::One);
inline constexpr int kIndexXX = basis_index(DotLevel::Exciton, DotLevel::Exciton);

/// Indices of |00>, |01>, |10>, |11> in that order.
inline constexpr std::array<int, 4> kComputationalIndices = {kIndex00, kIndex01, kIndex10, kIndex11};

constexpr bool is_computational(int index) noexcept {
  return level_of_a(index) != DotLevel::Exciton && level_of_b(index) != DotLevel::Exciton;
}

inline char level_char(DotLevel level) {
  switch (level) {
    case DotLevel::Zero: return '0';
    case DotLevel::One: return '1';
    case DotLevel::Exciton: return 'X';
  }
  return '?';
}

/// Two-character ket label such as "1X".
inline std::string basis_label(int index) {
  return {level_char(level_of_a(index)), level_char(level_of_b(index))};
}

/// Parses "00", "01", "10" or "11" into a basis index.
inline int parse_computational_label(std::string_view label) {
  for (int index : kComputationalIndices) {
    if (basis_label(index) == label) return index;
  }
  throw ParameterError("initial state must be one of 00, 01, 10, 11; got '" + std::string(label) + "'");
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(int index) {
  StateVector<Scalar> psi = StateVector<Scalar>::Zero();
  psi(index) = Scalar(1);
  return psi;
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(DotLevel level_a, DotLevel level_b) {
  return basis_state<Scalar>(basis_index(level_a, level_b));
}

/// max_ij |H - H^dagger|
template <typename Derived>
typename Derived::RealScalar hermiticity_error(const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

/// max_ij |U^dagger U - I|
template <typename Derived>
typename Derived::RealScalar unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return (u.adjoint() * u - Plain::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace bxgate
