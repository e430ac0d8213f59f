// Copyright 2026 The qroof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qroof {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Numerical tolerances shared across modules.
namespace tol {
inline constexpr double kHermitian = 1e-12;      // max |A - A^dagger| entry
inline constexpr double kTrace = 1e-12;          // |Tr rho - 1|
inline constexpr double kNorm = 1e-12;           // | ||psi|| - 1 |
inline constexpr double kMinEigenvalue = -1e-10; // PSD slack
inline constexpr double kZeroEigenvalue = 1e-12; // eigenvalues below are exactly 0
inline constexpr double kVarianceClamp = -1e-12; // tiny negative variances are clamped
inline constexpr double kViolation = -1e-9;      // slack below this is a violation
}  // namespace tol

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidArgument,
  kNotHermitian,
  kNotNormalized,
  kNotDensityMatrix,
  kInvalidSpin,
  kCutoffTooSmall,
  kKindMismatch,
  kVanishingSignal,
  kUnestimableParameter,
  kAncillaTooSmall,
  kDegenerateGroundState,
  kNotConverged,
  kInfeasible,
  kMalformedSpec,
  kUnknownName,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace qroof
