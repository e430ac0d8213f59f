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

// Quantum Fisher information, the symmetric logarithmic derivative and the
// error-propagation / Cramer-Rao quantities built from them.
//
// All formulas are evaluated on the support of rho (eigenvalues > 1e-12).
// Pairs of kernel directions contribute nothing; a pair (support k, kernel l)
// is summed in closed form through the kernel projector, so low-rank states
// in large spaces never need a full eigenbasis.

#pragma once

#include <optional>

#include "qroof/quantum_core.hpp"

namespace qroof {

/// F_Q[rho, B] = 2 sum_{k,l} (l_k - l_l)^2 / (l_k + l_l) |<k|B|l>|^2.
double qfi(const DensityMatrix& rho, const HermitianOperator& b);
/// Pure states: F_Q = 4 Var(B).
double qfi(const PureState& psi, const HermitianOperator& b);
double qfi(const State& state, const HermitianOperator& b);

struct SldResult {
  HermitianOperator sld;
  double qfi = 0.0;
  double mean_sld = 0.0;
  /// Frobenius norm of i[rho, B] - {rho, L} / 2.
  double residual = 0.0;
};

/// L = 2i sum_{k,l} (l_k - l_l) / (l_k + l_l) <k|B|l> |k><l|, so that
/// i[rho, B] = {rho, L} / 2, <L> = 0 and F_Q = Tr(rho L^2).
SldResult sld(const DensityMatrix& rho, const HermitianOperator& b);

/// Var(A) / |<C>|^2 with C = i[A, B]. Throws kVanishingSignal if |<C>| <= 1e-12.
double error_propagation(const State& state, const HermitianOperator& a,
                         const HermitianOperator& b);

struct EstimationReport {
  double qfi = 0.0;
  /// Single-shot (Delta theta)^2_A; present when a measured observable was given.
  std::optional<double> error_propagation;
  /// 1 / (m F_Q).
  double cramer_rao = 0.0;
  int repetitions = 1;
};

/// Throws kUnestimableParameter when F_Q <= 1e-12 and kInvalidArgument for m < 1.
EstimationReport cramer_rao(const State& state, const HermitianOperator& b, int repetitions,
                            const std::optional<HermitianOperator>& measured = std::nullopt);

/// Var(A) - F_Q[rho, A] / 4, clamped to 0 within -1e-10.
double variance_qfi_gap(const State& state, const HermitianOperator& a);

struct SaturationCheck {
  bool saturated = false;
  /// Least-squares c in i[rho, B] ~ {rho, c A} / 2.
  double c = 0.0;
  double residual = 0.0;
  /// Var(A) F_Q[rho, B] and |<i[A, B]>|^2.
  double product = 0.0;
  double signal_squared = 0.0;
};

/// Tests whether A is proportional to the SLD, which is when
/// Var(A) F_Q[rho, B] = |<i[A, B]>|^2 holds with equality.
SaturationCheck check_sld_saturation(const DensityMatrix& rho, const HermitianOperator& a,
                                     const HermitianOperator& b);

}  // namespace qroof
