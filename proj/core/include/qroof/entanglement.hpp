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

// Entanglement conditions and their metrological counterparts for two bosonic
// modes and for spin systems.

#pragma once

#include <array>

#include "qroof/bounds.hpp"
#include "qroof/quantum_core.hpp"
#include "qroof/roofs.hpp"

namespace qroof {

/// Quadratures of two modes, each truncated at fock.cutoff: x1 = x (x) 1 etc.
struct TwoModeOperators {
  HermitianOperator x1, p1, x2, p2;
};
TwoModeOperators make_two_mode_operators(const FockAlgebra& fock);

/// F_Q of x1 +- x2 and p1 +- p2, and the comparison with mixtures of
/// products of coherent states (P-nonnegative class), for which all four are <= 4.
struct CvUsefulness {
  double qfi_x_plus = 0.0;
  double qfi_x_minus = 0.0;
  double qfi_p_plus = 0.0;
  double qfi_p_minus = 0.0;
  /// Some F_Q exceeds 4 + 1e-9.
  bool more_useful_than_p_nonnegative = false;
};

CvUsefulness coherent_mixture_usefulness(const State& state, const FockAlgebra& fock);

struct TwoModeReport {
  double var_x_plus = 0.0;   // Var(x1 + x2)
  double var_p_minus = 0.0;  // Var(p1 - p2)
  double duan_lhs = 0.0;
  double duan_rhs = 2.0;
  bool duan_violated = false;
  CvUsefulness usefulness;
  /// duan_lhs >= 4 / F_Q[p1 + p2] + 4 / F_Q[x1 - x2].
  double relation_rhs = 0.0;
  double relation_slack = 0.0;
  /// Set when one of the F_Q terms is below 1e-12; its term is left out of
  /// relation_rhs, which then only bounds the finite part.
  bool relation_indeterminate = false;
};

/// Throws kDimensionMismatch unless dim = cutoff^2.
TwoModeReport duan_report(const State& state, const FockAlgebra& fock);

/// Collective J_l = sum_n J_l^(n) for N spin-j parties.
std::array<HermitianOperator, 3> collective_spin(double j, int parties);

enum class SignPattern {
  /// Var(J^(1) + J^(2)) and F_Q[J^(1) - J^(2)].
  kPlusVarianceMinusQfi,
  /// Var(J^(1) - J^(2)) and F_Q[J^(1) + J^(2)].
  kMinusVariancePlusQfi,
};

struct TwoSpinReport {
  double j1 = 0.0;
  double j2 = 0.0;
  /// sum_l Var(J_l^(1) +- J_l^(2)) >= j1 + j2 holds for separable states.
  double crit_lhs = 0.0;
  double crit_rhs = 0.0;
  bool entangled = false;
  /// sum_l F_Q[J_l^(1) -+ J_l^(2)] <= 4 (j1 + j2) for mixtures of products
  /// of spin-coherent states.
  double fq_sum = 0.0;
  double sep3f_threshold = 0.0;
  bool more_useful_than_product_coherent = false;
  /// 8 crit_lhs + fq_sum >= 12 (j1 + j2), valid for every state.
  double combined_lhs = 0.0;
  double combined_rhs = 0.0;
  double combined_slack = 0.0;
};

/// Throws kDimensionMismatch unless dim = (2 j1 + 1)(2 j2 + 1).
TwoSpinReport two_spin_report(const State& state, double j1, double j2,
                              SignPattern signs = SignPattern::kPlusVarianceMinusQfi);

/// I({J_x, J_y, J_z}) >= N j for separable states of N spin-j parties.
/// lhs is the optimizer's witness, an upper bound on I, so a violation
/// certifies entanglement. meta["qfi_quarter_sum"] holds sum_l F_Q / 4 <= I.
BoundReport vxyz_criterion(const DensityMatrix& rho, int parties, double j,
                           const OptimizerConfig& cfg);

}  // namespace qroof
