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

// Uncertainty relations with variances and the quantum Fisher information.
// Each check evaluates one inequality lhs >= rhs and reports the slack.

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qroof/quantum_core.hpp"
#include "qroof/roofs.hpp"

namespace qroof {

struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool violated = false;
  std::map<std::string, double> meta;
};

/// slack = lhs - rhs, violated iff slack < -1e-9.
BoundReport make_report(std::string name, double lhs, double rhs,
                        std::map<std::string, double> meta = {});

/// A, B with their anticommutator and C = i[A, B], precomputed once.
struct RsOperators {
  HermitianOperator a;
  HermitianOperator b;
  HermitianOperator anti;
  HermitianOperator comm;

  static RsOperators make(const HermitianOperator& a, const HermitianOperator& b);
};

/// L = sqrt(|<{A,B}> - 2<A><B>|^2 + |<C>|^2).
double rs_lower_bound_L(const PureState& psi, const RsOperators& ops);
double rs_lower_bound_L(const DensityMatrix& rho, const RsOperators& ops);
double rs_lower_bound_L(const State& state, const HermitianOperator& a, const HermitianOperator& b);

/// Var(A) Var(B) >= L^2 / 4.
BoundReport check_robertson_schrodinger(const State& state, const HermitianOperator& a,
                                        const HermitianOperator& b);

/// Var(A) Var(B) >= (max over mixed decompositions of sum_k p_k L_k)^2 / 4.
/// The rhs uses the best certified witness: the optimizer result, L_rho, the
/// z-line decomposition for qubits and the eigen-partition bound K for qutrits.
BoundReport check_improved_rs(const DensityMatrix& rho, const HermitianOperator& a,
                              const HermitianOperator& b, const OptimizerConfig& cfg);

/// Var(A) F_Q[rho, B] >= |<i[A, B]>|^2.
BoundReport check_improved_hr(const State& state, const HermitianOperator& a,
                              const HermitianOperator& b);

/// alpha Var(A) + beta F_Q[rho, B] / 4 >= sqrt(alpha beta) |<C>|.
/// With search_witness the optimizer's convex-roof witness for L over pure
/// decompositions is reported in meta["roof_L_witness"]. It bounds the
/// roof from above, so it never enters the rhs.
BoundReport check_weighted_sum(const DensityMatrix& rho, const HermitianOperator& a,
                               const HermitianOperator& b, double alpha, double beta,
                               const OptimizerConfig& cfg, bool search_witness = true);

/// F_Q[rho, J_z] >= 4j - 4 Var(J_x) - 4 Var(J_y) for a spin-j state.
BoundReport bfq_bound(const State& state);

/// Var(J_x) + Var(J_y) + F_Q[rho, J_z] / 4 >= j.
BoundReport three_variance_bound(const State& state);

/// F_Q[rho, G_1] / 4 + sum_{n >= 2} Var(G_n) >= 4j, j = (d - 1) / 2.
BoundReport su_d_bound(const State& state);

/// F_j(X) = min Var(J_x) / j subject to <J_z> = X j, tabulated on a grid.
struct FjCurve {
  double j = 0.0;
  std::vector<double> grid;
  std::vector<double> values;
  bool hull_adjusted = false;  // the lower hull lowered a directly sampled value
};

struct FjOptions {
  double lambda_min = 1e-3;
  double lambda_max = 1e3;
  int lambda_points = 200;
};

/// Ground states of J_x^2 - lambda J_z - lambda_2 J_x on a logarithmic lambda
/// grid, refined by bisection in lambda onto each requested X, then the lower
/// convex hull. lambda_2 is optimized only for half-integer j. Throws
/// kInvalidArgument on an empty grid or X outside [0, 1].
FjCurve fj_curve(double j, std::span<const double> grid, const FjOptions& options = {});
double fj_value(double j, double x, const FjOptions& options = {});

/// F_Q[rho, J_x] / 4 >= j F_j(|<J_z>| / j).
BoundReport spin_length_bound(const State& state);

/// Multipliers for H = sum_n (A_n^2 - lambda_n A_n) - sum_n mu_n B_n.
/// The scan covers the Cartesian product of the per-operator value lists;
/// an empty list means the single value 0.
struct MultiplierGrid {
  std::vector<std::vector<double>> lambdas;  // one list per A_n
  std::vector<std::vector<double>> mus;      // one list per B_n
};

/// Minimal sum_n Var(A_n) over non-degenerate ground states of the multiplier
/// family subject to <B_n> = targets[n]. With one constraint the lower convex
/// hull in <B> is interpolated at the target; with several, grid points within
/// 1e-6 of every target are used. Throws kInfeasible when no point qualifies.
double minvar_constrained(const std::vector<HermitianOperator>& a_ops,
                          const std::vector<HermitianOperator>& b_ops,
                          std::span<const double> targets, const MultiplierGrid& grid);

}  // namespace qroof
