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

// Convex and concave roofs over state decompositions.
//
// Every decomposition of rho is reached from the eigen-purification
//   |Psi> = sum_k sqrt(l_k) |k>_S |k>_A
// by a unitary U_A on the ancilla followed by grouping the ancilla basis into
// disjoint sets K_l: component l is sigma_l = sum_{k in K_l} <k|U_A|Psi><Psi|U_A^dagger|k>.
// Singleton sets give pure-state decompositions; larger sets give mixed
// components. optimize_roof searches over U_A with random restarts and
// accepted-if-better local moves U <- exp(i eps H) U.
//
// Each candidate is an actual decomposition, so a minimization returns an
// upper bound on the convex roof and a maximization a lower bound on the
// concave roof, whether or not the search converged.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "qroof/quantum_core.hpp"

namespace qroof {

using ComponentState = std::variant<PureState, DensityMatrix>;

struct Component {
  double weight = 0.0;
  ComponentState state;
};

struct Decomposition {
  std::vector<Component> components;

  double total_weight() const;
  /// sum_k p_k rho_k.
  Matrix mixture() const;
};

using IndexSet = std::vector<int>;
using Partition = std::vector<IndexSet>;

Partition singleton_partition(int n);
Partition trivial_partition(int n);
/// All set partitions of {0..n-1}; Bell(n) of them.
std::vector<Partition> set_partitions(int n);
/// n <= 3: all set partitions; otherwise singletons and the trivial partition.
std::vector<Partition> default_partitions(int n);
bool is_valid_partition(const Partition& partition, int n);

struct Purification {
  DensityMatrix target;
  int ancilla_dim = 0;
  /// Amplitudes indexed (system, ancilla) -> s * ancilla_dim + a.
  PureState psi_p;
  Matrix u_a;
  Partition partition;

  /// The system x ancilla amplitude matrix of psi_p.
  Matrix amplitude_matrix() const;
};

/// Eigen-purification with a zero-padded ancilla, U_A = identity and the
/// singleton partition. Throws kAncillaTooSmall when ancilla_dim < rank(rho).
Purification purify(const DensityMatrix& rho, int ancilla_dim);

/// Components sigma_l / Tr(sigma_l) with weights Tr(sigma_l); sets with
/// weight below 1e-14 are dropped. Singleton sets yield pure states.
Decomposition extract_decomposition(const Purification& pur);

struct OptimizerConfig {
  std::uint64_t seed = 20260101;
  int restarts = 6;
  int local_steps = 10000;
  /// Initial epsilon of exp(i eps H) proposals (H has unit Frobenius norm).
  double step_scale = 0.5;
  /// Epsilon is multiplied by `shrink` after `rejection_streak` rejections in a row.
  double shrink = 0.5;
  int rejection_streak = 20;
  /// The search of a restart ends once epsilon drops below this.
  double tolerance = 1e-6;
  /// 0 selects the system dimension.
  int ancilla_dim = 0;
};

void validate(const OptimizerConfig& cfg);

enum class Direction { kMinimize, kMaximize };

/// A state functional. `mixed` is needed only when a partition has a set
/// with more than one element.
struct Functional {
  std::function<double(const PureState&)> pure;
  std::function<double(const DensityMatrix&)> mixed;
};

struct RoofResult {
  double value = 0.0;
  Decomposition decomposition;
  bool converged = false;
  long evaluations = 0;
  /// Index into the partition list of the best candidate.
  int partition_index = 0;
};

/// sum_k p_k f(rho_k) for an explicit decomposition.
double decomposition_average(const Decomposition& dec, const Functional& f);

/// Best sum_l p_l f(rho_l) over ancilla unitaries and the given partitions.
/// Restart 0 of every partition starts from U_A = identity (the eigen
/// decomposition grouped by the partition); the other restarts start from
/// Haar-random unitaries drawn from streams keyed by (seed, partition, restart).
RoofResult optimize_roof(const DensityMatrix& rho, const Functional& f, Direction direction,
                         const std::vector<Partition>& partitions, const OptimizerConfig& cfg);

/// Minimum of sum_k p_k Var_{psi_k}(B): approaches F_Q[rho, B] / 4 from above.
RoofResult convex_roof_variance(const DensityMatrix& rho, const HermitianOperator& b,
                                const OptimizerConfig& cfg);

/// I({A_n}, rho): convex roof of sum_n Var(A_n) over pure decompositions.
RoofResult roof_sum_I(const DensityMatrix& rho, const std::vector<HermitianOperator>& ops,
                      const OptimizerConfig& cfg);

/// R({A_n}, rho): concave roof of sum_n Var(A_n) over pure decompositions.
RoofResult roof_sum_R(const DensityMatrix& rho, const std::vector<HermitianOperator>& ops,
                      const OptimizerConfig& cfg);

/// Concave roof of the Robertson-Schroedinger bound L over mixed-state
/// decompositions: default_partitions(ancilla) plus any extra partitions.
RoofResult concave_roof_L(const DensityMatrix& rho, const HermitianOperator& a,
                          const HermitianOperator& b, const OptimizerConfig& cfg,
                          const std::vector<Partition>& extra_partitions = {});

/// Qubit decomposition into the two pure states where the line through the
/// Bloch vector parallel to z meets the sphere. Throws kInvalidArgument for
/// dim != 2.
Decomposition qubit_z_line_decomposition(const DensityMatrix& rho);

/// The candidate values of the eigen-partition bound for a qutrit.
struct EigenPartitionBound {
  double value = 0.0;      // K, the maximum of the entries below
  double eigen_sum = 0.0;  // sum_k l_k L(|k>)
  std::array<double, 3> split{};  // l_k L(|k>) + p_k L(rho_k), rho_k on the other two eigenvectors
  double l_rho = 0.0;
};

/// Throws kInvalidArgument for dim != 3. Degenerate eigenspaces use the
/// eigenbasis returned by the solver.
EigenPartitionBound eigen_partition_terms(const DensityMatrix& rho, const HermitianOperator& a,
                                          const HermitianOperator& b);
double eigen_partition_bound_K(const DensityMatrix& rho, const HermitianOperator& a,
                               const HermitianOperator& b);

}  // namespace qroof
