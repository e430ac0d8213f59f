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

// Benchmark state families: spin-squeezed, planar-squeezed, two-mode
// squeezed vacuum, singlets and mixtures of (spin-)coherent states.

#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "qroof/quantum_core.hpp"

namespace qroof {

/// Ground state of J_y^2 - lambda J_x. Throws kInvalidArgument for
/// lambda <= 0 and kDegenerateGroundState when the ground state is degenerate.
PureState spin_squeezed_state(double j, double lambda);

struct PlanarSqueezedResult {
  double j = 0.0;
  PureState state;
  double var_sum = 0.0;  // Var(J_x) + Var(J_y)
  double c_j = 0.0;
  Eigen::Vector3d mean_spin = Eigen::Vector3d::Zero();
  /// var_sum after each iteration, starting with the |j>_x seed.
  std::vector<double> history;
};

/// Minimizes Var(J_x) + Var(J_y) with nonzero mean spin by the self-consistent
/// iteration psi <- ground state of J_x^2 + J_y^2 - 2<J_x> J_x - 2<J_y> J_y,
/// seeded with |j>_x. Stops when var_sum changes by less than tol; throws
/// kNotConverged after max_iterations.
PlanarSqueezedResult planar_squeezed_state(double j, double tol = 1e-13, int max_iterations = 100000);

/// sqrt(1 - t^2) sum_n (-t)^n |n, n> with t = tanh r, so that x1 + x2 and
/// p1 - p2 are squeezed. Throws kCutoffTooSmall unless t^(2 cutoff) < 1e-12.
PureState two_mode_squeezed_vacuum(double r, int cutoff = kDefaultFockCutoff);

/// Total-spin-zero state of two spin-j particles,
/// sum_m (-1)^(j - m) |m>|-m> / sqrt(2j + 1).
PureState singlet_state(double j);

/// Equal mixture of |+j>_z and |-j>_z.
DensityMatrix pm_z_state(double j);

/// One term of a mixture of products of coherent states; alphas has one
/// entry per mode.
struct CoherentTerm {
  double weight = 1.0;
  std::vector<Complex> alphas;
};

/// sum_k p_k |alpha_k^(1)><alpha_k^(1)| (x) ... ; all terms need the same
/// number of modes.
DensityMatrix coherent_mixture(std::span<const CoherentTerm> terms, int cutoff = kDefaultFockCutoff);

/// Polar direction of a spin-coherent state.
struct PolarAngles {
  double theta = 0.0;
  double phi = 0.0;
};

struct SpinCoherentTerm {
  double weight = 1.0;
  std::vector<PolarAngles> directions;  // one per party
};

/// Mixture of products of spin-coherent states for parties with spins js.
DensityMatrix spin_coherent_mixture(std::span<const double> js, std::span<const SpinCoherentTerm> terms);

}  // namespace qroof
