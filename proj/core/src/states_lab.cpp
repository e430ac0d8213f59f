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

#include "qroof/states_lab.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <spdlog/spdlog.h>

namespace qroof {

namespace {

std::vector<double> checked_weights(std::span<const double> weights) {
  require(!weights.empty(), ErrorCode::kInvalidArgument, "mixture: no terms");
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0 && std::isfinite(w), ErrorCode::kInvalidArgument,
            "mixture: weights must be finite and nonnegative");
    total += w;
  }
  require(total > 0.0, ErrorCode::kInvalidArgument, "mixture: weights sum to zero");
  return {weights.begin(), weights.end()};
}

}  // namespace

PureState spin_squeezed_state(double j, double lambda) {
  require(lambda > 0.0, ErrorCode::kInvalidArgument, "spin_squeezed_state: lambda must be > 0");
  const SpinAlgebra s = make_spin_algebra(j);
  const GroundState g = ground_state(s.jy.squared() - lambda * s.jx);
  require(!g.degenerate, ErrorCode::kDegenerateGroundState,
          "spin_squeezed_state: degenerate ground state at lambda " + std::to_string(lambda));
  return g.state;
}

PlanarSqueezedResult planar_squeezed_state(double j, double tol, int max_iterations) {
  require(tol > 0.0 && max_iterations >= 1, ErrorCode::kInvalidArgument,
          "planar_squeezed_state: invalid tolerance or iteration limit");
  const SpinAlgebra s = make_spin_algebra(j);
  const HermitianOperator base = s.jx.squared() + s.jy.squared();
  PureState psi = spin_coherent_state_polar(s, std::numbers::pi / 2.0, 0.0);
  auto var_sum = [&s](const PureState& p) { return variance(p, s.jx) + variance(p, s.jy); };

  PlanarSqueezedResult out{j, psi, var_sum(psi), 0.0, Eigen::Vector3d::Zero(), {}};
  out.history.push_back(out.var_sum);
  bool converged = false;
  for (int it = 0; it < max_iterations; ++it) {
    const double mx = expectation(psi, s.jx);
    const double my = expectation(psi, s.jy);
    const GroundState g = ground_state(base - (2.0 * mx) * s.jx - (2.0 * my) * s.jy);
    psi = g.state;
    const double v = var_sum(psi);
    const double change = std::abs(out.history.back() - v);
    out.history.push_back(v);
    if (change < tol) {
      converged = true;
      break;
    }
  }
  require(converged, ErrorCode::kNotConverged,
          "planar_squeezed_state: no convergence after " + std::to_string(max_iterations) +
              " iterations");
  spdlog::debug("planar_squeezed_state j={} iterations={}", j, out.history.size() - 1);
  out.state = psi;
  out.var_sum = out.history.back();
  out.c_j = out.var_sum;
  out.mean_spin = {expectation(psi, s.jx), expectation(psi, s.jy), expectation(psi, s.jz)};
  return out;
}

PureState two_mode_squeezed_vacuum(double r, int cutoff) {
  require(cutoff >= 2, ErrorCode::kInvalidArgument, "two_mode_squeezed_vacuum: cutoff must be >= 2");
  const double t = std::tanh(r);
  require(std::pow(std::abs(t), 2.0 * cutoff) < 1e-12, ErrorCode::kCutoffTooSmall,
          "two_mode_squeezed_vacuum: cutoff " + std::to_string(cutoff) + " too small for r " +
              std::to_string(r));
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(cutoff) * cutoff);
  const double norm = std::sqrt(1.0 - t * t);
  double coeff = norm;
  for (int n = 0; n < cutoff; ++n) {
    amps(n * cutoff + n) = coeff;
    coeff *= -t;
  }
  return PureState::normalized(amps);
}

PureState singlet_state(double j) {
  const SpinAlgebra s = make_spin_algebra(j);
  const int d = s.dim;
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  // Index i holds m = j - i; -m sits at index d - 1 - i.
  for (int i = 0; i < d; ++i) amps(i * d + (d - 1 - i)) = (i % 2 == 0 ? 1.0 : -1.0) / std::sqrt(d);
  return PureState::normalized(amps);
}

DensityMatrix pm_z_state(double j) {
  const SpinAlgebra s = make_spin_algebra(j);
  const double w[] = {0.5, 0.5};
  const PureState states[] = {PureState::basis(s.dim, 0), PureState::basis(s.dim, s.dim - 1)};
  return DensityMatrix::mixture(w, states);
}

DensityMatrix coherent_mixture(std::span<const CoherentTerm> terms, int cutoff) {
  require(!terms.empty(), ErrorCode::kInvalidArgument, "coherent_mixture: no terms");
  const std::size_t modes = terms.front().alphas.size();
  require(modes >= 1, ErrorCode::kInvalidArgument, "coherent_mixture: terms need at least one mode");
  std::vector<double> weights;
  std::vector<PureState> states;
  for (const auto& term : terms) {
    require(term.alphas.size() == modes, ErrorCode::kInvalidArgument,
            "coherent_mixture: terms differ in the number of modes");
    weights.push_back(term.weight);
    PureState psi = coherent_state(term.alphas.front(), cutoff);
    for (std::size_t m = 1; m < modes; ++m) psi = tensor(psi, coherent_state(term.alphas[m], cutoff));
    states.push_back(std::move(psi));
  }
  return DensityMatrix::mixture(checked_weights(weights), states);
}

DensityMatrix spin_coherent_mixture(std::span<const double> js,
                                    std::span<const SpinCoherentTerm> terms) {
  require(!js.empty(), ErrorCode::kInvalidArgument, "spin_coherent_mixture: no parties");
  require(!terms.empty(), ErrorCode::kInvalidArgument, "spin_coherent_mixture: no terms");
  std::vector<SpinAlgebra> spins;
  for (double j : js) spins.push_back(make_spin_algebra(j));
  std::vector<double> weights;
  std::vector<PureState> states;
  for (const auto& term : terms) {
    require(term.directions.size() == js.size(), ErrorCode::kInvalidArgument,
            "spin_coherent_mixture: one direction per party required");
    weights.push_back(term.weight);
    PureState psi = spin_coherent_state_polar(spins[0], term.directions[0].theta, term.directions[0].phi);
    for (std::size_t n = 1; n < spins.size(); ++n) {
      psi = tensor(psi, spin_coherent_state_polar(spins[n], term.directions[n].theta,
                                                  term.directions[n].phi));
    }
    states.push_back(std::move(psi));
  }
  return DensityMatrix::mixture(checked_weights(weights), states);
}

}  // namespace qroof
