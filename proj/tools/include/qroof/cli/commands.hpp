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

// Subcommands of the qroof tool. Each returns the full output text so that
// results can be compared byte for byte.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qroof/serialization.hpp"

namespace qroof::cli {

enum class Format { kCsv, kJson };

struct RunConfig {
  std::uint64_t seed = 20260101;
  int samples = 200;
  std::string out;  // empty: standard output
  Format format = Format::kCsv;
  int cutoff = kDefaultFockCutoff;
  int restarts = OptimizerConfig{}.restarts;
  int local_steps = OptimizerConfig{}.local_steps;
  int ancilla = 0;

  OptimizerConfig optimizer() const;
};

/// 12 significant digits, '.' as decimal separator regardless of locale.
std::string format_number(double v);

/// Random qutrits with A = J_x, B = J_y: slack of the Robertson-Schroedinger
/// bound, of the eigen-partition bound K and of the concave-roof bound.
std::string figure_rs(const RunConfig& cfg);

/// Planar-squeezed states: F_Q[J_z] against B_FQ = 4j - 4 Var(J_x) - 4 Var(J_y).
std::string figure_planar(const RunConfig& cfg, std::span<const double> js);

/// Spin-squeezed ground states of J_y^2 - lambda J_x for one j.
std::string figure_spinsq(const RunConfig& cfg, double j, std::span<const double> lambdas);

struct CheckRequest {
  std::string name;
  Json state;
  std::optional<Json> ops;
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> j1;
  std::optional<double> j2;
  std::optional<int> parties;
  std::optional<double> j;
  bool minus_variance = false;
};

/// Names: rs, improved-rs, improved-hr, weighted-sum, bfq, su-d,
/// three-variance, spin-length, duan, coherent-usefulness, two-spin, vxyz.
/// Throws kUnknownName for anything else.
BoundReport run_check(const CheckRequest& request, const RunConfig& cfg);

enum class RoofFunctional { kVarianceSum, kRsBound };

RoofResult run_roof(const Json& state, const Json& ops, Direction direction,
                    RoofFunctional functional, const RunConfig& cfg);

/// The built state in the exchange format.
Json state_factory(const Json& spec, const RunConfig& cfg);

/// Entry point; returns the process exit code. Errors are written to err as
/// {"error": {"code": ..., "message": ...}}.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qroof::cli
