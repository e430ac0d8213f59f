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

#include "qroof/entanglement.hpp"

#include <cmath>
#include <string>

#include "qroof/metrology.hpp"

namespace qroof {

namespace {

constexpr double kFlagMargin = 1e-9;

void require_dim(int actual, int expected, const char* what) {
  require(actual == expected, ErrorCode::kDimensionMismatch,
          std::string(what) + ": state dimension " + std::to_string(actual) + ", expected " +
              std::to_string(expected));
}

}  // namespace

TwoModeOperators make_two_mode_operators(const FockAlgebra& fock) {
  const auto id = HermitianOperator::identity(fock.cutoff);
  return TwoModeOperators{tensor(fock.x, id), tensor(fock.p, id), tensor(id, fock.x),
                          tensor(id, fock.p)};
}

CvUsefulness coherent_mixture_usefulness(const State& state, const FockAlgebra& fock) {
  require_dim(dim_of(state), fock.cutoff * fock.cutoff, "coherent_mixture_usefulness");
  const TwoModeOperators q = make_two_mode_operators(fock);
  CvUsefulness u;
  u.qfi_x_plus = qfi(state, q.x1 + q.x2);
  u.qfi_x_minus = qfi(state, q.x1 - q.x2);
  u.qfi_p_plus = qfi(state, q.p1 + q.p2);
  u.qfi_p_minus = qfi(state, q.p1 - q.p2);
  const double limit = 4.0 + kFlagMargin;
  u.more_useful_than_p_nonnegative = u.qfi_x_plus > limit || u.qfi_x_minus > limit ||
                                     u.qfi_p_plus > limit || u.qfi_p_minus > limit;
  return u;
}

TwoModeReport duan_report(const State& state, const FockAlgebra& fock) {
  require_dim(dim_of(state), fock.cutoff * fock.cutoff, "duan_report");
  const TwoModeOperators q = make_two_mode_operators(fock);
  TwoModeReport r;
  r.var_x_plus = variance(state, q.x1 + q.x2);
  r.var_p_minus = variance(state, q.p1 - q.p2);
  r.duan_lhs = r.var_x_plus + r.var_p_minus;
  r.duan_violated = r.duan_lhs < r.duan_rhs - kFlagMargin;
  r.usefulness = coherent_mixture_usefulness(state, fock);
  for (double f : {r.usefulness.qfi_p_plus, r.usefulness.qfi_x_minus}) {
    if (f < 1e-12) {
      r.relation_indeterminate = true;
    } else {
      r.relation_rhs += 4.0 / f;
    }
  }
  r.relation_slack = r.duan_lhs - r.relation_rhs;
  return r;
}

std::array<HermitianOperator, 3> collective_spin(double j, int parties) {
  require(parties >= 1, ErrorCode::kInvalidArgument, "collective_spin: need at least one party");
  const SpinAlgebra s = make_spin_algebra(j);
  const std::array<const HermitianOperator*, 3> single{&s.jx, &s.jy, &s.jz};
  std::array<HermitianOperator, 3> out{HermitianOperator::zero(1), HermitianOperator::zero(1),
                                       HermitianOperator::zero(1)};
  for (int l = 0; l < 3; ++l) {
    HermitianOperator total = *single[static_cast<std::size_t>(l)];
    HermitianOperator id = HermitianOperator::identity(s.dim);
    for (int n = 1; n < parties; ++n) {
      total = tensor(total, HermitianOperator::identity(s.dim)) +
              tensor(id, *single[static_cast<std::size_t>(l)]);
      id = tensor(id, HermitianOperator::identity(s.dim));
    }
    out[static_cast<std::size_t>(l)] = std::move(total);
  }
  return out;
}

TwoSpinReport two_spin_report(const State& state, double j1, double j2, SignPattern signs) {
  const SpinAlgebra s1 = make_spin_algebra(j1);
  const SpinAlgebra s2 = make_spin_algebra(j2);
  require_dim(dim_of(state), s1.dim * s2.dim, "two_spin_report");
  const auto id1 = HermitianOperator::identity(s1.dim);
  const auto id2 = HermitianOperator::identity(s2.dim);
  const std::array<std::pair<const HermitianOperator*, const HermitianOperator*>, 3> comps{
      {{&s1.jx, &s2.jx}, {&s1.jy, &s2.jy}, {&s1.jz, &s2.jz}}};

  const double var_sign = signs == SignPattern::kPlusVarianceMinusQfi ? 1.0 : -1.0;
  TwoSpinReport r;
  r.j1 = j1;
  r.j2 = j2;
  for (const auto& [a, b] : comps) {
    const HermitianOperator first = tensor(*a, id2);
    const HermitianOperator second = tensor(id1, *b);
    r.crit_lhs += variance(state, first + var_sign * second);
    r.fq_sum += qfi(state, first - var_sign * second);
  }
  r.crit_rhs = j1 + j2;
  r.entangled = r.crit_lhs < r.crit_rhs - kFlagMargin;
  r.sep3f_threshold = 4.0 * (j1 + j2);
  r.more_useful_than_product_coherent = r.fq_sum > r.sep3f_threshold + kFlagMargin;
  r.combined_lhs = 8.0 * r.crit_lhs + r.fq_sum;
  r.combined_rhs = 12.0 * (j1 + j2);
  r.combined_slack = r.combined_lhs - r.combined_rhs;
  return r;
}

BoundReport vxyz_criterion(const DensityMatrix& rho, int parties, double j,
                           const OptimizerConfig& cfg) {
  const auto ops = collective_spin(j, parties);
  require_dim(rho.dim(), ops[0].dim(), "vxyz_criterion");
  const RoofResult roof = roof_sum_I(rho, {ops[0], ops[1], ops[2]}, cfg);
  double qfi_quarter = 0.0;
  for (const auto& op : ops) qfi_quarter += qfi(rho, op) / 4.0;
  return make_report("vxyz", roof.value, parties * j,
                     {{"parties", static_cast<double>(parties)},
                      {"j", j},
                      {"qfi_quarter_sum", qfi_quarter},
                      {"converged", roof.converged ? 1.0 : 0.0}});
}

}  // namespace qroof
