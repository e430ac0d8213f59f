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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qroof/bounds.hpp"
#include "qroof/metrology.hpp"
#include "qroof/sampling.hpp"
#include "qroof/states_lab.hpp"

namespace qroof {
namespace {

namespace o = oracle;

OptimizerConfig quick(std::uint64_t seed = 1) {
  OptimizerConfig c;
  c.seed = seed;
  c.restarts = 3;
  c.local_steps = 4000;
  return c;
}

HermitianOperator pauli_x() { return 2.0 * make_spin_algebra(0.5).jx; }
HermitianOperator pauli_y() { return 2.0 * make_spin_algebra(0.5).jy; }
HermitianOperator pauli_z() { return 2.0 * make_spin_algebra(0.5).jz; }

PureState x_polarized(const SpinAlgebra& s) { return spin_coherent_state_polar(s, std::numbers::pi / 2, 0.0); }

TEST(BoundReport, ViolationThreshold) {
  EXPECT_TRUE(make_report("t", 1.0, 1.0 + 2e-9).violated);
  EXPECT_FALSE(make_report("t", 1.0, 1.0 + 5e-10).violated);
  const BoundReport r = make_report("t", 3.0, 1.0, {{"k", 2.0}});
  EXPECT_DOUBLE_EQ(r.slack, 2.0);
  EXPECT_EQ(r.meta.at("k"), 2.0);
}

TEST(RsLowerBound, ClassicallyCorrelatedMixture) {
  const auto id = HermitianOperator::identity(2);
  const HermitianOperator a = tensor(pauli_z(), id);
  const HermitianOperator b = tensor(id, pauli_z());
  const PureState s00 = PureState::basis(4, 0);
  const PureState s11 = PureState::basis(4, 3);
  const double w[] = {0.5, 0.5};
  const PureState st[] = {s00, s11};
  const DensityMatrix rho = DensityMatrix::mixture(w, st);
  // <{A,B}> = 2, <A> = <B> = 0, C = 0, so L = 2 for the mixture; both
  // components are eigenstates with L = 0. L is not convex.
  const double l_rho = rs_lower_bound_L(State(rho), a, b);
  EXPECT_NEAR(l_rho, 2.0, 1e-14);
  EXPECT_NEAR(rs_lower_bound_L(State(s00), a, b), 0.0, 1e-14);
  EXPECT_NEAR(rs_lower_bound_L(State(s11), a, b), 0.0, 1e-14);
  EXPECT_NEAR(o::rs_l(rho.matrix(), a.matrix(), b.matrix()), l_rho, 1e-14);
  EXPECT_NEAR(0.25 * l_rho * l_rho, variance(rho, a) * variance(rho, b), 1e-14);
}

TEST(RsLowerBound, BellMixture) {
  const auto id = HermitianOperator::identity(2);
  const HermitianOperator a = tensor(pauli_z(), id);
  const HermitianOperator b = tensor(id, pauli_z());
  Vector p(4), m(4);
  p << 1, 0, 0, 1;
  m << 0, 1, 1, 0;
  const PureState b1 = PureState::normalized(p);
  const PureState b2 = PureState::normalized(m);
  const double w[] = {0.5, 0.5};
  const PureState st[] = {b1, b2};
  // <AB> = +1 and -1 on the components, 0 on the mixture. L is not concave.
  EXPECT_NEAR(rs_lower_bound_L(State(DensityMatrix::mixture(w, st)), a, b), 0.0, 1e-14);
  EXPECT_NEAR(rs_lower_bound_L(State(b1), a, b), 2.0, 1e-14);
  EXPECT_NEAR(rs_lower_bound_L(State(b2), a, b), 2.0, 1e-14);
}

TEST(RsLowerBound, MatchesOracleAndPureQubitsSaturate) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 50; ++n) {
    const o::Vec v = o::random_vector(2, rng);
    const double alpha = angle(rng);
    const o::Mat a = pauli_x().matrix();
    const o::Mat b = std::cos(alpha) * pauli_x().matrix() + std::sin(alpha) * pauli_y().matrix();
    const double l = rs_lower_bound_L(State(PureState(v)), HermitianOperator(a), HermitianOperator(b));
    EXPECT_NEAR(l, o::rs_l(o::projector(v), a, b), 1e-12);
    EXPECT_NEAR(0.25 * l * l, o::var(o::projector(v), a) * o::var(o::projector(v), b), 1e-12);
  }
}

TEST(CheckRobertsonSchrodinger, CoherentStateSaturates) {
  const FockAlgebra f = make_fock_algebra(40);
  const BoundReport r = check_robertson_schrodinger(State(coherent_state({0.7, -0.4}, 40)), f.x, f.p);
  EXPECT_NEAR(r.lhs, 0.25, 1e-8);
  EXPECT_NEAR(r.rhs, 0.25, 1e-8);
  EXPECT_NEAR(r.slack, 0.0, 1e-8);
}

TEST(CheckRobertsonSchrodinger, MaximallyMixedQubit) {
  const State mm(DensityMatrix::maximally_mixed(2));
  const BoundReport orth = check_robertson_schrodinger(mm, pauli_x(), pauli_y());
  EXPECT_NEAR(orth.lhs, 1.0, 1e-14);
  EXPECT_NEAR(orth.rhs, 0.0, 1e-14);
  // For B = cos(a) sx + sin(a) sy, <{A,B}> = 2 cos(a), so rhs = cos(a)^2.
  const BoundReport tilted = check_robertson_schrodinger(mm, pauli_x(), std::cos(0.4) * pauli_x() + std::sin(0.4) * pauli_y());
  EXPECT_NEAR(tilted.lhs, 1.0, 1e-14);
  EXPECT_NEAR(tilted.rhs, std::pow(std::cos(0.4), 2), 1e-14);
}

TEST(CheckImprovedRs, QubitIsSaturated) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_density_matrix({2, 2, seed});
    const HermitianOperator b = std::cos(0.3 + seed) * pauli_x() + std::sin(0.3 + seed) * pauli_y();
    const BoundReport r = check_improved_rs(rho, pauli_x(), b, quick(seed));
    EXPECT_NEAR(r.slack, 0.0, 1e-8);
    EXPECT_FALSE(r.violated);
  }
}

TEST(CheckImprovedRs, MaximallyMixedQutrit) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const BoundReport r = check_improved_rs(DensityMatrix::maximally_mixed(3), s.jx, s.jy, quick());
  EXPECT_GE(r.rhs, 1.0 / 9.0 - 1e-12);
  EXPECT_NEAR(check_robertson_schrodinger(State(DensityMatrix::maximally_mixed(3)), s.jx, s.jy).rhs, 0.0, 1e-14);
  EXPECT_GE(r.meta.at("k"), 2.0 / 3.0 - 1e-12);
}

TEST(CheckImprovedRs, DominatesPlainRsAndK) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    const BoundReport imp = check_improved_rs(rho, s.jx, s.jy, quick(seed));
    const BoundReport rs = check_robertson_schrodinger(State(rho), s.jx, s.jy);
    const double k = eigen_partition_bound_K(rho, s.jx, s.jy);
    EXPECT_GE(imp.rhs, rs.rhs - 1e-9);
    EXPECT_GE(imp.rhs, 0.25 * k * k - 1e-9);
    EXPECT_FALSE(imp.violated);
    EXPECT_NEAR(imp.lhs, rs.lhs, 1e-14);
  }
}

TEST(CheckImprovedHr, SpinCoherentSaturates) {
  for (double j : {0.5, 2.0, 5.0}) {
    const SpinAlgebra s = make_spin_algebra(j);
    const BoundReport r = check_improved_hr(State(x_polarized(s)), s.jy, s.jz);
    EXPECT_NEAR(r.lhs, j * j, 1e-10);
    EXPECT_NEAR(r.rhs, j * j, 1e-10);
  }
}

TEST(CheckImprovedHr, NeverAbovePlainHeisenbergRobertson) {
  Rng rng = make_stream(3);
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix rho = random_density_matrix({3, 1 + n % 3, rng()});
    const HermitianOperator a = random_hermitian(3, rng);
    const HermitianOperator b = random_hermitian(3, rng);
    const BoundReport r = check_improved_hr(State(rho), a, b);
    EXPECT_LE(r.lhs, variance(rho, a) * 4 * variance(rho, b) + 1e-12);
    EXPECT_FALSE(r.violated);
  }
}

TEST(CheckImprovedHr, SldSaturates) {
  const DensityMatrix rho = random_density_matrix({4, 4, 5});
  const SpinAlgebra s = make_spin_algebra(1.5);
  const SldResult l = sld(rho, s.jz);
  const BoundReport r = check_improved_hr(State(rho), l.sld, s.jz);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-9 * r.rhs);
}

TEST(CheckWeightedSum, CoherentStateCanonicalPair) {
  const FockAlgebra f = make_fock_algebra(40);
  const DensityMatrix rho = DensityMatrix::from_pure(coherent_state({0.4, 0.2}, 40));
  const BoundReport r = check_weighted_sum(rho, f.x, f.p, 1.0, 1.0, quick(), false);
  EXPECT_NEAR(r.lhs, 1.0, 1e-8);
  // The truncated commutator differs from i only on the top Fock level.
  EXPECT_NEAR(r.rhs, 1.0, 1e-8);
  EXPECT_NEAR(r.slack, 0.0, 1e-8);
}

TEST(CheckWeightedSum, ZeroAlpha) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const DensityMatrix rho = random_density_matrix({3, 3, 2});
  const BoundReport r = check_weighted_sum(rho, s.jx, s.jy, 0.0, 2.0, quick(), false);
  EXPECT_NEAR(r.lhs, 2.0 * qfi(rho, s.jy) / 4, 1e-12);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_THROW(check_weighted_sum(rho, s.jx, s.jy, -1.0, 1.0, quick(), false), Error);
}

TEST(CheckWeightedSum, RandomQutritsHold) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    const BoundReport r = check_weighted_sum(rho, s.jx, s.jy, 1.0, 1.0, quick(seed));
    EXPECT_FALSE(r.violated);
    const double c = std::abs(expectation(rho, i_commutator(s.jx, s.jy)));
    EXPECT_NEAR(r.rhs, c, 1e-12);
    // The witness of the convex roof of L sits between |<C>| and any decomposition value.
    ASSERT_TRUE(r.meta.contains("roof_L_witness"));
    EXPECT_GE(r.meta.at("roof_L_witness"), c - 1e-9);
  }
}

TEST(BfqBound, PlusMinusMixtureSaturates) {
  for (double j : {0.5, 1.0, 3.0}) {
    const BoundReport r = bfq_bound(State(pm_z_state(j)));
    EXPECT_NEAR(r.lhs, 0.0, 1e-12);
    EXPECT_NEAR(r.rhs, 0.0, 1e-12);
  }
}

TEST(BfqBound, XPolarizedSaturates) {
  for (double j : {0.5, 1.0, 7.0}) {
    const SpinAlgebra s = make_spin_algebra(j);
    const BoundReport r = bfq_bound(State(x_polarized(s)));
    EXPECT_NEAR(r.lhs, 2 * j, 1e-10);
    EXPECT_NEAR(r.rhs, 2 * j, 1e-10);
    EXPECT_EQ(r.meta.at("su2_mixture_reference"), 2 * j);
  }
}

TEST(BfqBound, PlanarSqueezedUsesCj) {
  for (double j : {0.5, 1.0, 2.0}) {
    const PlanarSqueezedResult p = planar_squeezed_state(j);
    const BoundReport r = bfq_bound(State(p.state));
    EXPECT_NEAR(r.rhs, 4 * (j - p.c_j), 1e-8);
    EXPECT_FALSE(r.violated);
  }
}

TEST(ThreeVarianceBound, ChainOnRandomStates) {
  for (double j : {0.5, 1.0, 1.5, 2.0}) {
    const SpinAlgebra s = make_spin_algebra(j);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DensityMatrix rho = random_density_matrix({s.dim, 1 + static_cast<int>(seed % s.dim), seed});
      const BoundReport r = three_variance_bound(State(rho));
      EXPECT_GE(r.slack, -1e-9);
      EXPECT_LE(r.lhs, variance(rho, s.jx) + variance(rho, s.jy) + variance(rho, s.jz) + 1e-12);
    }
  }
}

TEST(SuDBound, PureQutritSaturates) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 10; ++n) {
    const BoundReport r = su_d_bound(State(PureState(o::random_vector(3, rng))));
    EXPECT_NEAR(r.lhs, 4.0, 1e-10);
    EXPECT_NEAR(r.rhs, 4.0, 1e-14);
  }
}

TEST(SuDBound, MixedStates) {
  EXPECT_GT(su_d_bound(State(DensityMatrix::maximally_mixed(3))).slack, 0.1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_GE(su_d_bound(State(random_density_matrix({3, 3, seed}))).slack, -1e-9);
  }
  EXPECT_THROW(su_d_bound(State(DensityMatrix::maximally_mixed(1))), Error);
}

TEST(SpinLengthBound, HoldsOnRandomStates) {
  for (double j : {0.5, 1.0, 1.5}) {
    const int d = static_cast<int>(2 * j + 1);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const BoundReport r = spin_length_bound(State(random_density_matrix({d, 1 + static_cast<int>(seed % d), seed})));
      EXPECT_GE(r.slack, -1e-9) << "j=" << j << " seed=" << seed;
    }
  }
}

TEST(SpinLengthBound, TopStateIsTight) {
  const SpinAlgebra s = make_spin_algebra(2.0);
  const BoundReport r = spin_length_bound(State(PureState::basis(5, 0)));
  // Var(J_x) = j/2 and F_j(1) = 1/2.
  EXPECT_NEAR(r.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r.rhs, 1.0, 1e-6);
}

MultiplierGrid log_mus(double lo, double hi, int n) {
  MultiplierGrid g;
  g.lambdas = {{0.0}};
  std::vector<double> mus;
  for (int k = 0; k < n; ++k) mus.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1)));
  g.mus = {mus};
  return g;
}

TEST(MinvarConstrained, SingleConstraintReproducesFj) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const MultiplierGrid g = log_mus(1e-3, 1e3, 2000);
  for (double x : {0.2, 0.5, 0.8}) {
    const double t[] = {x};
    // Chords of the sampled hull lie above the exact curve.
    const double v = minvar_constrained({s.jx}, {s.jz}, t, g);
    const double f = fj_value(1.0, x);
    EXPECT_GE(v, f - 1e-9) << x;
    EXPECT_NEAR(v, f, 1e-4 * f) << x;
  }
}

TEST(MinvarConstrained, CommutingUnconstrainedIsZero) {
  const SpinAlgebra s = make_spin_algebra(1.5);
  MultiplierGrid g;
  g.lambdas = {{0.5, 1.0, 2.0}};
  EXPECT_NEAR(minvar_constrained({s.jz}, {}, {}, g), 0.0, 1e-12);
}

TEST(MinvarConstrained, PlanarPairWithoutConstraint) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  MultiplierGrid g;
  std::vector<double> l;
  for (int k = 1; k <= 400; ++k) l.push_back(0.005 * k);
  g.lambdas = {l, {0.0}};
  const double v = minvar_constrained({s.jx, s.jy}, {}, {}, g);
  EXPECT_GE(v, 7.0 / 16.0 - 1e-9);
  EXPECT_LE(v, 7.0 / 16.0 + 1e-3);
}

TEST(MinvarConstrained, UnreachableTargetIsInfeasible) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const double t[] = {5.0};
  try {
    minvar_constrained({s.jx}, {s.jz}, t, log_mus(1e-2, 1e2, 20));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(TheoremSweep, RsHrThreeVarianceSuD) {
  Rng rng = make_stream(2026);
  for (int n = 0; n < 1000; ++n) {
    const int d = 2 + n % 3;
    const DensityMatrix rho = random_density_matrix({d, 1 + static_cast<int>(rng() % d), rng()});
    const HermitianOperator a = random_hermitian(d, rng);
    const HermitianOperator b = random_hermitian(d, rng);
    ASSERT_GE(check_robertson_schrodinger(State(rho), a, b).slack, -1e-9);
    ASSERT_GE(check_improved_hr(State(rho), a, b).slack, -1e-9);
    ASSERT_GE(three_variance_bound(State(rho)).slack, -1e-9);
    ASSERT_GE(su_d_bound(State(rho)).slack, -1e-9);
  }
}

}  // namespace
}  // namespace qroof
