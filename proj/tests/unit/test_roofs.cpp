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
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qroof/bounds.hpp"
#include "qroof/entanglement.hpp"
#include "qroof/metrology.hpp"
#include "qroof/roofs.hpp"
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
HermitianOperator tilted(double alpha) { return std::cos(alpha) * pauli_x() + std::sin(alpha) * pauli_y(); }

DensityMatrix component_density(const Component& c) { return to_density(c.state); }

void expect_reconstructs(const Decomposition& dec, const DensityMatrix& rho, double tol = 1e-8) {
  EXPECT_NEAR(dec.total_weight(), 1.0, 1e-10);
  EXPECT_LT((dec.mixture() - rho.matrix()).cwiseAbs().maxCoeff(), tol);
  for (const Component& c : dec.components) EXPECT_GT(c.weight, 0.0);
}

TEST(Partitions, EnumerationAndValidity) {
  EXPECT_EQ(set_partitions(1).size(), 1u);
  EXPECT_EQ(set_partitions(3).size(), 5u);
  EXPECT_EQ(set_partitions(4).size(), 15u);
  for (const Partition& p : set_partitions(4)) EXPECT_TRUE(is_valid_partition(p, 4));
  EXPECT_FALSE(is_valid_partition({{0, 1}, {1, 2}}, 3));
  EXPECT_FALSE(is_valid_partition({{0}, {2}}, 3));
  EXPECT_EQ(default_partitions(3).size(), 5u);
  EXPECT_EQ(default_partitions(5).size(), 2u);
}

TEST(Purify, PureStateHasOneSchmidtCoefficient) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho(o::projector(o::random_vector(3, rng)));
  const Purification pur = purify(rho, 3);
  const Matrix m = pur.amplitude_matrix();
  Eigen::JacobiSVD<Matrix> svd(m);
  EXPECT_NEAR(svd.singularValues()(0), 1.0, 1e-12);
  EXPECT_NEAR(svd.singularValues()(1), 0.0, 1e-12);
}

TEST(Purify, MaximallyMixedQubit) {
  const Purification pur = purify(DensityMatrix::maximally_mixed(2), 2);
  Eigen::JacobiSVD<Matrix> svd(pur.amplitude_matrix());
  EXPECT_NEAR(svd.singularValues()(0), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(svd.singularValues()(1), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_TRUE(pur.u_a.isApprox(Matrix::Identity(2, 2)));
}

TEST(Purify, PartialTraceReturnsTarget) {
  const DensityMatrix rho = random_density_matrix({3, 3, 8});
  for (int anc : {3, 5}) {
    const Purification pur = purify(rho, anc);
    const Matrix m = pur.amplitude_matrix();
    EXPECT_LT((m * m.adjoint() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(pur.psi_p.amplitudes().norm(), 1.0, 1e-12);
  }
}

TEST(Purify, AncillaTooSmall) {
  try {
    purify(random_density_matrix({3, 3, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAncillaTooSmall);
  }
}

TEST(ExtractDecomposition, SingletonIdentityIsEigendecomposition) {
  const DensityMatrix rho = random_density_matrix({3, 3, 9});
  const Decomposition dec = extract_decomposition(purify(rho, 3));
  ASSERT_EQ(dec.components.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(dec.components[k].weight, rho.eigenvalues()(k), 1e-12);
    const DensityMatrix c = component_density(dec.components[k]);
    const Vector v = rho.eigenvectors().col(k);
    EXPECT_NEAR((v.adjoint() * c.matrix() * v)(0).real(), 1.0, 1e-12);
  }
}

TEST(ExtractDecomposition, TrivialPartitionGivesTarget) {
  const DensityMatrix rho = random_density_matrix({3, 3, 10});
  Purification pur = purify(rho, 3);
  pur.partition = trivial_partition(3);
  const Decomposition dec = extract_decomposition(pur);
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_NEAR(dec.components[0].weight, 1.0, 1e-12);
  EXPECT_LT((component_density(dec.components[0]).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ExtractDecomposition, AnyUnitaryAndPartitionReconstructs) {
  Rng rng = make_stream(12);
  const DensityMatrix mm = DensityMatrix::maximally_mixed(2);
  Purification q = purify(mm, 2);
  q.u_a = haar_unitary(2, rng);
  const Decomposition qd = extract_decomposition(q);
  EXPECT_EQ(qd.components.size(), 2u);
  for (const Component& c : qd.components) EXPECT_TRUE(std::holds_alternative<PureState>(c.state));
  expect_reconstructs(qd, mm);

  for (int n = 0; n < 20; ++n) {
    const DensityMatrix rho = random_density_matrix({3, 1 + n % 3, static_cast<std::uint64_t>(n)});
    for (const Partition& p : set_partitions(4)) {
      Purification pur = purify(rho, 4);
      pur.u_a = haar_unitary(4, rng);
      pur.partition = p;
      expect_reconstructs(extract_decomposition(pur), rho);
    }
  }
}

TEST(OptimizeRoof, MinimizedVarianceApproachesQfi) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    Rng rng = make_stream(seed, {5});
    const HermitianOperator b = random_hermitian(3, rng);
    const RoofResult r = convex_roof_variance(rho, b, quick(seed));
    const double target = qfi(rho, b) / 4;
    EXPECT_GE(r.value, target - 1e-9);
    EXPECT_LE(r.value, target * 1.02);
    expect_reconstructs(r.decomposition, rho);
  }
}

TEST(OptimizeRoof, MaximizedVarianceApproachesVariance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    Rng rng = make_stream(seed, {6});
    const HermitianOperator a = random_hermitian(3, rng);
    const RoofResult r = roof_sum_R(rho, {a}, quick(seed));
    EXPECT_LE(r.value, variance(rho, a) + 1e-9);
    EXPECT_GE(r.value, variance(rho, a) * 0.99);
  }
}

TEST(OptimizeRoof, ReportedValueMatchesDecomposition) {
  const DensityMatrix rho = random_density_matrix({3, 3, 31});
  const SpinAlgebra s = make_spin_algebra(1.0);
  const RoofResult r = convex_roof_variance(rho, s.jx, quick());
  Functional f;
  f.pure = [&s](const PureState& psi) { return variance(psi, s.jx); };
  EXPECT_NEAR(decomposition_average(r.decomposition, f), r.value, 1e-9);
}

TEST(OptimizeRoof, MixedFunctionalRequiredForMixedSets) {
  Functional f;
  f.pure = [](const PureState&) { return 0.0; };
  EXPECT_THROW(optimize_roof(DensityMatrix::maximally_mixed(2), f, Direction::kMaximize, {trivial_partition(2)},
                             quick()),
               Error);
}

TEST(OptimizeRoof, SameSeedSameResult) {
  const DensityMatrix rho = random_density_matrix({3, 3, 4});
  const SpinAlgebra s = make_spin_algebra(1.0);
  const RoofResult a = concave_roof_L(rho, s.jx, s.jy, quick(77));
  const RoofResult b = concave_roof_L(rho, s.jx, s.jy, quick(77));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(OptimizeRoof, InvalidConfigRejected) {
  OptimizerConfig c;
  c.shrink = 1.5;
  EXPECT_THROW(validate(c), Error);
  c = OptimizerConfig{};
  c.restarts = 0;
  EXPECT_THROW(validate(c), Error);
}

TEST(ConvexRoofVariance, PureStateIsVariance) {
  std::mt19937_64 rng(4);
  const o::Vec v = o::random_vector(3, rng);
  const o::Mat b = o::random_hermitian(3, rng);
  const RoofResult r = convex_roof_variance(DensityMatrix(o::projector(v)), HermitianOperator(b), quick());
  EXPECT_NEAR(r.value, o::var(o::projector(v), b), 1e-10);
}

TEST(ConvexRoofVariance, DiagonalQubit) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  const RoofResult r = convex_roof_variance(DensityMatrix(m), pauli_x(), quick());
  EXPECT_GE(r.value, 0.25 - 1e-9);
  EXPECT_LE(r.value, 0.25 * 1.02);
}

TEST(ConvexRoofVariance, SandwichHoldsForEveryDecomposition) {
  Rng rng = make_stream(13);
  for (int n = 0; n < 10; ++n) {
    const DensityMatrix rho = random_density_matrix({3, 3, 40 + static_cast<std::uint64_t>(n)});
    const HermitianOperator b = random_hermitian(3, rng);
    const double lo = qfi(rho, b) / 4;
    const double hi = variance(rho, b);
    Functional f;
    f.pure = [&b](const PureState& psi) { return variance(psi, b); };
    for (int k = 0; k < 20; ++k) {
      Purification pur = purify(rho, 3);
      pur.u_a = haar_unitary(3, rng);
      const double avg = decomposition_average(extract_decomposition(pur), f);
      EXPECT_GE(avg, lo - 1e-9);
      EXPECT_LE(avg, hi + 1e-9);
    }
  }
}

TEST(RoofSums, SingleOperatorReducesToQfiAndVariance) {
  const DensityMatrix rho = random_density_matrix({2, 2, 14});
  const HermitianOperator a = pauli_x() + 0.3 * pauli_z();
  EXPECT_NEAR(roof_sum_I(rho, {a}, quick()).value, qfi(rho, a) / 4, 0.02 * qfi(rho, a) / 4);
  EXPECT_NEAR(roof_sum_R(rho, {a}, quick()).value, variance(rho, a), 0.01 * variance(rho, a));
}

TEST(RoofSums, IBoundedBelowBySumOfQfiQuarters) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    const RoofResult r = roof_sum_I(rho, {s.jx, s.jy, s.jz}, quick(seed));
    EXPECT_GE(r.value, (qfi(rho, s.jx) + qfi(rho, s.jy) + qfi(rho, s.jz)) / 4 - 1e-9);
  }
}

TEST(RoofSums, SingletCollectiveSpinVanishes) {
  const auto ops = collective_spin(0.5, 2);
  const DensityMatrix rho = DensityMatrix::from_pure(singlet_state(0.5));
  const RoofResult r = roof_sum_I(rho, {ops[0], ops[1], ops[2]}, quick());
  EXPECT_NEAR(r.value, 0.0, 1e-12);
  EXPECT_LT(r.value, 1.0);
}

TEST(RoofSums, TwoOperatorConcaveRoofIsVarianceSum) {
  Rng rng = make_stream(15);
  for (int n = 0; n < 6; ++n) {
    const int d = 2 + n % 2;
    const DensityMatrix rho = random_density_matrix({d, d, 60 + static_cast<std::uint64_t>(n)});
    const HermitianOperator a = random_hermitian(d, rng);
    const HermitianOperator b = random_hermitian(d, rng);
    const double sum = variance(rho, a) + variance(rho, b);
    const RoofResult r = roof_sum_R(rho, {a, b}, quick(n));
    EXPECT_LE(r.value, sum + 1e-9);
    EXPECT_GE(r.value, 0.99 * sum);
  }
}

TEST(RoofSums, ThreeOperatorConcaveRoofBelowVarianceSum) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    const RoofResult r = roof_sum_R(rho, {s.jx, s.jy, s.jz}, quick(seed));
    EXPECT_LE(r.value, variance(rho, s.jx) + variance(rho, s.jy) + variance(rho, s.jz) + 1e-9);
  }
}

TEST(ConcaveRoofL, QubitSaturation) {
  Rng rng = make_stream(16);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 5; ++n) {
    const DensityMatrix rho = random_density_matrix({2, 2, 70 + static_cast<std::uint64_t>(n)});
    const HermitianOperator a = pauli_x();
    const HermitianOperator b = tilted(angle(rng));
    const RoofResult r = concave_roof_L(rho, a, b, quick(n));
    const double product = variance(rho, a) * variance(rho, b);
    EXPECT_LE(0.25 * r.value * r.value, product + 1e-9);
    EXPECT_NEAR(0.25 * r.value * r.value, product, 1e-6);
  }
}

TEST(ConcaveRoofL, PureStateIsItsOwnL) {
  std::mt19937_64 rng(17);
  const o::Vec v = o::random_vector(3, rng);
  const SpinAlgebra s = make_spin_algebra(1.0);
  const RoofResult r = concave_roof_L(DensityMatrix(o::projector(v)), s.jx, s.jy, quick());
  EXPECT_NEAR(r.value, o::rs_l(o::projector(v), s.jx.matrix(), s.jy.matrix()), 1e-10);
}

TEST(ConcaveRoofL, MaximallyMixedQubit) {
  const RoofResult r = concave_roof_L(DensityMatrix::maximally_mixed(2), pauli_x(), tilted(0.9), quick());
  EXPECT_NEAR(0.25 * r.value * r.value, 1.0, 1e-6);
}

TEST(ConcaveRoofL, ProductInequalityOnProducedDecompositions) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const RsOperators ops = RsOperators::make(s.jx, s.jy);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    const RoofResult r = concave_roof_L(rho, s.jx, s.jy, quick(seed));
    double sa = 0.0;
    double sb = 0.0;
    double sc = 0.0;
    for (const Component& c : r.decomposition.components) {
      const DensityMatrix cr = component_density(c);
      sa += c.weight * variance(cr, s.jx);
      sb += c.weight * variance(cr, s.jy);
      sc += c.weight * rs_lower_bound_L(cr, ops) / 2;
    }
    EXPECT_GE(sa * sb, sc * sc - 1e-12);
    EXPECT_NEAR(2 * sc, r.value, 1e-9);
  }
}

TEST(ZLineDecomposition, TiltedBlochVector) {
  const DensityMatrix rho(o::bloch_rho(0.3, 0.0, 0.2));
  const Decomposition dec = qubit_z_line_decomposition(rho);
  ASSERT_EQ(dec.components.size(), 2u);
  const double h = std::sqrt(0.91);
  std::vector<double> w{dec.components[0].weight, dec.components[1].weight};
  std::sort(w.begin(), w.end());
  EXPECT_NEAR(w[0], (1 - 0.2 / h) / 2, 1e-12);
  EXPECT_NEAR(w[1], (1 + 0.2 / h) / 2, 1e-12);
  for (const Component& c : dec.components) {
    const DensityMatrix cr = component_density(c);
    EXPECT_NEAR(variance(cr, pauli_x()), variance(rho, pauli_x()), 1e-12);
    EXPECT_NEAR(variance(cr, pauli_y()), variance(rho, pauli_y()), 1e-12);
    EXPECT_NEAR(cr.purity(), 1.0, 1e-12);
  }
  expect_reconstructs(dec, rho, 1e-12);
}

TEST(ZLineDecomposition, CenterAndSurface) {
  const Decomposition mid = qubit_z_line_decomposition(DensityMatrix::maximally_mixed(2));
  ASSERT_EQ(mid.components.size(), 2u);
  EXPECT_NEAR(mid.components[0].weight, 0.5, 1e-14);
  const DensityMatrix surface(o::bloch_rho(0.6, 0.8, 0.0));
  EXPECT_EQ(qubit_z_line_decomposition(surface).components.size(), 1u);
  EXPECT_THROW(qubit_z_line_decomposition(DensityMatrix::maximally_mixed(3)), Error);
}

TEST(ZLineDecomposition, SaturatesRsForAllQubits) {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 100; ++n) {
    const o::Mat rho = o::random_rho(2, 2, rng);
    const double alpha = angle(rng);
    const o::Mat a = pauli_x().matrix();
    const o::Mat b = tilted(alpha).matrix();
    const Decomposition dec = qubit_z_line_decomposition(DensityMatrix(rho));
    double sum = 0.0;
    for (const Component& c : dec.components) sum += c.weight * o::rs_l(to_density(c.state).matrix(), a, b);
    EXPECT_NEAR(0.25 * sum * sum, o::var(rho, a) * o::var(rho, b), 1e-10);
  }
}

TEST(EigenPartitionBound, MaximallyMixedQutrit) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const EigenPartitionBound k = eigen_partition_terms(DensityMatrix::maximally_mixed(3), s.jx, s.jy);
  EXPECT_NEAR(k.l_rho, 0.0, 1e-14);
  EXPECT_GE(k.value, 2.0 / 3.0 - 1e-12);
  // In the J_z basis: L(|+-1>) = 1, L(|0>) = 0.
  const RsOperators ops = RsOperators::make(s.jx, s.jy);
  EXPECT_NEAR(rs_lower_bound_L(PureState::basis(3, 0), ops), 1.0, 1e-14);
  EXPECT_NEAR(rs_lower_bound_L(PureState::basis(3, 1), ops), 0.0, 1e-14);
}

TEST(EigenPartitionBound, PureQutritAndDominance) {
  std::mt19937_64 rng(19);
  const SpinAlgebra s = make_spin_algebra(1.0);
  const o::Mat pure = o::projector(o::random_vector(3, rng));
  EXPECT_NEAR(eigen_partition_bound_K(DensityMatrix(pure), s.jx, s.jy), o::rs_l(pure, s.jx.matrix(), s.jy.matrix()),
              1e-10);
  for (int n = 0; n < 200; ++n) {
    const o::Mat rho = o::random_rho(3, 3, rng);
    EXPECT_GE(eigen_partition_bound_K(DensityMatrix(rho), s.jx, s.jy), o::rs_l(rho, s.jx.matrix(), s.jy.matrix()) - 1e-12);
  }
  EXPECT_THROW(eigen_partition_bound_K(DensityMatrix::maximally_mixed(2), pauli_x(), pauli_y()), Error);
}

TEST(EigenPartitionBound, SplitTermsFromDefinition) {
  const SpinAlgebra s = make_spin_algebra(1.0);
  const DensityMatrix rho = random_density_matrix({3, 3, 21});
  const EigenPartitionBound k = eigen_partition_terms(rho, s.jx, s.jy);
  const o::Mat a = s.jx.matrix();
  const o::Mat b = s.jy.matrix();
  double eig = 0.0;
  for (int i = 0; i < 3; ++i) {
    const o::Vec v = rho.eigenvectors().col(i);
    const double li = rho.eigenvalues()(i);
    eig += li * o::rs_l(o::projector(v), a, b);
    const o::Mat rest = rho.matrix() - li * o::projector(v);
    const double p = o::trace_real(rest);
    const double split = li * o::rs_l(o::projector(v), a, b) + p * o::rs_l(rest / p, a, b);
    EXPECT_NEAR(k.split[static_cast<std::size_t>(i)], split, 1e-10);
  }
  EXPECT_NEAR(k.eigen_sum, eig, 1e-10);
  EXPECT_NEAR(k.value, std::max({k.eigen_sum, k.split[0], k.split[1], k.split[2], k.l_rho}), 1e-15);
}

}  // namespace
}  // namespace qroof
