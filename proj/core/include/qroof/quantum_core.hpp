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

// Finite-dimensional state and operator algebra.
//
// Conventions used everywhere in qroof:
//   * hbar = 1.
//   * Spin operators are written in the J_z eigenbasis with m descending,
//     index 0 <-> m = +j, index 2j <-> m = -j.
//   * Fock operators are written in the number basis with n ascending.
//   * Composite systems use Kronecker order (system 1, system 2), i.e. the
//     index of |a>|b> is a * dim2 + b.

#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qroof/common.hpp"

namespace qroof {

/// Dense Hermitian matrix. Construction checks Hermiticity to 1e-12 and then
/// stores the exactly symmetrized matrix (A + A^dagger) / 2.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries);

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);
  /// Symmetrizes without checking; for operators built from exact formulas.
  static HermitianOperator from_hermitian_part(const Matrix& entries);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double factor) const;
  HermitianOperator operator-() const { return *this * -1.0; }
  HermitianOperator squared() const;

 private:
  struct Unchecked {};
  HermitianOperator(Matrix entries, Unchecked) : m_(std::move(entries)) {}

  Matrix m_;
};

inline HermitianOperator operator*(double factor, const HermitianOperator& op) {
  return op * factor;
}

/// {A, B} = AB + BA.
HermitianOperator anticommutator(const HermitianOperator& a, const HermitianOperator& b);
/// C = i[A, B], which is Hermitian for Hermitian A and B.
HermitianOperator i_commutator(const HermitianOperator& a, const HermitianOperator& b);

class PureState {
 public:
  /// Throws kNotNormalized when the Euclidean norm differs from 1 by > 1e-12.
  explicit PureState(Vector amplitudes);
  /// Rescales to unit norm; throws on a zero vector.
  static PureState normalized(const Vector& amplitudes);
  static PureState basis(int dim, int index);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Matrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  Vector amps_;
};

/// Unit-trace positive-semidefinite Hermitian matrix with its eigensystem.
///
/// The eigensystem is computed once at construction. Eigenvalues are stored in
/// descending order. States built from a low-rank mixture store only the
/// eigenvectors spanning the support (eigenvalue_count() < dim()); every
/// consumer in qroof works on the support and treats its orthogonal
/// complement through the projector I - sum_k |k><k|.
class DensityMatrix {
 public:
  /// Validates trace (1e-12), Hermiticity (1e-12) and PSD (min eigenvalue >= -1e-10).
  explicit DensityMatrix(const Matrix& entries);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim);
  /// sum_k weights[k] |states[k]><states[k]|, weights renormalized to sum 1.
  /// The eigensystem comes from the small Gram matrix, so this is cheap for
  /// few components in a large space.
  static DensityMatrix mixture(std::span<const double> weights, std::span<const PureState> states);
  /// G G^dagger / Tr(G G^dagger) for a dim x rank factor G.
  static DensityMatrix from_factor(const Matrix& factor);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }
  int eigenvalue_count() const { return static_cast<int>(eigenvalues_.size()); }
  /// Number of eigenvalues above the 1e-12 zero threshold.
  int rank() const;
  double purity() const;

 private:
  DensityMatrix(Matrix entries, RealVector eigenvalues, Matrix eigenvectors);

  Matrix entries_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

using State = std::variant<PureState, DensityMatrix>;

int dim_of(const State& state);
DensityMatrix to_density(const State& state);

struct SpinAlgebra {
  double j = 0.0;
  int dim = 0;
  HermitianOperator jx;
  HermitianOperator jy;
  HermitianOperator jz;
};

/// Angular-momentum matrices for spin j (2j must be a nonnegative integer).
SpinAlgebra make_spin_algebra(double j);
/// Spin quantum number j = (dim - 1) / 2 for a spin Hilbert space of size dim.
double spin_from_dim(int dim);

/// d^2 - 1 traceless Hermitian generators normalized as Tr(G_k G_l) = 2 delta_kl.
/// Order: for each pair k < l the symmetric then antisymmetric off-diagonal
/// generator, followed by the d - 1 diagonal ones. For d = 2 this is
/// (sigma_x, sigma_y, sigma_z).
std::vector<HermitianOperator> make_su_d_generators(int d);

struct FockAlgebra {
  int cutoff = 0;
  Matrix a;
  Matrix a_dag;
  HermitianOperator x;  // (a + a^dagger) / sqrt(2)
  HermitianOperator p;  // (a - a^dagger) / (i sqrt(2))
  HermitianOperator number;
};

inline constexpr int kDefaultFockCutoff = 40;

FockAlgebra make_fock_algebra(int cutoff = kDefaultFockCutoff);

/// Truncated coherent state; throws kCutoffTooSmall when the probability
/// mass beyond the cutoff exceeds 1e-10.
PureState coherent_state(Complex alpha, int cutoff = kDefaultFockCutoff);

/// exp(-i c.J) |+j>_z. The exponent vector c is used as given; no global
/// phase is removed.
PureState spin_coherent_state(const SpinAlgebra& spin, const Eigen::Vector3d& c);
/// Spin-coherent state pointing along (sin t cos f, sin t sin f, cos t).
PureState spin_coherent_state_polar(const SpinAlgebra& spin, double theta, double phi);
/// The exponent vector rotating +z onto the given polar direction.
Eigen::Vector3d rotation_vector_for(double theta, double phi);

struct RandomStateConfig {
  int dim = 2;
  int rank = 2;
  std::uint64_t seed = 0;
};

/// Induced-measure sample: rho = G G^dagger / Tr(G G^dagger) with G a
/// dim x rank matrix of standard complex Gaussians from a seeded generator.
DensityMatrix random_density_matrix(const RandomStateConfig& cfg);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

using Tensorable = std::variant<HermitianOperator, PureState, DensityMatrix>;
/// Runtime-dispatched Kronecker product; throws kKindMismatch for mixed kinds.
Tensorable tensor(const Tensorable& a, const Tensorable& b);

double expectation(const PureState& psi, const HermitianOperator& a);
double expectation(const DensityMatrix& rho, const HermitianOperator& a);
double expectation(const State& state, const HermitianOperator& a);

/// <A^2> - <A>^2, clamped to 0 when it is negative by at most 1e-12.
double variance(const PureState& psi, const HermitianOperator& a);
double variance(const DensityMatrix& rho, const HermitianOperator& a);
double variance(const State& state, const HermitianOperator& a);

struct GroundState {
  double energy = 0.0;
  PureState state;
  bool degenerate = false;
};

/// Lowest eigenpair. `degenerate` is set when the gap to the next eigenvalue
/// is below 1e-9 times the spectral range. The phase is fixed so that the
/// largest-magnitude amplitude is real and positive.
GroundState ground_state(const HermitianOperator& h);

/// exp(-i t H) for Hermitian H.
Matrix unitary_exp(const HermitianOperator& h, double t);

/// Largest absolute entry of a matrix.
double max_abs(const Matrix& m);

}  // namespace qroof
