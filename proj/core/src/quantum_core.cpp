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

#include "qroof/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <spdlog/spdlog.h>

#include "qroof/sampling.hpp"

namespace qroof {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotHermitian: return "not_hermitian";
    case ErrorCode::kNotNormalized: return "not_normalized";
    case ErrorCode::kNotDensityMatrix: return "not_density_matrix";
    case ErrorCode::kInvalidSpin: return "invalid_spin";
    case ErrorCode::kCutoffTooSmall: return "cutoff_too_small";
    case ErrorCode::kKindMismatch: return "kind_mismatch";
    case ErrorCode::kVanishingSignal: return "vanishing_signal";
    case ErrorCode::kUnestimableParameter: return "unestimable_parameter";
    case ErrorCode::kAncillaTooSmall: return "ancilla_too_small";
    case ErrorCode::kDegenerateGroundState: return "degenerate_ground_state";
    case ErrorCode::kNotConverged: return "not_converged";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kMalformedSpec: return "malformed_spec";
    case ErrorCode::kUnknownName: return "unknown_name";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

void require_square(const Matrix& m, const char* what) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorCode::kInvalidArgument,
          std::string(what) + ": matrix must be square and non-empty");
}

void require_same_dim(int a, int b, const char* what) {
  require(a == b, ErrorCode::kDimensionMismatch,
          std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

double clamp_variance(double v) {
  if (v < 0.0 && v >= tol::kVarianceClamp) {
    spdlog::debug("variance {:.3e} clamped to 0", v);
    return 0.0;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(Matrix entries) {
  require_square(entries, "HermitianOperator");
  const double dev = max_abs(entries - entries.adjoint());
  require(dev <= tol::kHermitian, ErrorCode::kNotHermitian,
          "HermitianOperator: deviation from Hermiticity " + std::to_string(dev));
  m_ = hermitian_part(entries);
}

HermitianOperator HermitianOperator::identity(int dim) {
  require(dim > 0, ErrorCode::kInvalidArgument, "identity: dim must be positive");
  return HermitianOperator(Matrix::Identity(dim, dim), Unchecked{});
}

HermitianOperator HermitianOperator::zero(int dim) {
  require(dim > 0, ErrorCode::kInvalidArgument, "zero: dim must be positive");
  return HermitianOperator(Matrix::Zero(dim, dim), Unchecked{});
}

HermitianOperator HermitianOperator::from_hermitian_part(const Matrix& entries) {
  require_square(entries, "HermitianOperator");
  return HermitianOperator(hermitian_part(entries), Unchecked{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  require_same_dim(dim(), other.dim(), "operator+");
  return HermitianOperator(m_ + other.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  require_same_dim(dim(), other.dim(), "operator-");
  return HermitianOperator(m_ - other.m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator*(double factor) const {
  return HermitianOperator(m_ * factor, Unchecked{});
}

HermitianOperator HermitianOperator::squared() const {
  return from_hermitian_part(m_ * m_);
}

HermitianOperator anticommutator(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "anticommutator");
  const Matrix ab = a.matrix() * b.matrix();
  return HermitianOperator::from_hermitian_part(ab + ab.adjoint());
}

HermitianOperator i_commutator(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "i_commutator");
  const Matrix ab = a.matrix() * b.matrix();
  return HermitianOperator::from_hermitian_part(kI * (ab - ab.adjoint()));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  require(amps_.size() > 0, ErrorCode::kInvalidArgument, "PureState: empty vector");
  const double n = amps_.norm();
  require(std::abs(n - 1.0) <= tol::kNorm, ErrorCode::kNotNormalized,
          "PureState: norm " + std::to_string(n));
}

PureState PureState::normalized(const Vector& amplitudes) {
  const double n = amplitudes.norm();
  require(n > 0.0, ErrorCode::kNotNormalized, "PureState: zero vector");
  return PureState(amplitudes / n);
}

PureState PureState::basis(int dim, int index) {
  require(dim > 0 && index >= 0 && index < dim, ErrorCode::kInvalidArgument,
          "PureState::basis: index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries, RealVector eigenvalues, Matrix eigenvectors)
    : entries_(std::move(entries)),
      eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {}

DensityMatrix::DensityMatrix(const Matrix& entries) {
  require_square(entries, "DensityMatrix");
  const double dev = max_abs(entries - entries.adjoint());
  require(dev <= tol::kHermitian, ErrorCode::kNotHermitian,
          "DensityMatrix: deviation from Hermiticity " + std::to_string(dev));
  const Complex tr = entries.trace();
  require(std::abs(tr - 1.0) <= tol::kTrace, ErrorCode::kNotDensityMatrix,
          "DensityMatrix: trace differs from 1 by " + std::to_string(std::abs(tr - 1.0)));
  entries_ = hermitian_part(entries);

  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_);
  const int n = dim();
  eigenvalues_ = es.eigenvalues().reverse();
  eigenvectors_ = es.eigenvectors().rowwise().reverse();
  require(eigenvalues_(n - 1) >= tol::kMinEigenvalue, ErrorCode::kNotDensityMatrix,
          "DensityMatrix: negative eigenvalue " + std::to_string(eigenvalues_(n - 1)));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  RealVector ev(1);
  ev(0) = 1.0;
  return DensityMatrix(hermitian_part(psi.projector()), std::move(ev), psi.amplitudes());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  require(dim > 0, ErrorCode::kInvalidArgument, "maximally_mixed: dim must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim),
                       RealVector::Constant(dim, 1.0 / dim), Matrix::Identity(dim, dim));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const PureState> states) {
  require(!states.empty() && weights.size() == states.size(), ErrorCode::kInvalidArgument,
          "mixture: need one weight per state");
  const int d = states.front().dim();
  double total = 0.0;
  for (double w : weights) {
    require(w >= 0.0, ErrorCode::kInvalidArgument, "mixture: negative weight");
    total += w;
  }
  require(total > 0.0, ErrorCode::kInvalidArgument, "mixture: weights sum to zero");
  Matrix factor(d, static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    require_same_dim(states[k].dim(), d, "mixture");
    factor.col(static_cast<Eigen::Index>(k)) = std::sqrt(weights[k] / total) * states[k].amplitudes();
  }
  return from_factor(factor);
}

DensityMatrix DensityMatrix::from_factor(const Matrix& factor) {
  const int d = static_cast<int>(factor.rows());
  const int r = static_cast<int>(factor.cols());
  require(d > 0 && r > 0, ErrorCode::kInvalidArgument, "from_factor: empty factor");
  const double t = factor.squaredNorm();
  require(t > 0.0, ErrorCode::kInvalidArgument, "from_factor: zero factor");
  const Matrix g = factor / std::sqrt(t);
  Matrix entries = hermitian_part(g * g.adjoint());

  if (2 * r >= d) return DensityMatrix(entries);

  // Low-rank route: eigenpairs of G G^dagger from the r x r Gram matrix.
  Eigen::SelfAdjointEigenSolver<Matrix> es(g.adjoint() * g);
  std::vector<int> keep;
  for (int i = r - 1; i >= 0; --i) {
    if (es.eigenvalues()(i) > 1e-14) keep.push_back(i);
  }
  RealVector ev(static_cast<Eigen::Index>(keep.size()));
  Matrix vecs(d, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const double mu = es.eigenvalues()(keep[c]);
    ev(static_cast<Eigen::Index>(c)) = mu;
    vecs.col(static_cast<Eigen::Index>(c)) = g * es.eigenvectors().col(keep[c]) / std::sqrt(mu);
  }
  return DensityMatrix(std::move(entries), std::move(ev), std::move(vecs));
}

int DensityMatrix::rank() const {
  return static_cast<int>((eigenvalues_.array() > tol::kZeroEigenvalue).count());
}

double DensityMatrix::purity() const {
  return eigenvalues_.squaredNorm();
}

int dim_of(const State& state) {
  return std::visit([](const auto& s) { return s.dim(); }, state);
}

DensityMatrix to_density(const State& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(state);
}

// ---------------------------------------------------------------------------
// Algebras

double spin_from_dim(int dim) {
  require(dim >= 1, ErrorCode::kInvalidSpin, "spin_from_dim: dim must be positive");
  return 0.5 * (dim - 1);
}

SpinAlgebra make_spin_algebra(double j) {
  const double twice = 2.0 * j;
  require(j >= 0.0 && std::abs(twice - std::round(twice)) < 1e-12, ErrorCode::kInvalidSpin,
          "make_spin_algebra: j must be a nonnegative half-integer, got " + std::to_string(j));
  const int dim = static_cast<int>(std::lround(twice)) + 1;
  const double jj = 0.5 * (dim - 1);
  Matrix jp = Matrix::Zero(dim, dim);
  Matrix jz = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = jj - i;
    jz(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
  }
  const Matrix jm = jp.adjoint();
  return SpinAlgebra{jj, dim, HermitianOperator::from_hermitian_part(0.5 * (jp + jm)),
                     HermitianOperator::from_hermitian_part(-0.5 * kI * (jp - jm)),
                     HermitianOperator::from_hermitian_part(jz)};
}

std::vector<HermitianOperator> make_su_d_generators(int d) {
  require(d >= 2, ErrorCode::kInvalidArgument, "make_su_d_generators: d must be >= 2");
  std::vector<HermitianOperator> gens;
  gens.reserve(static_cast<std::size_t>(d * d - 1));
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      Matrix s = Matrix::Zero(d, d);
      s(k, l) = 1.0;
      s(l, k) = 1.0;
      gens.push_back(HermitianOperator::from_hermitian_part(s));
      Matrix a = Matrix::Zero(d, d);
      a(k, l) = -kI;
      a(l, k) = kI;
      gens.push_back(HermitianOperator::from_hermitian_part(a));
    }
  }
  for (int m = 1; m < d; ++m) {
    Matrix g = Matrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (m * (m + 1.0)));
    for (int k = 0; k < m; ++k) g(k, k) = scale;
    g(m, m) = -scale * m;
    gens.push_back(HermitianOperator::from_hermitian_part(g));
  }
  return gens;
}

FockAlgebra make_fock_algebra(int cutoff) {
  require(cutoff >= 2, ErrorCode::kInvalidArgument, "make_fock_algebra: cutoff must be >= 2");
  Matrix a = Matrix::Zero(cutoff, cutoff);
  Matrix n = Matrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
    n(k, k) = k;
  }
  const Matrix ad = a.adjoint();
  const double s = 1.0 / std::sqrt(2.0);
  return FockAlgebra{cutoff, a, ad, HermitianOperator::from_hermitian_part(s * (a + ad)),
                     HermitianOperator::from_hermitian_part(-kI * s * (a - ad)),
                     HermitianOperator::from_hermitian_part(n)};
}

PureState coherent_state(Complex alpha, int cutoff) {
  require(cutoff >= 1, ErrorCode::kInvalidArgument, "coherent_state: cutoff must be positive");
  const double mean_n = std::norm(alpha);
  Vector amps(cutoff);
  Complex c = std::exp(-0.5 * mean_n);
  amps(0) = c;
  for (int k = 1; k < cutoff; ++k) {
    c *= alpha / std::sqrt(static_cast<double>(k));
    amps(k) = c;
  }
  // Probability mass beyond the cutoff, summed until terms are negligible.
  double tail = 0.0;
  for (int k = cutoff; k < cutoff + 4000; ++k) {
    c *= alpha / std::sqrt(static_cast<double>(k));
    const double term = std::norm(c);
    tail += term;
    if (k > mean_n && term < 1e-300) break;
  }
  require(tail < 1e-10, ErrorCode::kCutoffTooSmall,
          "coherent_state: tail mass " + std::to_string(tail) + " beyond cutoff " +
              std::to_string(cutoff));
  return PureState::normalized(amps);
}

Matrix unitary_exp(const HermitianOperator& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const Vector phases = (-kI * t * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

PureState spin_coherent_state(const SpinAlgebra& spin, const Eigen::Vector3d& c) {
  const HermitianOperator gen = spin.jx * c(0) + spin.jy * c(1) + spin.jz * c(2);
  const Matrix u = unitary_exp(gen, 1.0);
  return PureState::normalized(u.col(0));
}

Eigen::Vector3d rotation_vector_for(double theta, double phi) {
  return theta * Eigen::Vector3d(-std::sin(phi), std::cos(phi), 0.0);
}

PureState spin_coherent_state_polar(const SpinAlgebra& spin, double theta, double phi) {
  return spin_coherent_state(spin, rotation_vector_for(theta, phi));
}

DensityMatrix random_density_matrix(const RandomStateConfig& cfg) {
  require(cfg.dim >= 1 && cfg.rank >= 1 && cfg.rank <= cfg.dim, ErrorCode::kInvalidArgument,
          "random_density_matrix: need 1 <= rank <= dim");
  Rng rng = make_stream(cfg.seed);
  return DensityMatrix::from_factor(ginibre(cfg.dim, cfg.rank, rng));
}

// ---------------------------------------------------------------------------
// Composition

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator::from_hermitian_part(kron(a.matrix(), b.matrix()));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState::normalized(kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix m = kron(a.matrix(), b.matrix());
  m /= m.trace().real();
  return DensityMatrix(hermitian_part(m));
}

Tensorable tensor(const Tensorable& a, const Tensorable& b) {
  require(a.index() == b.index(), ErrorCode::kKindMismatch,
          "tensor: operands must both be operators, pure states or density matrices");
  return std::visit(
      [&b](const auto& lhs) -> Tensorable {
        using T = std::decay_t<decltype(lhs)>;
        return tensor(lhs, std::get<T>(b));
      },
      a);
}

// ---------------------------------------------------------------------------
// Moments

double expectation(const PureState& psi, const HermitianOperator& a) {
  require_same_dim(psi.dim(), a.dim(), "expectation");
  return psi.amplitudes().dot(a.matrix() * psi.amplitudes()).real();
}

double expectation(const DensityMatrix& rho, const HermitianOperator& a) {
  require_same_dim(rho.dim(), a.dim(), "expectation");
  return rho.matrix().cwiseProduct(a.matrix().transpose()).sum().real();
}

double expectation(const State& state, const HermitianOperator& a) {
  return std::visit([&a](const auto& s) { return expectation(s, a); }, state);
}

double variance(const PureState& psi, const HermitianOperator& a) {
  require_same_dim(psi.dim(), a.dim(), "variance");
  const Vector av = a.matrix() * psi.amplitudes();
  const double mean = psi.amplitudes().dot(av).real();
  return clamp_variance((av - mean * psi.amplitudes()).squaredNorm());
}

double variance(const DensityMatrix& rho, const HermitianOperator& a) {
  require_same_dim(rho.dim(), a.dim(), "variance");
  const double mean = expectation(rho, a);
  const Matrix av = a.matrix() * rho.eigenvectors() - mean * rho.eigenvectors();
  double v = 0.0;
  for (int k = 0; k < rho.eigenvalue_count(); ++k) {
    v += rho.eigenvalues()(k) * av.col(k).squaredNorm();
  }
  return clamp_variance(v);
}

double variance(const State& state, const HermitianOperator& a) {
  return std::visit([&a](const auto& s) { return variance(s, a); }, state);
}

GroundState ground_state(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const RealVector& ev = es.eigenvalues();
  const int n = h.dim();
  bool degenerate = false;
  if (n > 1) {
    const double range = ev(n - 1) - ev(0);
    degenerate = range <= 0.0 || (ev(1) - ev(0)) < 1e-9 * range;
  }
  Vector v = es.eigenvectors().col(0);
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v *= std::conj(v(imax)) / std::abs(v(imax));
  return GroundState{ev(0), PureState::normalized(v), degenerate};
}

}  // namespace qroof
