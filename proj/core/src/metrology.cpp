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

#include "qroof/metrology.hpp"

#include <cmath>

namespace qroof {

namespace {

struct Support {
  RealVector lambda;
  Matrix vecs;  // dim x r
};

Support support_of(const DensityMatrix& rho) {
  const int r = rho.rank();
  // Eigenvalues are sorted descending, so the support is a leading block.
  return Support{rho.eigenvalues().head(r), rho.eigenvectors().leftCols(r)};
}

void require_dims(int a, int b, const char* what) {
  require(a == b, ErrorCode::kDimensionMismatch,
          std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

double qfi(const DensityMatrix& rho, const HermitianOperator& b) {
  require_dims(rho.dim(), b.dim(), "qfi");
  const Support s = support_of(rho);
  const int r = static_cast<int>(s.lambda.size());
  const Matrix bu = b.matrix() * s.vecs;
  const Matrix bs = s.vecs.adjoint() * bu;
  double f = 0.0;
  for (int k = 0; k < r; ++k) {
    for (int l = 0; l < r; ++l) {
      const double dl = s.lambda(k) - s.lambda(l);
      f += 2.0 * dl * dl / (s.lambda(k) + s.lambda(l)) * std::norm(bs(k, l));
    }
    // Pairs (k, kernel): 2 terms of 2 lambda_k |<k|B|l>|^2 each.
    const double outside = bu.col(k).squaredNorm() - bs.col(k).squaredNorm();
    f += 4.0 * s.lambda(k) * std::max(outside, 0.0);
  }
  return f;
}

double qfi(const PureState& psi, const HermitianOperator& b) { return 4.0 * variance(psi, b); }

double qfi(const State& state, const HermitianOperator& b) {
  return std::visit([&b](const auto& s) { return qfi(s, b); }, state);
}

SldResult sld(const DensityMatrix& rho, const HermitianOperator& b) {
  require_dims(rho.dim(), b.dim(), "sld");
  const Support s = support_of(rho);
  const int r = static_cast<int>(s.lambda.size());
  const int d = rho.dim();
  const Matrix bs = s.vecs.adjoint() * b.matrix() * s.vecs;

  Matrix m(r, r);
  for (int k = 0; k < r; ++k) {
    for (int l = 0; l < r; ++l) {
      m(k, l) = 2.0 * kI * (s.lambda(k) - s.lambda(l)) / (s.lambda(k) + s.lambda(l)) * bs(k, l);
    }
  }
  const Matrix p_support = s.vecs * s.vecs.adjoint();
  const Matrix p_kernel = Matrix::Identity(d, d) - p_support;
  const Matrix cross = p_support * b.matrix() * p_kernel;
  const Matrix l_full = s.vecs * m * s.vecs.adjoint() + 2.0 * kI * (cross - cross.adjoint());
  HermitianOperator l_op = HermitianOperator::from_hermitian_part(l_full);

  const Matrix& rm = rho.matrix();
  const Matrix lhs = kI * (rm * b.matrix() - b.matrix() * rm);
  const Matrix rhs = 0.5 * (rm * l_op.matrix() + l_op.matrix() * rm);
  const double residual = (lhs - rhs).norm();
  const double q = qfi(rho, b);
  const double mean = expectation(rho, l_op);
  return SldResult{std::move(l_op), q, mean, residual};
}

double error_propagation(const State& state, const HermitianOperator& a,
                         const HermitianOperator& b) {
  require_dims(dim_of(state), a.dim(), "error_propagation");
  require_dims(a.dim(), b.dim(), "error_propagation");
  const double signal = expectation(state, i_commutator(a, b));
  require(std::abs(signal) > 1e-12, ErrorCode::kVanishingSignal,
          "error_propagation: |<i[A,B]>| vanishes");
  return variance(state, a) / (signal * signal);
}

EstimationReport cramer_rao(const State& state, const HermitianOperator& b, int repetitions,
                            const std::optional<HermitianOperator>& measured) {
  require(repetitions >= 1, ErrorCode::kInvalidArgument, "cramer_rao: repetitions must be >= 1");
  const double f = qfi(state, b);
  require(f > 1e-12, ErrorCode::kUnestimableParameter,
          "cramer_rao: F_Q vanishes, the parameter cannot be estimated");
  EstimationReport report;
  report.qfi = f;
  report.cramer_rao = 1.0 / (repetitions * f);
  report.repetitions = repetitions;
  if (measured) report.error_propagation = error_propagation(state, *measured, b);
  return report;
}

double variance_qfi_gap(const State& state, const HermitianOperator& a) {
  const double gap = variance(state, a) - qfi(state, a) / 4.0;
  return (gap < 0.0 && gap >= -1e-10) ? 0.0 : gap;
}

SaturationCheck check_sld_saturation(const DensityMatrix& rho, const HermitianOperator& a,
                                     const HermitianOperator& b) {
  require_dims(rho.dim(), a.dim(), "check_sld_saturation");
  require_dims(a.dim(), b.dim(), "check_sld_saturation");
  const double var_a = variance(rho, a);
  require(var_a > 0.0, ErrorCode::kInvalidArgument, "check_sld_saturation: Var(A) must be > 0");

  const Matrix& rm = rho.matrix();
  const Matrix x = kI * (rm * b.matrix() - b.matrix() * rm);
  const Matrix y = 0.5 * (rm * a.matrix() + a.matrix() * rm);
  const double yy = y.squaredNorm();
  SaturationCheck out;
  out.c = yy > 0.0 ? (y.adjoint() * x).trace().real() / yy : 0.0;
  out.residual = (x - out.c * y).norm();
  out.product = var_a * qfi(rho, b);
  const double signal = expectation(rho, i_commutator(a, b));
  out.signal_squared = signal * signal;
  const bool proportional = out.residual <= 1e-8 * x.norm();
  const double scale = std::max(out.signal_squared, 1e-300);
  out.saturated = proportional && std::abs(out.product - out.signal_squared) <= 1e-8 * scale;
  return out;
}

}  // namespace qroof
