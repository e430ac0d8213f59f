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


// Reference computations for tests. Nothing here calls into the library's
// numerical routines; each quantity is rebuilt from its definition.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qroof::oracle {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Angular momentum matrices from the ladder operator, m = j, j-1, ..., -j.
struct Spin {
  Mat x, y, z;
};

inline Spin spin(double j) {
  const int d = static_cast<int>(std::lround(2 * j)) + 1;
  Mat plus = Mat::Zero(d, d);
  Mat z = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = j - k;
    z(k, k) = m;
    if (k > 0) plus(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Mat minus = plus.adjoint();
  return {(plus + minus) / 2.0, (plus - minus) / Cx(0, 2), z};
}

inline double trace_real(const Mat& m) { return m.trace().real(); }

inline double mean(const Mat& rho, const Mat& a) { return trace_real(rho * a); }

inline double var(const Mat& rho, const Mat& a) {
  const double m = mean(rho, a);
  return trace_real(rho * a * a) - m * m;
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

/// Solves i[rho, B] = (rho L + L rho) / 2 as a linear system in vec(L) and
/// returns Tr(rho L^2). Independent of the eigenvalue-sum formula.
inline double qfi_lyapunov(const Mat& rho, const Mat& b) {
  const int d = static_cast<int>(rho.rows());
  // vec(X Y Z) = (Z^T kron X) vec(Y), column-major vec.
  Mat sys = Mat::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Mat e = Mat::Zero(d, d);
      e(r, c) = 1.0;
      const Mat img = 0.5 * (rho * e + e * rho);
      for (int k = 0; k < d * d; ++k) sys(k, c * d + r) = img(k % d, k / d);
    }
  }
  const Mat rhs_m = Cx(0, 1) * (rho * b - b * rho);
  Vec rhs(d * d);
  for (int k = 0; k < d * d; ++k) rhs(k) = rhs_m(k % d, k / d);
  const Vec l = sys.completeOrthogonalDecomposition().solve(rhs);
  Mat lm(d, d);
  for (int k = 0; k < d * d; ++k) lm(k % d, k / d) = l(k);
  return trace_real(rho * lm * lm);
}

/// G G^dagger / Tr with complex Gaussian G (its own generator, not the library's).
inline Mat random_rho(int d, int rank, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat g(d, rank);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < rank; ++c) g(r, c) = Cx(n(rng), n(rng));
  }
  const Mat rho = g * g.adjoint();
  return rho / trace_real(rho);
}

inline Vec random_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec v(d);
  for (int k = 0; k < d; ++k) v(k) = Cx(n(rng), n(rng));
  return v.normalized();
}

inline Mat random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) g(r, c) = Cx(n(rng), n(rng));
  }
  return (g + g.adjoint()) / 2.0;
}

/// Robertson-Schroedinger L from its definition.
inline double rs_l(const Mat& rho, const Mat& a, const Mat& b) {
  const double cov = trace_real(rho * (a * b + b * a)) - 2 * mean(rho, a) * mean(rho, b);
  const Mat c = Cx(0, 1) * (a * b - b * a);
  const double cm = mean(rho, c);
  return std::sqrt(cov * cov + cm * cm);
}

/// Qubit state from a Bloch vector.
inline Mat bloch_rho(double x, double y, double z) {
  Mat r(2, 2);
  r << Cx(1 + z, 0), Cx(x, -y), Cx(x, y), Cx(1 - z, 0);
  return r / 2.0;
}

inline Vec bloch_pure(double theta, double phi) {
  Vec v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return v;
}

/// Truncated coherent state from the series, renormalized.
inline Vec coherent(Cx alpha, int cutoff) {
  Vec v(cutoff);
  Cx term = 1.0;
  for (int n = 0; n < cutoff; ++n) {
    if (n > 0) term *= alpha / std::sqrt(static_cast<double>(n));
    v(n) = term;
  }
  return v.normalized();
}

/// Truncated position and momentum quadratures.
inline std::pair<Mat, Mat> quadratures(int cutoff) {
  Mat a = Mat::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Mat ad = a.adjoint();
  return {(a + ad) / std::sqrt(2.0), (a - ad) / Cx(0, std::sqrt(2.0))};
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

}  // namespace qroof::oracle
