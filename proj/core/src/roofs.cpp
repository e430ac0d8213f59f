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

#include "qroof/roofs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qroof/bounds.hpp"
#include "qroof/sampling.hpp"

namespace qroof {

namespace {

constexpr double kMinComponentWeight = 1e-14;

Matrix component_matrix(const ComponentState& s) {
  if (const auto* psi = std::get_if<PureState>(&s)) return psi->projector();
  return std::get<DensityMatrix>(s).matrix();
}

/// Column k holds sqrt(l_k) |k>; columns past the stored eigenpairs are zero.
Matrix eigen_amplitudes(const DensityMatrix& rho, int ancilla_dim) {
  Matrix m = Matrix::Zero(rho.dim(), ancilla_dim);
  const int n = std::min(ancilla_dim, rho.eigenvalue_count());
  for (int k = 0; k < n; ++k) {
    const double raw = rho.eigenvalues()(k);
    const double lam = raw < tol::kZeroEigenvalue ? 0.0 : raw;
    m.col(k) = std::sqrt(lam) * rho.eigenvectors().col(k);
  }
  return m;
}

/// Evaluates one candidate: the columns of `v` are the unnormalized |v_k>.
class CandidateEvaluator {
 public:
  CandidateEvaluator(const Functional& f, const Partition& partition)
      : f_(f), partition_(partition) {}

  double operator()(const Matrix& v) const {
    double total = 0.0;
    for (const IndexSet& set : partition_) {
      if (set.size() == 1) {
        const auto col = v.col(set.front());
        const double p = col.squaredNorm();
        if (p < kMinComponentWeight) continue;
        total += p * f_.pure(PureState::normalized(col));
      } else {
        Matrix sigma = Matrix::Zero(v.rows(), v.rows());
        for (int k : set) sigma.noalias() += v.col(k) * v.col(k).adjoint();
        const double p = sigma.trace().real();
        if (p < kMinComponentWeight) continue;
        total += p * f_.mixed(DensityMatrix(sigma / p));
      }
    }
    return total;
  }

 private:
  const Functional& f_;
  const Partition& partition_;
};

// Gains below this do not reset the rejection streak.
constexpr double kSignificantGain = 1e-12;

bool better(double candidate, double incumbent, Direction direction) {
  return direction == Direction::kMinimize ? candidate < incumbent : candidate > incumbent;
}

int resolve_ancilla(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  return cfg.ancilla_dim > 0 ? cfg.ancilla_dim : rho.dim();
}

Functional variance_sum_functional(const std::vector<HermitianOperator>& ops) {
  require(!ops.empty(), ErrorCode::kInvalidArgument, "roof: need at least one operator");
  Functional f;
  f.pure = [ops](const PureState& psi) {
    double s = 0.0;
    for (const auto& op : ops) s += variance(psi, op);
    return s;
  };
  f.mixed = [ops](const DensityMatrix& rho) {
    double s = 0.0;
    for (const auto& op : ops) s += variance(rho, op);
    return s;
  };
  return f;
}

PureState bloch_pure_state(double x, double y, double z) {
  Vector v(2);
  if (z < -1.0 + 1e-15) {
    v << 0.0, 1.0;
  } else {
    v << Complex(1.0 + z, 0.0), Complex(x, y);
  }
  return PureState::normalized(v);
}

}  // namespace

double Decomposition::total_weight() const {
  double s = 0.0;
  for (const auto& c : components) s += c.weight;
  return s;
}

Matrix Decomposition::mixture() const {
  require(!components.empty(), ErrorCode::kInvalidArgument, "Decomposition: no components");
  const Matrix first = component_matrix(components.front().state);
  Matrix m = Matrix::Zero(first.rows(), first.cols());
  for (const auto& c : components) m += c.weight * component_matrix(c.state);
  return m;
}

Partition singleton_partition(int n) {
  Partition p;
  for (int k = 0; k < n; ++k) p.push_back({k});
  return p;
}

Partition trivial_partition(int n) {
  IndexSet all(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k;
  return {all};
}

std::vector<Partition> set_partitions(int n) {
  require(n >= 1 && n <= 10, ErrorCode::kInvalidArgument, "set_partitions: need 1 <= n <= 10");
  // Restricted growth strings: block[k] <= 1 + max(block[0..k-1]).
  std::vector<Partition> out;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  while (true) {
    const int blocks = 1 + *std::max_element(block.begin(), block.end());
    Partition p(static_cast<std::size_t>(blocks));
    for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(block[static_cast<std::size_t>(k)])].push_back(k);
    out.push_back(std::move(p));

    int k = n - 1;
    for (; k > 0; --k) {
      const int prefix_max =
          *std::max_element(block.begin(), block.begin() + k);
      if (block[static_cast<std::size_t>(k)] <= prefix_max) {
        ++block[static_cast<std::size_t>(k)];
        std::fill(block.begin() + k + 1, block.end(), 0);
        break;
      }
    }
    if (k == 0) break;
  }
  return out;
}

std::vector<Partition> default_partitions(int n) {
  if (n <= 3) return set_partitions(n);
  return {singleton_partition(n), trivial_partition(n)};
}

bool is_valid_partition(const Partition& partition, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& set : partition) {
    if (set.empty()) return false;
    for (int k : set) {
      if (k < 0 || k >= n || seen[static_cast<std::size_t>(k)]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

Matrix Purification::amplitude_matrix() const {
  const int d = target.dim();
  Matrix m(d, ancilla_dim);
  for (int s = 0; s < d; ++s) {
    for (int a = 0; a < ancilla_dim; ++a) m(s, a) = psi_p.amplitudes()(s * ancilla_dim + a);
  }
  return m;
}

Purification purify(const DensityMatrix& rho, int ancilla_dim) {
  require(ancilla_dim >= rho.rank(), ErrorCode::kAncillaTooSmall,
          "purify: ancilla dimension " + std::to_string(ancilla_dim) + " below rank " +
              std::to_string(rho.rank()));
  const Matrix m = eigen_amplitudes(rho, ancilla_dim);
  Vector amps(static_cast<Eigen::Index>(rho.dim()) * ancilla_dim);
  for (int s = 0; s < rho.dim(); ++s) {
    for (int a = 0; a < ancilla_dim; ++a) amps(s * ancilla_dim + a) = m(s, a);
  }
  return Purification{rho, ancilla_dim, PureState::normalized(amps),
                      Matrix::Identity(ancilla_dim, ancilla_dim), singleton_partition(ancilla_dim)};
}

Decomposition extract_decomposition(const Purification& pur) {
  require(is_valid_partition(pur.partition, pur.ancilla_dim), ErrorCode::kInvalidArgument,
          "extract_decomposition: partition must cover the ancilla basis exactly once");
  const Matrix v = pur.amplitude_matrix() * pur.u_a.transpose();
  Decomposition dec;
  for (const IndexSet& set : pur.partition) {
    if (set.size() == 1) {
      const auto col = v.col(set.front());
      const double p = col.squaredNorm();
      if (p < kMinComponentWeight) continue;
      dec.components.push_back({p, PureState::normalized(col)});
    } else {
      Matrix sigma = Matrix::Zero(v.rows(), v.rows());
      for (int k : set) sigma += v.col(k) * v.col(k).adjoint();
      const double p = sigma.trace().real();
      if (p < kMinComponentWeight) continue;
      dec.components.push_back({p, DensityMatrix(sigma / p)});
    }
  }
  return dec;
}

void validate(const OptimizerConfig& cfg) {
  require(cfg.restarts >= 1 && cfg.local_steps >= 0 && cfg.step_scale > 0.0 &&
              cfg.shrink > 0.0 && cfg.shrink < 1.0 && cfg.tolerance > 0.0 &&
              cfg.rejection_streak >= 1 && cfg.ancilla_dim >= 0,
          ErrorCode::kInvalidArgument, "OptimizerConfig: invalid settings");
}

double decomposition_average(const Decomposition& dec, const Functional& f) {
  double total = 0.0;
  for (const auto& c : dec.components) {
    if (const auto* psi = std::get_if<PureState>(&c.state)) {
      total += c.weight * f.pure(*psi);
    } else {
      require(static_cast<bool>(f.mixed), ErrorCode::kInvalidArgument,
              "decomposition_average: functional undefined on mixed components");
      total += c.weight * f.mixed(std::get<DensityMatrix>(c.state));
    }
  }
  return total;
}

RoofResult optimize_roof(const DensityMatrix& rho, const Functional& f, Direction direction,
                         const std::vector<Partition>& partitions, const OptimizerConfig& cfg) {
  validate(cfg);
  require(!partitions.empty(), ErrorCode::kInvalidArgument, "optimize_roof: no partitions");
  require(static_cast<bool>(f.pure), ErrorCode::kInvalidArgument,
          "optimize_roof: functional must be defined on pure states");
  const int n = resolve_ancilla(rho, cfg);
  for (const auto& p : partitions) {
    require(is_valid_partition(p, n), ErrorCode::kInvalidArgument,
            "optimize_roof: partition does not match the ancilla dimension");
    const bool needs_mixed =
        std::any_of(p.begin(), p.end(), [](const IndexSet& s) { return s.size() > 1; });
    require(!needs_mixed || static_cast<bool>(f.mixed), ErrorCode::kInvalidArgument,
            "optimize_roof: mixed components need a mixed-state functional");
  }

  Purification pur = purify(rho, n);
  const Matrix amps = pur.amplitude_matrix();

  const double worst = direction == Direction::kMinimize ? std::numeric_limits<double>::infinity()
                                                         : -std::numeric_limits<double>::infinity();
  double best_value = worst;
  Matrix best_u = Matrix::Identity(n, n);
  int best_partition = 0;
  bool all_converged = true;
  long evaluations = 0;

  for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
    const CandidateEvaluator eval(f, partitions[pi]);
    for (int r = 0; r < cfg.restarts; ++r) {
      Rng rng = make_stream(cfg.seed, {static_cast<std::uint64_t>(pi), static_cast<std::uint64_t>(r)});
      Matrix u = r == 0 ? Matrix(Matrix::Identity(n, n)) : haar_unitary(n, rng);
      double value = eval(amps * u.transpose());
      ++evaluations;

      double eps = cfg.step_scale;
      int rejections = 0;
      bool converged = false;
      for (int step = 0; step < cfg.local_steps; ++step) {
        const HermitianOperator h = random_unit_hermitian(n, rng);
        Matrix proposal = unitary_exp(h, -eps) * u;
        const double pv = eval(amps * proposal.transpose());
        ++evaluations;
        const bool accepted = better(pv, value, direction);
        const bool significant = accepted && std::abs(pv - value) > kSignificantGain * (1.0 + std::abs(value));
        if (accepted) {
          u = std::move(proposal);
          value = pv;
        }
        if (significant) {
          rejections = 0;
        } else if (++rejections >= cfg.rejection_streak) {
          eps *= cfg.shrink;
          rejections = 0;
          if (eps < cfg.tolerance) {
            converged = true;
            break;
          }
        }
      }
      all_converged = all_converged && (converged || cfg.local_steps == 0);
      if (better(value, best_value, direction)) {
        best_value = value;
        best_u = u;
        best_partition = static_cast<int>(pi);
      }
    }
  }

  pur.u_a = best_u;
  pur.partition = partitions[static_cast<std::size_t>(best_partition)];
  RoofResult result;
  result.value = best_value;
  result.decomposition = extract_decomposition(pur);
  result.converged = all_converged;
  result.evaluations = evaluations;
  result.partition_index = best_partition;
  return result;
}

RoofResult convex_roof_variance(const DensityMatrix& rho, const HermitianOperator& b,
                                const OptimizerConfig& cfg) {
  return roof_sum_I(rho, {b}, cfg);
}

RoofResult roof_sum_I(const DensityMatrix& rho, const std::vector<HermitianOperator>& ops,
                      const OptimizerConfig& cfg) {
  for (const auto& op : ops) {
    require(op.dim() == rho.dim(), ErrorCode::kDimensionMismatch, "roof_sum_I: dimension mismatch");
  }
  return optimize_roof(rho, variance_sum_functional(ops), Direction::kMinimize,
                       {singleton_partition(resolve_ancilla(rho, cfg))}, cfg);
}

RoofResult roof_sum_R(const DensityMatrix& rho, const std::vector<HermitianOperator>& ops,
                      const OptimizerConfig& cfg) {
  for (const auto& op : ops) {
    require(op.dim() == rho.dim(), ErrorCode::kDimensionMismatch, "roof_sum_R: dimension mismatch");
  }
  return optimize_roof(rho, variance_sum_functional(ops), Direction::kMaximize,
                       {singleton_partition(resolve_ancilla(rho, cfg))}, cfg);
}

RoofResult concave_roof_L(const DensityMatrix& rho, const HermitianOperator& a,
                          const HermitianOperator& b, const OptimizerConfig& cfg,
                          const std::vector<Partition>& extra_partitions) {
  require(a.dim() == rho.dim() && b.dim() == rho.dim(), ErrorCode::kDimensionMismatch,
          "concave_roof_L: dimension mismatch");
  const RsOperators ops = RsOperators::make(a, b);
  Functional f;
  f.pure = [ops](const PureState& psi) { return rs_lower_bound_L(psi, ops); };
  f.mixed = [ops](const DensityMatrix& r) { return rs_lower_bound_L(r, ops); };
  std::vector<Partition> partitions = default_partitions(resolve_ancilla(rho, cfg));
  partitions.insert(partitions.end(), extra_partitions.begin(), extra_partitions.end());
  return optimize_roof(rho, f, Direction::kMaximize, partitions, cfg);
}

Decomposition qubit_z_line_decomposition(const DensityMatrix& rho) {
  require(rho.dim() == 2, ErrorCode::kInvalidArgument,
          "qubit_z_line_decomposition: state must be a qubit");
  const Matrix& m = rho.matrix();
  const double bx = 2.0 * m(0, 1).real();
  const double by = -2.0 * m(0, 1).imag();
  const double bz = (m(0, 0) - m(1, 1)).real();
  const double t2 = 1.0 - bx * bx - by * by;
  Decomposition dec;
  if (t2 <= 1e-14) {
    dec.components.push_back({1.0, bloch_pure_state(bx, by, 0.0)});
    return dec;
  }
  const double t = std::sqrt(t2);
  const double shift = std::clamp(bz / t, -1.0, 1.0);
  const double p_up = 0.5 * (1.0 + shift);
  const double p_down = 0.5 * (1.0 - shift);
  if (p_up > 0.0) dec.components.push_back({p_up, bloch_pure_state(bx, by, t)});
  if (p_down > 0.0) dec.components.push_back({p_down, bloch_pure_state(bx, by, -t)});
  return dec;
}

EigenPartitionBound eigen_partition_terms(const DensityMatrix& rho, const HermitianOperator& a,
                                          const HermitianOperator& b) {
  require(rho.dim() == 3, ErrorCode::kInvalidArgument,
          "eigen_partition_bound_K: state must be a qutrit");
  // Pure inputs carry a thin eigensystem; rebuild the full one.
  const DensityMatrix full = rho.eigenvalue_count() == 3 ? rho : DensityMatrix(rho.matrix());
  const RsOperators ops = RsOperators::make(a, b);
  const RealVector& lam = full.eigenvalues();
  const Matrix& vecs = full.eigenvectors();

  EigenPartitionBound out;
  std::array<double, 3> l_pure{};
  for (int k = 0; k < 3; ++k) {
    l_pure[static_cast<std::size_t>(k)] = rs_lower_bound_L(PureState::normalized(vecs.col(k)), ops);
    out.eigen_sum += std::max(lam(k), 0.0) * l_pure[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < 3; ++k) {
    Matrix sigma = Matrix::Zero(3, 3);
    for (int l = 0; l < 3; ++l) {
      if (l == k) continue;
      sigma += std::max(lam(l), 0.0) * vecs.col(l) * vecs.col(l).adjoint();
    }
    const double p = sigma.trace().real();
    double term = std::max(lam(k), 0.0) * l_pure[static_cast<std::size_t>(k)];
    if (p >= kMinComponentWeight) term += p * rs_lower_bound_L(DensityMatrix(sigma / p), ops);
    out.split[static_cast<std::size_t>(k)] = term;
  }
  out.l_rho = rs_lower_bound_L(full, ops);
  out.value = std::max({out.eigen_sum, out.split[0], out.split[1], out.split[2], out.l_rho});
  return out;
}

double eigen_partition_bound_K(const DensityMatrix& rho, const HermitianOperator& a,
                               const HermitianOperator& b) {
  return eigen_partition_terms(rho, a, b).value;
}

}  // namespace qroof
