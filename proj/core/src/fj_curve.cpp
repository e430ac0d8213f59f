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

// F_j(X) from ground states of (J_x - mu)^2 - lambda J_z.
//
// Expanding the square gives J_x^2 - lambda J_z - 2 mu J_x + mu^2, the
// two-multiplier Hamiltonian with lambda_2 = 2 mu. Minimizing its ground
// energy over mu yields the pure state minimizing Var(J_x) - lambda <J_z>,
// i.e. a point on the lower boundary of the (<J_z>, Var(J_x)) region.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "qroof/bounds.hpp"

namespace qroof {

namespace {

struct CurvePoint {
  double x = 0.0;
  double v = 0.0;
  bool degenerate = false;
};

class Sampler {
 public:
  explicit Sampler(double j) : spin_(make_spin_algebra(j)), half_integer_(std::fmod(2.0 * j, 2.0) == 1.0) {
    jx2_ = spin_.jx.squared();
  }

  CurvePoint at(double lambda) const {
    const double mu = half_integer_ ? best_mu(lambda) : 0.0;
    const GroundState g = ground_state(hamiltonian(lambda, mu));
    CurvePoint p;
    p.x = expectation(g.state, spin_.jz) / spin_.j;
    p.v = variance(g.state, spin_.jx) / spin_.j;
    p.degenerate = g.degenerate;
    return p;
  }

 private:
  HermitianOperator hamiltonian(double lambda, double mu) const {
    return jx2_ - (2.0 * mu) * spin_.jx - lambda * spin_.jz;
  }

  double energy(double lambda, double mu) const {
    return ground_state(hamiltonian(lambda, mu)).energy + mu * mu;
  }

  /// E_0 is even in mu, so the search runs over [0, j]: a coarse scan, then
  /// golden-section refinement around the best scan point.
  double best_mu(double lambda) const {
    constexpr int kScan = 41;
    const double step = spin_.j / (kScan - 1);
    int best = 0;
    double best_e = energy(lambda, 0.0);
    for (int k = 1; k < kScan; ++k) {
      const double e = energy(lambda, k * step);
      if (e < best_e) {
        best_e = e;
        best = k;
      }
    }
    double lo = std::max(0.0, (best - 1) * step);
    double hi = std::min(spin_.j, (best + 1) * step);
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - ratio * (hi - lo);
    double b = lo + ratio * (hi - lo);
    double ea = energy(lambda, a);
    double eb = energy(lambda, b);
    for (int it = 0; it < 80 && hi - lo > 1e-13 * std::max(1.0, spin_.j); ++it) {
      if (ea < eb) {
        hi = b;
        b = a;
        eb = ea;
        a = hi - ratio * (hi - lo);
        ea = energy(lambda, a);
      } else {
        lo = a;
        a = b;
        ea = eb;
        b = lo + ratio * (hi - lo);
        eb = energy(lambda, b);
      }
    }
    const double mid = 0.5 * (lo + hi);
    return energy(lambda, mid) <= best_e ? mid : best * step;
  }

  SpinAlgebra spin_;
  bool half_integer_;
  HermitianOperator jx2_ = HermitianOperator::zero(1);
};

struct LambdaScan {
  std::vector<double> log_lambda;
  std::vector<CurvePoint> samples;
};

/// The fixed multiplier scan depends only on (j, options); it is memoized so
/// that repeated single-X queries pay only for their bisection.
std::shared_ptr<const LambdaScan> lambda_scan(const Sampler& sampler, double j, const FjOptions& options) {
  using Key = std::tuple<double, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const LambdaScan>> cache;
  const Key key{j, options.lambda_min, options.lambda_max, options.lambda_points};
  {
    const std::lock_guard lock(mutex);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto scan = std::make_shared<LambdaScan>();
  const double log_lo = std::log(options.lambda_min);
  const double log_hi = std::log(options.lambda_max);
  const auto n = static_cast<std::size_t>(options.lambda_points);
  scan->log_lambda.resize(n);
  scan->samples.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    scan->log_lambda[k] = log_lo + (log_hi - log_lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    scan->samples[k] = sampler.at(std::exp(scan->log_lambda[k]));
  }
  const std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(scan)).first->second;
}

using XY = std::pair<double, double>;

std::vector<XY> lower_hull(std::vector<XY> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<XY> hull;
  for (const XY& q : pts) {
    if (!hull.empty() && std::abs(hull.back().first - q.first) < 1e-15) continue;
    while (hull.size() >= 2) {
      const XY& o = hull[hull.size() - 2];
      const XY& a = hull.back();
      const double cross =
          (a.first - o.first) * (q.second - o.second) - (a.second - o.second) * (q.first - o.first);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }
  return hull;
}

double interpolate(const std::vector<XY>& hull, double x) {
  if (x <= hull.front().first) return hull.front().second;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    if (x <= hull[k].first) {
      const XY& lo = hull[k - 1];
      const XY& hi = hull[k];
      const double w = (x - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  return hull.back().second;
}

}  // namespace

FjCurve fj_curve(double j, std::span<const double> grid, const FjOptions& options) {
  require(j > 0.0 && std::abs(2.0 * j - std::round(2.0 * j)) < 1e-12, ErrorCode::kInvalidSpin,
          "fj_curve: j must be a positive half-integer");
  require(!grid.empty(), ErrorCode::kInvalidArgument, "fj_curve: empty grid");
  for (double x : grid) {
    require(x >= 0.0 && x <= 1.0, ErrorCode::kInvalidArgument, "fj_curve: grid values must lie in [0, 1]");
  }
  require(options.lambda_points >= 2 && options.lambda_min > 0.0 &&
              options.lambda_max > options.lambda_min,
          ErrorCode::kInvalidArgument, "fj_curve: invalid lambda grid");

  const Sampler sampler(j);
  const auto scan = lambda_scan(sampler, j, options);
  const std::vector<double>& log_lambda = scan->log_lambda;
  const std::vector<CurvePoint>& samples = scan->samples;
  std::vector<XY> points{{0.0, 0.0}, {1.0, 0.5}};
  for (const CurvePoint& p : samples) {
    if (!p.degenerate) points.emplace_back(p.x, p.v);
  }

  // Bisection in log(lambda) onto each requested X; <J_z> grows with lambda.
  std::vector<double> direct(grid.size(), -1.0);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double target = grid[q];
    if (target <= samples.front().x || target >= samples.back().x) continue;
    const auto it = std::lower_bound(samples.begin(), samples.end(), target,
                                     [](const CurvePoint& p, double t) { return p.x < t; });
    const std::size_t hi_index = static_cast<std::size_t>(it - samples.begin());
    double lo = log_lambda[hi_index - 1];
    double hi = log_lambda[hi_index];
    CurvePoint best = *it;
    for (int iter = 0; iter < 100 && hi - lo > 1e-14; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const CurvePoint p = sampler.at(std::exp(mid));
      if (std::abs(p.x - target) < std::abs(best.x - target)) best = p;
      if (std::abs(p.x - target) < 1e-13) break;
      (p.x < target ? lo : hi) = mid;
    }
    if (!best.degenerate) {
      points.emplace_back(best.x, best.v);
      if (std::abs(best.x - target) < 1e-9) direct[q] = best.v;
    }
  }

  std::vector<XY> clipped;
  for (const XY& p : points) {
    if (p.first >= 0.0 && p.first <= 1.0) clipped.push_back(p);
  }
  const std::vector<XY> hull = lower_hull(std::move(clipped));

  FjCurve curve;
  curve.j = j;
  curve.grid.assign(grid.begin(), grid.end());
  curve.values.reserve(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const double v = std::max(0.0, interpolate(hull, grid[q]));
    if (direct[q] >= 0.0 && direct[q] - v > 1e-9) curve.hull_adjusted = true;
    curve.values.push_back(v);
  }
  return curve;
}

double fj_value(double j, double x, const FjOptions& options) {
  const double grid[] = {x};
  return fj_curve(j, grid, options).values.front();
}

}  // namespace qroof
