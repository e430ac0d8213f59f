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

#include "qroof/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qroof/metrology.hpp"

namespace qroof {

namespace {

void require_same_dim(int a, int b, const char* what) {
  require(a == b, ErrorCode::kDimensionMismatch,
          std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

template <class S>
double l_value(const S& s, const RsOperators& ops) {
  const double ma = expectation(s, ops.a);
  const double mb = expectation(s, ops.b);
  const double cov = expectation(s, ops.anti) - 2.0 * ma * mb;
  const double c = expectation(s, ops.comm);
  return std::sqrt(cov * cov + c * c);
}

SpinAlgebra spin_for(const State& state) {
  return make_spin_algebra(spin_from_dim(dim_of(state)));
}

/// Cartesian product of value lists; an empty list counts as {0}.
void for_each_combination(const std::vector<std::vector<double>>& lists,
                          const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<double> current(lists.size(), 0.0);
  std::function<void(std::size_t)> rec = [&](std::size_t n) {
    if (n == lists.size()) {
      visit(current);
      return;
    }
    if (lists[n].empty()) {
      current[n] = 0.0;
      rec(n + 1);
      return;
    }
    for (double v : lists[n]) {
      current[n] = v;
      rec(n + 1);
    }
  };
  rec(0);
}

}  // namespace

BoundReport make_report(std::string name, double lhs, double rhs,
                        std::map<std::string, double> meta) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.violated = r.slack < tol::kViolation;
  r.meta = std::move(meta);
  return r;
}

RsOperators RsOperators::make(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "RsOperators");
  return RsOperators{a, b, anticommutator(a, b), i_commutator(a, b)};
}

double rs_lower_bound_L(const PureState& psi, const RsOperators& ops) {
  require_same_dim(psi.dim(), ops.a.dim(), "rs_lower_bound_L");
  return l_value(psi, ops);
}

double rs_lower_bound_L(const DensityMatrix& rho, const RsOperators& ops) {
  require_same_dim(rho.dim(), ops.a.dim(), "rs_lower_bound_L");
  return l_value(rho, ops);
}

double rs_lower_bound_L(const State& state, const HermitianOperator& a,
                        const HermitianOperator& b) {
  const RsOperators ops = RsOperators::make(a, b);
  return std::visit([&ops](const auto& s) { return rs_lower_bound_L(s, ops); }, state);
}

BoundReport check_robertson_schrodinger(const State& state, const HermitianOperator& a,
                                        const HermitianOperator& b) {
  require_same_dim(dim_of(state), a.dim(), "check_robertson_schrodinger");
  const double l = rs_lower_bound_L(state, a, b);
  const double va = variance(state, a);
  const double vb = variance(state, b);
  return make_report("robertson_schrodinger", va * vb, 0.25 * l * l,
                     {{"var_a", va}, {"var_b", vb}, {"l_rho", l}});
}

BoundReport check_improved_rs(const DensityMatrix& rho, const HermitianOperator& a,
                              const HermitianOperator& b, const OptimizerConfig& cfg) {
  require_same_dim(rho.dim(), a.dim(), "check_improved_rs");
  const RsOperators ops = RsOperators::make(a, b);
  const double l_rho = rs_lower_bound_L(rho, ops);
  const RoofResult roof = concave_roof_L(rho, a, b, cfg);

  std::map<std::string, double> meta{{"l_rho", l_rho},
                                     {"roof_value", roof.value},
                                     {"roof_converged", roof.converged ? 1.0 : 0.0},
                                     {"roof_evaluations", static_cast<double>(roof.evaluations)}};
  double best = std::max(l_rho, roof.value);
  if (rho.dim() == 2) {
    Functional f;
    f.pure = [&ops](const PureState& psi) { return rs_lower_bound_L(psi, ops); };
    const double z_line = decomposition_average(qubit_z_line_decomposition(rho), f);
    meta["z_line"] = z_line;
    best = std::max(best, z_line);
  }
  if (rho.dim() == 3) {
    const double k = eigen_partition_bound_K(rho, a, b);
    meta["k"] = k;
    best = std::max(best, k);
  }
  meta["best_witness"] = best;
  const double va = variance(rho, a);
  const double vb = variance(rho, b);
  meta["var_a"] = va;
  meta["var_b"] = vb;
  return make_report("improved_rs", va * vb, 0.25 * best * best, std::move(meta));
}

BoundReport check_improved_hr(const State& state, const HermitianOperator& a,
                              const HermitianOperator& b) {
  require_same_dim(dim_of(state), a.dim(), "check_improved_hr");
  require_same_dim(a.dim(), b.dim(), "check_improved_hr");
  const double va = variance(state, a);
  const double f = qfi(state, b);
  const double c = expectation(state, i_commutator(a, b));
  return make_report("improved_hr", va * f, c * c,
                     {{"var_a", va}, {"qfi_b", f}, {"abs_c", std::abs(c)}});
}

BoundReport check_weighted_sum(const DensityMatrix& rho, const HermitianOperator& a,
                               const HermitianOperator& b, double alpha, double beta,
                               const OptimizerConfig& cfg, bool search_witness) {
  require(alpha >= 0.0 && beta >= 0.0, ErrorCode::kInvalidArgument,
          "check_weighted_sum: alpha and beta must be nonnegative");
  require_same_dim(rho.dim(), a.dim(), "check_weighted_sum");
  require_same_dim(a.dim(), b.dim(), "check_weighted_sum");
  const double va = variance(rho, a);
  const double f = qfi(rho, b);
  const double c = std::abs(expectation(rho, i_commutator(a, b)));
  std::map<std::string, double> meta{{"var_a", va}, {"qfi_b", f}, {"abs_c", c}};
  if (search_witness) {
    const RsOperators ops = RsOperators::make(a, b);
    Functional fl;
    fl.pure = [&ops](const PureState& psi) { return rs_lower_bound_L(psi, ops); };
    const RoofResult w = optimize_roof(rho, fl, Direction::kMinimize,
                                       {singleton_partition(cfg.ancilla_dim > 0 ? cfg.ancilla_dim
                                                                                : rho.dim())},
                                       cfg);
    meta["roof_L_witness"] = w.value;
  }
  return make_report("weighted_sum", alpha * va + beta * f / 4.0, std::sqrt(alpha * beta) * c,
                     std::move(meta));
}

BoundReport bfq_bound(const State& state) {
  const SpinAlgebra s = spin_for(state);
  const double vx = variance(state, s.jx);
  const double vy = variance(state, s.jy);
  const double f = qfi(state, s.jz);
  return make_report("bfq", f, 4.0 * s.j - 4.0 * vx - 4.0 * vy,
                     {{"j", s.j}, {"var_jx", vx}, {"var_jy", vy}, {"su2_mixture_reference", 2.0 * s.j}});
}

BoundReport three_variance_bound(const State& state) {
  const SpinAlgebra s = spin_for(state);
  const double vx = variance(state, s.jx);
  const double vy = variance(state, s.jy);
  const double vz = variance(state, s.jz);
  const double f = qfi(state, s.jz);
  return make_report("three_variance", vx + vy + f / 4.0, s.j,
                     {{"j", s.j}, {"var_jx", vx}, {"var_jy", vy}, {"var_jz", vz}, {"qfi_jz", f}});
}

BoundReport su_d_bound(const State& state) {
  const int d = dim_of(state);
  const auto gens = make_su_d_generators(d);
  const double f = qfi(state, gens.front());
  double var_rest = 0.0;
  for (std::size_t n = 1; n < gens.size(); ++n) var_rest += variance(state, gens[n]);
  const double j = 0.5 * (d - 1);
  return make_report("su_d", f / 4.0 + var_rest, 4.0 * j,
                     {{"d", static_cast<double>(d)}, {"qfi_g1", f}, {"var_rest", var_rest}});
}

BoundReport spin_length_bound(const State& state) {
  const SpinAlgebra s = spin_for(state);
  require(s.j > 0.0, ErrorCode::kInvalidSpin, "spin_length_bound: j must be positive");
  const double mz = expectation(state, s.jz);
  const double x = std::min(std::abs(mz) / s.j, 1.0);
  const double fj = fj_value(s.j, x);
  const double f = qfi(state, s.jx);
  return make_report("spin_length", f / 4.0, s.j * fj,
                     {{"j", s.j}, {"mean_jz", mz}, {"x", x}, {"f_j", fj}, {"qfi_jx", f}});
}

double minvar_constrained(const std::vector<HermitianOperator>& a_ops,
                          const std::vector<HermitianOperator>& b_ops,
                          std::span<const double> targets, const MultiplierGrid& grid) {
  require(!a_ops.empty(), ErrorCode::kInvalidArgument, "minvar_constrained: need A operators");
  require(targets.size() == b_ops.size(), ErrorCode::kInvalidArgument,
          "minvar_constrained: one target per constraint operator");
  require(grid.lambdas.size() <= a_ops.size() && grid.mus.size() <= b_ops.size(),
          ErrorCode::kInvalidArgument, "minvar_constrained: more multiplier lists than operators");
  const int d = a_ops.front().dim();
  for (const auto& op : a_ops) require_same_dim(op.dim(), d, "minvar_constrained");
  for (const auto& op : b_ops) require_same_dim(op.dim(), d, "minvar_constrained");

  std::vector<std::vector<double>> lists(a_ops.size() + b_ops.size());
  std::copy(grid.lambdas.begin(), grid.lambdas.end(), lists.begin());
  std::copy(grid.mus.begin(), grid.mus.end(), lists.begin() + static_cast<long>(a_ops.size()));

  HermitianOperator base = HermitianOperator::zero(d);
  for (const auto& op : a_ops) base = base + op.squared();

  struct Point {
    std::vector<double> b;
    double var_sum;
  };
  std::vector<Point> points;
  for_each_combination(lists, [&](const std::vector<double>& m) {
    HermitianOperator h = base;
    for (std::size_t n = 0; n < a_ops.size(); ++n) h = h - m[n] * a_ops[n];
    for (std::size_t n = 0; n < b_ops.size(); ++n) h = h - m[a_ops.size() + n] * b_ops[n];
    const GroundState g = ground_state(h);
    if (g.degenerate) return;
    Point p;
    p.var_sum = 0.0;
    for (const auto& op : a_ops) p.var_sum += variance(g.state, op);
    for (const auto& op : b_ops) p.b.push_back(expectation(g.state, op));
    points.push_back(std::move(p));
  });
  require(!points.empty(), ErrorCode::kInfeasible,
          "minvar_constrained: every grid point has a degenerate ground state");

  if (b_ops.empty()) {
    double best = points.front().var_sum;
    for (const auto& p : points) best = std::min(best, p.var_sum);
    return best;
  }

  if (b_ops.size() == 1) {
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : points) xy.emplace_back(p.b[0], p.var_sum);
    std::sort(xy.begin(), xy.end());
    const double t = targets[0];
    require(t >= xy.front().first - 1e-6 && t <= xy.back().first + 1e-6, ErrorCode::kInfeasible,
            "minvar_constrained: target outside the range reached by the multiplier grid");
    // Lower convex hull by monotone chain.
    std::vector<std::pair<double, double>> hull;
    for (const auto& q : xy) {
      while (hull.size() >= 2) {
        const auto& o = hull[hull.size() - 2];
        const auto& a = hull.back();
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
    if (t <= hull.front().first) return hull.front().second;
    if (t >= hull.back().first) return hull.back().second;
    for (std::size_t k = 1; k < hull.size(); ++k) {
      if (t <= hull[k].first) {
        const auto& lo = hull[k - 1];
        const auto& hi = hull[k];
        const double w = (t - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
      }
    }
    return hull.back().second;
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    bool hit = true;
    for (std::size_t n = 0; n < targets.size(); ++n) hit = hit && std::abs(p.b[n] - targets[n]) <= 1e-6;
    if (hit) best = std::min(best, p.var_sum);
  }
  require(std::isfinite(best), ErrorCode::kInfeasible,
          "minvar_constrained: no grid point meets all targets within 1e-6");
  return best;
}

}  // namespace qroof
