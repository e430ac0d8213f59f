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

#include "qroof/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qroof/cli/specs.hpp"
#include "qroof/entanglement.hpp"
#include "qroof/metrology.hpp"
#include "qroof/sampling.hpp"
#include "qroof/states_lab.hpp"

namespace qroof::cli {

namespace {

constexpr double kImprovement = 1e-6;

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header) { row_strings(header); }

  void row(std::initializer_list<double> values) {
    std::vector<std::string> cells;
    for (double v : values) cells.push_back(format_number(v));
    row_strings(cells);
  }

  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) text_ += ',';
      text_ += cells[k];
    }
    text_ += '\n';
  }

  std::string str() const { return text_; }

 private:
  std::string text_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

HermitianOperator pick(const std::vector<HermitianOperator>& ops, std::size_t k, const char* check) {
  require(ops.size() > k, ErrorCode::kInvalidArgument,
          std::string("check ") + check + ": needs at least " + std::to_string(k + 1) + " operators");
  return ops[k];
}

std::vector<HermitianOperator> operators_for(const CheckRequest& r, int dim, const char* fallback) {
  return build_operators(r.ops ? *r.ops : Json(fallback), dim);
}

int two_party_side(int dim) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  require(d * d == dim, ErrorCode::kDimensionMismatch,
          "two-party check: state dimension is not a square; pass --j1 and --j2");
  return d;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::kIo, "cannot open output file " + cfg.out);
  f << text;
  f.flush();
  require(static_cast<bool>(f), ErrorCode::kIo, "failed writing output file " + cfg.out);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    require(res.ec == std::errc() && res.ptr == item.data() + item.size(), ErrorCode::kInvalidArgument,
            std::string(what) + ": \"" + item + "\" is not a number");
    out.push_back(v);
  }
  require(!out.empty(), ErrorCode::kInvalidArgument, std::string(what) + ": empty list");
  return out;
}

}  // namespace

OptimizerConfig RunConfig::optimizer() const {
  OptimizerConfig c;
  c.seed = seed;
  c.restarts = restarts;
  c.local_steps = local_steps;
  c.ancilla_dim = ancilla;
  validate(c);
  return c;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string figure_rs(const RunConfig& cfg) {
  require(cfg.samples >= 1, ErrorCode::kInvalidArgument, "figure-rs: --samples must be >= 1");
  const SpinAlgebra s = make_spin_algebra(1.0);
  const RsOperators ops = RsOperators::make(s.jx, s.jy);

  struct Row {
    std::uint64_t seed;
    double l_rho, k, roof, product;
    bool converged;
  };
  std::vector<Row> rows;
  Rng seeds = make_stream(cfg.seed, {0x72735f666967ULL});
  for (int n = 0; n < cfg.samples; ++n) {
    const std::uint64_t seed = seeds();
    const DensityMatrix rho = random_density_matrix({3, 3, seed});
    OptimizerConfig opt = cfg.optimizer();
    opt.seed = seed;
    const RoofResult roof = concave_roof_L(rho, s.jx, s.jy, opt);
    rows.push_back({seed, rs_lower_bound_L(rho, ops), eigen_partition_bound_K(rho, s.jx, s.jy), roof.value,
                    variance(rho, s.jx) * variance(rho, s.jy), roof.converged});
  }

  int k_improved = 0;
  int roof_improved = 0;
  int roof_below_k = 0;
  for (const Row& r : rows) {
    k_improved += r.k > r.l_rho + kImprovement;
    roof_improved += r.roof > r.k + kImprovement;
    roof_below_k += r.roof < r.k - 1e-9;
  }
  const auto slack = [](const Row& r, double bound) { return r.product - 0.25 * bound * bound; };

  if (cfg.format == Format::kJson) {
    Json out{{"rows", Json::array()}};
    for (std::size_t n = 0; n < rows.size(); ++n) {
      const Row& r = rows[n];
      out["rows"].push_back(Json{{"sample", n},
                                 {"seed", r.seed},
                                 {"l_rho", r.l_rho},
                                 {"k", r.k},
                                 {"concave_roof", r.roof},
                                 {"var_product", r.product},
                                 {"lhs_minus_rhs_rs", slack(r, r.l_rho)},
                                 {"lhs_minus_rhs_k", slack(r, r.k)},
                                 {"lhs_minus_rhs_concave_roof", slack(r, r.roof)},
                                 {"converged", r.converged}});
    }
    out["summary"] = Json{{"samples", rows.size()},
                          {"k_improved", k_improved},
                          {"roof_improved_over_k", roof_improved},
                          {"roof_below_k", roof_below_k}};
    return dump(out);
  }

  CsvWriter csv({"sample", "seed", "l_rho", "k", "concave_roof", "var_product", "lhs_minus_rhs_rs",
                 "lhs_minus_rhs_k", "lhs_minus_rhs_concave_roof", "converged"});
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const Row& r = rows[n];
    csv.row_strings({std::to_string(n), std::to_string(r.seed), format_number(r.l_rho), format_number(r.k),
                     format_number(r.roof), format_number(r.product), format_number(slack(r, r.l_rho)),
                     format_number(slack(r, r.k)), format_number(slack(r, r.roof)),
                     r.converged ? "1" : "0"});
  }
  csv.row_strings({"summary", "samples=" + std::to_string(rows.size()),
                   "k_improved=" + std::to_string(k_improved),
                   "roof_improved_over_k=" + std::to_string(roof_improved),
                   "roof_below_k=" + std::to_string(roof_below_k)});
  return csv.str();
}

std::string figure_planar(const RunConfig& cfg, std::span<const double> js) {
  require(!js.empty(), ErrorCode::kInvalidArgument, "figure-planar: empty j list");
  Json rows = Json::array();
  CsvWriter csv({"j", "c_j", "qfi_jz", "b_fq", "su2_reference"});
  for (double j : js) {
    const PlanarSqueezedResult p = planar_squeezed_state(j);
    const BoundReport r = bfq_bound(State(p.state));
    csv.row({j, p.c_j, r.lhs, r.rhs, 2.0 * j});
    rows.push_back(Json{{"j", j}, {"c_j", p.c_j}, {"qfi_jz", r.lhs}, {"b_fq", r.rhs}, {"su2_reference", 2.0 * j}});
  }
  return cfg.format == Format::kJson ? dump(Json{{"rows", rows}}) : csv.str();
}

std::string figure_spinsq(const RunConfig& cfg, double j, std::span<const double> lambdas) {
  require(!lambdas.empty(), ErrorCode::kInvalidArgument, "figure-spinsq: empty lambda grid");
  Json rows = Json::array();
  CsvWriter csv({"lambda", "qfi_jz", "b_fq", "su2_reference"});
  for (double lambda : lambdas) {
    const BoundReport r = bfq_bound(State(spin_squeezed_state(j, lambda)));
    csv.row({lambda, r.lhs, r.rhs, 2.0 * j});
    rows.push_back(Json{{"lambda", lambda}, {"qfi_jz", r.lhs}, {"b_fq", r.rhs}, {"su2_reference", 2.0 * j}});
  }
  return cfg.format == Format::kJson ? dump(Json{{"j", j}, {"rows", rows}}) : csv.str();
}

BoundReport run_check(const CheckRequest& r, const RunConfig& cfg) {
  const State state = build_state(r.state, cfg.cutoff);
  const int dim = dim_of(state);
  const std::string& n = r.name;

  if (n == "rs" || n == "improved-rs" || n == "improved-hr" || n == "weighted-sum") {
    const auto ops = operators_for(r, dim, "jx,jy");
    const HermitianOperator a = pick(ops, 0, n.c_str());
    const HermitianOperator b = pick(ops, 1, n.c_str());
    if (n == "rs") return check_robertson_schrodinger(state, a, b);
    if (n == "improved-hr") return check_improved_hr(state, a, b);
    if (n == "improved-rs") return check_improved_rs(to_density(state), a, b, cfg.optimizer());
    return check_weighted_sum(to_density(state), a, b, r.alpha, r.beta, cfg.optimizer());
  }
  if (n == "bfq") return bfq_bound(state);
  if (n == "su-d") return su_d_bound(state);
  if (n == "three-variance") return three_variance_bound(state);
  if (n == "spin-length") return spin_length_bound(state);
  if (n == "duan" || n == "coherent-usefulness") {
    const FockAlgebra fock = make_fock_algebra(two_party_side(dim));
    if (n == "coherent-usefulness") {
      const CvUsefulness u = coherent_mixture_usefulness(state, fock);
      const double top = std::max({u.qfi_x_plus, u.qfi_x_minus, u.qfi_p_plus, u.qfi_p_minus});
      return make_report("coherent_usefulness", 4.0, top,
                         {{"qfi_x_plus", u.qfi_x_plus},
                          {"qfi_x_minus", u.qfi_x_minus},
                          {"qfi_p_plus", u.qfi_p_plus},
                          {"qfi_p_minus", u.qfi_p_minus}});
    }
    const TwoModeReport t = duan_report(state, fock);
    return make_report("duan", t.duan_lhs, t.duan_rhs,
                       {{"var_x_plus", t.var_x_plus},
                        {"var_p_minus", t.var_p_minus},
                        {"qfi_p_plus", t.usefulness.qfi_p_plus},
                        {"qfi_x_minus", t.usefulness.qfi_x_minus},
                        {"relation_rhs", t.relation_rhs},
                        {"relation_slack", t.relation_slack},
                        {"relation_indeterminate", t.relation_indeterminate ? 1.0 : 0.0},
                        {"more_useful_than_p_nonnegative", t.usefulness.more_useful_than_p_nonnegative ? 1.0 : 0.0}});
  }
  if (n == "two-spin") {
    double j1 = 0.0;
    double j2 = 0.0;
    if (r.j1 && r.j2) {
      j1 = *r.j1;
      j2 = *r.j2;
    } else {
      j1 = j2 = spin_from_dim(two_party_side(dim));
    }
    const TwoSpinReport t = two_spin_report(
        state, j1, j2, r.minus_variance ? SignPattern::kMinusVariancePlusQfi : SignPattern::kPlusVarianceMinusQfi);
    return make_report("two_spin", t.crit_lhs, t.crit_rhs,
                       {{"j1", j1},
                        {"j2", j2},
                        {"fq_sum", t.fq_sum},
                        {"sep3f_threshold", t.sep3f_threshold},
                        {"more_useful_than_product_coherent", t.more_useful_than_product_coherent ? 1.0 : 0.0},
                        {"combined_lhs", t.combined_lhs},
                        {"combined_rhs", t.combined_rhs},
                        {"combined_slack", t.combined_slack}});
  }
  if (n == "vxyz") {
    const int parties = r.parties.value_or(2);
    require(parties >= 1, ErrorCode::kInvalidArgument, "check vxyz: --parties must be >= 1");
    double j = 0.0;
    if (r.j) {
      j = *r.j;
    } else {
      const int d = static_cast<int>(std::lround(std::pow(static_cast<double>(dim), 1.0 / parties)));
      j = spin_from_dim(d);
    }
    return vxyz_criterion(to_density(state), parties, j, cfg.optimizer());
  }
  throw Error(ErrorCode::kUnknownName, "unknown check \"" + n + "\"");
}

RoofResult run_roof(const Json& state_spec, const Json& ops_spec, Direction direction,
                    RoofFunctional functional, const RunConfig& cfg) {
  const State state = build_state(state_spec, cfg.cutoff);
  const DensityMatrix rho = to_density(state);
  const auto ops = build_operators(ops_spec, rho.dim());
  require(!ops.empty(), ErrorCode::kInvalidArgument, "roof: no operators");
  const OptimizerConfig opt = cfg.optimizer();
  if (functional == RoofFunctional::kVarianceSum) {
    return direction == Direction::kMinimize ? roof_sum_I(rho, ops, opt) : roof_sum_R(rho, ops, opt);
  }
  require(ops.size() == 2, ErrorCode::kInvalidArgument, "roof: the rs-bound functional needs two operators");
  if (direction == Direction::kMaximize) return concave_roof_L(rho, ops[0], ops[1], opt);
  const RsOperators rs = RsOperators::make(ops[0], ops[1]);
  Functional f;
  f.pure = [&rs](const PureState& psi) { return rs_lower_bound_L(psi, rs); };
  return optimize_roof(rho, f, Direction::kMinimize,
                       {singleton_partition(opt.ancilla_dim > 0 ? opt.ancilla_dim : rho.dim())}, opt);
}

Json state_factory(const Json& spec, const RunConfig& cfg) {
  return state_to_json(build_state(spec, cfg.cutoff));
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qroof: quantum Fisher information, variance roofs and uncertainty bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--seed", cfg.seed, "Base seed for all random draws")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Number of random samples")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: standard output)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--cutoff", cfg.cutoff, "Fock cutoff per mode")->capture_default_str();
  app.add_option("--restarts", cfg.restarts, "Optimizer restarts per partition")->capture_default_str();
  app.add_option("--local-steps", cfg.local_steps, "Optimizer local steps per restart")->capture_default_str();
  app.add_option("--ancilla", cfg.ancilla, "Ancilla dimension (0: system dimension)")->capture_default_str();

  auto* fig_rs = app.add_subcommand("figure-rs", "Random qutrits: RS, K and concave-roof bounds");

  auto* fig_planar = app.add_subcommand("figure-planar", "Planar-squeezed states: F_Q vs B_FQ");
  std::string planar_js = "0.5,1,1.5,2,2.5,3,3.5,4,4.5,5,5.5,6,6.5,7,7.5,8,8.5,9,9.5,10";
  fig_planar->add_option("--js", planar_js, "Comma-separated spins")->capture_default_str();

  auto* fig_spinsq = app.add_subcommand("figure-spinsq", "Spin-squeezed states: F_Q vs B_FQ over lambda");
  double spinsq_j = 50.0;
  double lambda_min = 1e-2;
  double lambda_max = 1e6;
  int lambda_points = 41;
  fig_spinsq->add_option("--j", spinsq_j, "Spin")->capture_default_str();
  fig_spinsq->add_option("--lambda-min", lambda_min)->capture_default_str();
  fig_spinsq->add_option("--lambda-max", lambda_max)->capture_default_str();
  fig_spinsq->add_option("--points", lambda_points, "Logarithmic grid points")->capture_default_str();

  auto* check = app.add_subcommand("check", "Evaluate one inequality; prints a JSON report");
  CheckRequest req;
  std::string state_text;
  std::string ops_text;
  double j1 = -1.0;
  double j2 = -1.0;
  double check_j = -1.0;
  int parties = 0;
  check->add_option("name", req.name, "Check name")->required();
  check->add_option("--state", state_text, "State spec (JSON or @file)")->required();
  check->add_option("--ops", ops_text, "Operator spec (JSON array or comma-separated names)");
  check->add_option("--alpha", req.alpha)->capture_default_str();
  check->add_option("--beta", req.beta)->capture_default_str();
  check->add_option("--j1", j1);
  check->add_option("--j2", j2);
  check->add_option("--j", check_j);
  check->add_option("--parties", parties);
  check->add_flag("--minus-variance", req.minus_variance, "two-spin: Var(J1 - J2) with F_Q[J1 + J2]");

  auto* roof = app.add_subcommand("roof", "Optimize a convex or concave roof; prints a JSON result");
  std::string roof_state;
  std::string roof_ops = "jx";
  std::string direction = "min";
  std::string functional = "variance";
  roof->add_option("--state", roof_state, "State spec (JSON or @file)")->required();
  roof->add_option("--ops", roof_ops, "Operator spec")->capture_default_str();
  roof->add_option("--direction", direction)->check(CLI::IsMember({"min", "max"}))->capture_default_str();
  roof->add_option("--functional", functional, "variance or rs-bound")
      ->check(CLI::IsMember({"variance", "rs-bound"}))
      ->capture_default_str();

  auto* factory = app.add_subcommand("state-factory", "Build a state from a spec; prints it as JSON");
  std::string factory_state;
  factory->add_option("--state", factory_state, "State spec (JSON or @file)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << Json{{"error", {{"code", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 64;
  }

  try {
    cfg.format = format == "json" ? Format::kJson : Format::kCsv;
    std::string text;
    if (*fig_rs) {
      text = figure_rs(cfg);
    } else if (*fig_planar) {
      const auto js = parse_list(planar_js, "--js");
      text = figure_planar(cfg, js);
    } else if (*fig_spinsq) {
      require(lambda_points >= 2 && lambda_min > 0.0 && lambda_max > lambda_min, ErrorCode::kInvalidArgument,
              "figure-spinsq: need 0 < lambda-min < lambda-max and at least 2 points");
      std::vector<double> grid;
      for (int k = 0; k < lambda_points; ++k) {
        const double t = static_cast<double>(k) / (lambda_points - 1);
        grid.push_back(std::exp(std::log(lambda_min) + t * (std::log(lambda_max) - std::log(lambda_min))));
      }
      grid.back() = lambda_max;
      text = figure_spinsq(cfg, spinsq_j, grid);
    } else if (*check) {
      req.state = load_spec_text(state_text);
      if (!ops_text.empty()) {
        req.ops = (ops_text.front() == '[' || ops_text.front() == '@') ? load_spec_text(ops_text) : Json(ops_text);
      }
      if (j1 >= 0.0) req.j1 = j1;
      if (j2 >= 0.0) req.j2 = j2;
      if (check_j >= 0.0) req.j = check_j;
      if (parties > 0) req.parties = parties;
      text = dump(Json(run_check(req, cfg)));
    } else if (*roof) {
      const Json ops = (roof_ops.front() == '[' || roof_ops.front() == '@') ? load_spec_text(roof_ops) : Json(roof_ops);
      const RoofResult res =
          run_roof(load_spec_text(roof_state), ops, direction == "min" ? Direction::kMinimize : Direction::kMaximize,
                   functional == "variance" ? RoofFunctional::kVarianceSum : RoofFunctional::kRsBound, cfg);
      text = dump(Json(res));
    } else if (*factory) {
      text = dump(state_factory(load_spec_text(factory_state), cfg));
    }
    write_output(cfg, text, out);
    return 0;
  } catch (const Error& e) {
    err << Json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 3;
  }
}

}  // namespace qroof::cli
