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

#include "qroof/serialization.hpp"

#include <string>
#include <vector>

namespace qroof {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedSpec, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<double> number_array(const Json& j, const char* key, std::size_t expected) {
  const Json& a = field(j, key);
  if (!a.is_array() || a.size() != expected) {
    malformed(std::string("field \"") + key + "\" must be an array of " + std::to_string(expected) +
              " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const Json& v : a) {
    if (!v.is_number()) malformed(std::string("field \"") + key + "\" holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

int dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 100000) {
    malformed("\"dim\" must be a positive integer");
  }
  return static_cast<int>(d.get<long long>());
}

Json vector_to_json(const Vector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    re.push_back(v(k).real());
    im.push_back(v(k).imag());
  }
  return Json{{"dim", v.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorCode::kInvalidArgument, "matrix_to_json: matrix must be square");
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const Json& j) {
  const int d = dim_field(j);
  const auto n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const auto re = number_array(j, "re", n);
  std::vector<double> im(n, 0.0);
  if (j.contains("im")) im = number_array(j, "im", n);
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const auto k = static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c);
      m(r, c) = Complex(re[k], im[k]);
    }
  }
  return m;
}

Json state_to_json(const State& state) {
  if (const auto* psi = std::get_if<PureState>(&state)) {
    Json j = vector_to_json(psi->amplitudes());
    j["kind"] = "pure";
    return j;
  }
  Json j = matrix_to_json(std::get<DensityMatrix>(state).matrix());
  j["kind"] = "mixed";
  return j;
}

State state_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) malformed("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "pure") {
    const int d = dim_field(j);
    const auto re = number_array(j, "re", static_cast<std::size_t>(d));
    std::vector<double> im(static_cast<std::size_t>(d), 0.0);
    if (j.contains("im")) im = number_array(j, "im", static_cast<std::size_t>(d));
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]);
    return PureState(v);
  }
  if (k == "mixed") return DensityMatrix(matrix_from_json(j));
  malformed("\"kind\" must be \"pure\" or \"mixed\"");
}

Json operator_to_json(const HermitianOperator& op) { return matrix_to_json(op.matrix()); }

HermitianOperator operator_from_json(const Json& j) { return HermitianOperator(matrix_from_json(j)); }

void to_json(Json& j, const BoundReport& r) {
  Json meta = Json::object();
  for (const auto& [key, value] : r.meta) meta[key] = finite_or_null(value);
  j = Json{{"name", r.name},
           {"lhs", finite_or_null(r.lhs)},
           {"rhs", finite_or_null(r.rhs)},
           {"slack", finite_or_null(r.slack)},
           {"violated", r.violated},
           {"meta", std::move(meta)}};
}

void to_json(Json& j, const Decomposition& d) {
  j = Json::array();
  for (const auto& c : d.components) j.push_back(Json{{"p", c.weight}, {"state", state_to_json(c.state)}});
}

void to_json(Json& j, const RoofResult& r) {
  j = Json{{"value", r.value},
           {"converged", r.converged},
           {"evaluations", r.evaluations},
           {"partition_index", r.partition_index},
           {"decomposition", r.decomposition}};
}

void to_json(Json& j, const CvUsefulness& u) {
  j = Json{{"qfi_x_plus", u.qfi_x_plus},
           {"qfi_x_minus", u.qfi_x_minus},
           {"qfi_p_plus", u.qfi_p_plus},
           {"qfi_p_minus", u.qfi_p_minus},
           {"more_useful_than_p_nonnegative", u.more_useful_than_p_nonnegative}};
}

void to_json(Json& j, const TwoModeReport& r) {
  j = Json{{"var_x_plus", r.var_x_plus},
           {"var_p_minus", r.var_p_minus},
           {"duan_lhs", r.duan_lhs},
           {"duan_rhs", r.duan_rhs},
           {"duan_violated", r.duan_violated},
           {"usefulness", r.usefulness},
           {"relation_rhs", r.relation_rhs},
           {"relation_slack", r.relation_slack},
           {"relation_indeterminate", r.relation_indeterminate}};
}

void to_json(Json& j, const TwoSpinReport& r) {
  j = Json{{"j1", r.j1},
           {"j2", r.j2},
           {"crit_lhs", r.crit_lhs},
           {"crit_rhs", r.crit_rhs},
           {"entangled", r.entangled},
           {"fq_sum", r.fq_sum},
           {"sep3f_threshold", r.sep3f_threshold},
           {"more_useful_than_product_coherent", r.more_useful_than_product_coherent},
           {"combined_lhs", r.combined_lhs},
           {"combined_rhs", r.combined_rhs},
           {"combined_slack", r.combined_slack}};
}

void to_json(Json& j, const PlanarSqueezedResult& r) {
  j = Json{{"j", r.j},
           {"c_j", r.c_j},
           {"var_sum", r.var_sum},
           {"mean_spin", {r.mean_spin.x(), r.mean_spin.y(), r.mean_spin.z()}},
           {"iterations", r.history.empty() ? 0 : r.history.size() - 1},
           {"state", state_to_json(State(r.state))}};
}

void to_json(Json& j, const FjCurve& c) {
  j = Json{{"j", c.j}, {"grid", c.grid}, {"values", c.values}, {"hull_adjusted", c.hull_adjusted}};
}

void to_json(Json& j, const EstimationReport& r) {
  j = Json{{"qfi", r.qfi}, {"cramer_rao", r.cramer_rao}, {"repetitions", r.repetitions}};
  if (r.error_propagation) j["error_propagation"] = *r.error_propagation;
}

}  // namespace qroof
