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

#include "qroof/cli/specs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qroof/entanglement.hpp"
#include "qroof/states_lab.hpp"

namespace qroof::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedSpec, what); }

double number(const Json& spec, const char* key, std::optional<double> fallback = std::nullopt) {
  if (!spec.contains(key)) {
    if (fallback) return *fallback;
    malformed(std::string("state spec: missing \"") + key + "\"");
  }
  const Json& v = spec.at(key);
  if (!v.is_number()) malformed(std::string("state spec: \"") + key + "\" must be a number");
  return v.get<double>();
}

int integer(const Json& spec, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!spec.contains(key)) {
    if (fallback) return *fallback;
    malformed(std::string("state spec: missing \"") + key + "\"");
  }
  const Json& v = spec.at(key);
  if (!v.is_number_integer()) malformed(std::string("state spec: \"") + key + "\" must be an integer");
  return v.get<int>();
}

/// A complex number written as [re, im] or as a plain real number.
Complex complex_value(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  malformed("state spec: complex numbers are written as [re, im]");
}

Complex complex_field(const Json& spec, const char* key) {
  if (!spec.contains(key)) malformed(std::string("state spec: missing \"") + key + "\"");
  return complex_value(spec.at(key));
}

const Json& array_field(const Json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_array() || spec.at(key).empty()) {
    malformed(std::string("state spec: \"") + key + "\" must be a non-empty array");
  }
  return spec.at(key);
}

int exact_sqrt(int n, const std::string& name) {
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) malformed("operator \"" + name + "\" needs a two-party state of square dimension");
  return r;
}

HermitianOperator pauli(char axis) {
  const auto s = make_spin_algebra(0.5);
  const auto& op = axis == 'x' ? s.jx : axis == 'y' ? s.jy : s.jz;
  return 2.0 * op;
}

const HermitianOperator& spin_component(const SpinAlgebra& s, char axis) {
  return axis == 'x' ? s.jx : axis == 'y' ? s.jy : s.jz;
}

/// A single operator name without '+' or '-' combinations.
HermitianOperator atom(const std::string& name, int dim) {
  if (name.size() == 2 && name[0] == 'j' && (name[1] == 'x' || name[1] == 'y' || name[1] == 'z')) {
    return spin_component(make_spin_algebra(spin_from_dim(dim)), name[1]);
  }
  if (name.size() == 2 && name[0] == 's' && (name[1] == 'x' || name[1] == 'y' || name[1] == 'z')) {
    if (dim != 2) malformed("operator \"" + name + "\" needs a qubit state");
    return pauli(name[1]);
  }
  if (name.rfind("sxy:", 0) == 0) {
    if (dim != 2) malformed("operator \"" + name + "\" needs a qubit state");
    double alpha = 0.0;
    try {
      alpha = std::stod(name.substr(4));
    } catch (const std::exception&) {
      malformed("operator \"" + name + "\": angle is not a number");
    }
    return std::cos(alpha) * pauli('x') + std::sin(alpha) * pauli('y');
  }
  if (name.size() >= 2 && name[0] == 'g') {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      malformed("unknown operator \"" + name + "\"");
    }
    const auto gens = make_su_d_generators(dim);
    if (n < 1 || n > static_cast<int>(gens.size())) malformed("operator \"" + name + "\" out of range");
    return gens[static_cast<std::size_t>(n - 1)];
  }
  if (name == "x" || name == "p" || name == "n") {
    const FockAlgebra f = make_fock_algebra(dim);
    return name == "x" ? f.x : name == "p" ? f.p : f.number;
  }
  if (name == "x1" || name == "p1" || name == "x2" || name == "p2") {
    const int c = exact_sqrt(dim, name);
    const TwoModeOperators q = make_two_mode_operators(make_fock_algebra(c));
    if (name == "x1") return q.x1;
    if (name == "p1") return q.p1;
    if (name == "x2") return q.x2;
    return q.p2;
  }
  if (name.size() == 3 && name[0] == 'j' && (name[2] == '1' || name[2] == '2')) {
    const int d = exact_sqrt(dim, name);
    const SpinAlgebra s = make_spin_algebra(spin_from_dim(d));
    const auto id = HermitianOperator::identity(d);
    const HermitianOperator& op = spin_component(s, name[1]);
    return name[2] == '1' ? tensor(op, id) : tensor(id, op);
  }
  throw Error(ErrorCode::kUnknownName, "unknown operator \"" + name + "\"");
}

HermitianOperator named_operator(const std::string& name, int dim) {
  if (name.find(':') != std::string::npos) return atom(name, dim);
  HermitianOperator total = HermitianOperator::zero(dim);
  double sign = 1.0;
  std::size_t start = 0;
  bool any = false;
  for (std::size_t k = 0; k <= name.size(); ++k) {
    if (k == name.size() || name[k] == '+' || name[k] == '-') {
      const std::string term = name.substr(start, k - start);
      if (term.empty()) {
        if (k != 0) malformed("malformed operator expression \"" + name + "\"");
      } else {
        total = total + sign * atom(term, dim);
        any = true;
      }
      if (k < name.size()) sign = name[k] == '+' ? 1.0 : -1.0;
      start = k + 1;
    }
  }
  if (!any) malformed("empty operator expression");
  return total;
}

std::vector<PolarAngles> directions(const Json& v) {
  if (!v.is_array() || v.empty()) malformed("state spec: \"directions\" must be a non-empty array");
  std::vector<PolarAngles> out;
  for (const Json& d : v) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
      malformed("state spec: a direction is written as [theta, phi]");
    }
    out.push_back({d[0].get<double>(), d[1].get<double>()});
  }
  return out;
}

}  // namespace

Json load_spec_text(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorCode::kIo, "cannot read spec file " + text.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    malformed(std::string("spec is not valid JSON: ") + e.what());
  }
}

State build_state(const Json& spec, int default_cutoff) {
  if (!spec.is_object() || !spec.contains("constructor") || !spec.at("constructor").is_string()) {
    malformed("state spec: an object with a string \"constructor\" is required");
  }
  const std::string c = spec.at("constructor").get<std::string>();
  const int cutoff = integer(spec, "cutoff", default_cutoff);

  if (c == "inline") {
    if (!spec.contains("state")) malformed("state spec: inline constructor needs \"state\"");
    return state_from_json(spec.at("state"));
  }
  if (c == "coherent") return coherent_state(complex_field(spec, "alpha"), cutoff);
  if (c == "product_coherent") {
    return tensor(coherent_state(complex_field(spec, "alpha1"), cutoff),
                  coherent_state(complex_field(spec, "alpha2"), cutoff));
  }
  if (c == "tmsv") return two_mode_squeezed_vacuum(number(spec, "r"), cutoff);
  if (c == "spin_coherent") {
    const SpinAlgebra s = make_spin_algebra(number(spec, "j"));
    return spin_coherent_state_polar(s, number(spec, "theta", 0.0), number(spec, "phi", 0.0));
  }
  if (c == "spin_squeezed") return spin_squeezed_state(number(spec, "j"), number(spec, "lambda"));
  if (c == "planar_squeezed") return planar_squeezed_state(number(spec, "j")).state;
  if (c == "singlet") return singlet_state(number(spec, "j"));
  if (c == "random") {
    const int dim = integer(spec, "dim");
    RandomStateConfig cfg{dim, integer(spec, "rank", dim), 0};
    if (spec.contains("seed")) {
      if (!spec.at("seed").is_number_unsigned()) malformed("state spec: \"seed\" must be a nonnegative integer");
      cfg.seed = spec.at("seed").get<std::uint64_t>();
    }
    if (cfg.dim < 1 || cfg.rank < 1 || cfg.rank > cfg.dim) malformed("state spec: need 1 <= rank <= dim");
    return random_density_matrix(cfg);
  }
  if (c == "maximally_mixed") {
    const int dim = integer(spec, "dim");
    if (dim < 1) malformed("state spec: \"dim\" must be positive");
    return DensityMatrix::maximally_mixed(dim);
  }
  if (c == "pm_z") return pm_z_state(number(spec, "j"));
  if (c == "coherent_mixture") {
    std::vector<CoherentTerm> terms;
    for (const Json& t : array_field(spec, "terms")) {
      CoherentTerm term;
      term.weight = number(t, "p");
      for (const Json& a : array_field(t, "alphas")) term.alphas.push_back(complex_value(a));
      terms.push_back(std::move(term));
    }
    return coherent_mixture(terms, cutoff);
  }
  if (c == "spin_coherent_mixture") {
    std::vector<double> js;
    for (const Json& j : array_field(spec, "js")) {
      if (!j.is_number()) malformed("state spec: \"js\" must hold numbers");
      js.push_back(j.get<double>());
    }
    std::vector<SpinCoherentTerm> terms;
    for (const Json& t : array_field(spec, "terms")) {
      if (!t.contains("directions")) malformed("state spec: mixture term needs \"directions\"");
      terms.push_back({number(t, "p"), directions(t.at("directions"))});
    }
    return spin_coherent_mixture(js, terms);
  }
  throw Error(ErrorCode::kUnknownName, "unknown state constructor \"" + c + "\"");
}

std::vector<HermitianOperator> build_operators(const Json& spec, int dim) {
  std::vector<HermitianOperator> out;
  if (spec.is_string()) {
    std::stringstream ss(spec.get<std::string>());
    std::string name;
    while (std::getline(ss, name, ',')) out.push_back(named_operator(name, dim));
  } else if (spec.is_array()) {
    for (const Json& e : spec) {
      if (e.is_string()) {
        out.push_back(named_operator(e.get<std::string>(), dim));
      } else {
        out.push_back(operator_from_json(e));
      }
    }
  } else {
    malformed("operator spec must be an array or a comma-separated string");
  }
  for (const auto& op : out) {
    if (op.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "operator dimension " + std::to_string(op.dim()) +
                                                     " does not match state dimension " +
                                                     std::to_string(dim));
    }
  }
  return out;
}

}  // namespace qroof::cli
