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

// JSON exchange formats.
//
//   matrix:   {"dim": n, "re": [row-major n*n], "im": [row-major n*n]}
//   state:    matrix fields plus "kind": "mixed", or for "kind": "pure" the
//             amplitude vector in "re"/"im" (length n)
//   report:   {"name", "lhs", "rhs", "slack", "violated", "meta": {...}}
//   roof:     {"value", "converged", "evaluations", "partition_index",
//              "decomposition": [{"p", "state"}]}
//
// Readers throw Error(kMalformedSpec) on missing fields or wrong sizes.

#pragma once

#include <nlohmann/json.hpp>

#include "qroof/bounds.hpp"
#include "qroof/entanglement.hpp"
#include "qroof/metrology.hpp"
#include "qroof/quantum_core.hpp"
#include "qroof/roofs.hpp"
#include "qroof/states_lab.hpp"

namespace qroof {

using Json = nlohmann::json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json state_to_json(const State& state);
/// Accepts "kind" "pure" or "mixed"; "mixed" entries must pass DensityMatrix validation.
State state_from_json(const Json& j);

Json operator_to_json(const HermitianOperator& op);
HermitianOperator operator_from_json(const Json& j);

void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const RoofResult& r);
void to_json(Json& j, const Decomposition& d);
void to_json(Json& j, const TwoModeReport& r);
void to_json(Json& j, const CvUsefulness& u);
void to_json(Json& j, const TwoSpinReport& r);
void to_json(Json& j, const PlanarSqueezedResult& r);
void to_json(Json& j, const FjCurve& c);
void to_json(Json& j, const EstimationReport& r);

}  // namespace qroof
