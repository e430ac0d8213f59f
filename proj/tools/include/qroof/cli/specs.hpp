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

// State and operator specs for the command line. See docs/state-spec.md.

#pragma once

#include <string>
#include <vector>

#include "qroof/serialization.hpp"

namespace qroof::cli {

/// Parses inline JSON, or reads a file when the text starts with '@'.
Json load_spec_text(const std::string& text);

/// Builds the state named by spec["constructor"]. default_cutoff applies to
/// bosonic constructors without an explicit "cutoff".
State build_state(const Json& spec, int default_cutoff);

/// Builds one operator per entry of an array (names or inline matrices), or
/// from a comma-separated string of names. dim is the state dimension.
std::vector<HermitianOperator> build_operators(const Json& spec, int dim);

}  // namespace qroof::cli
