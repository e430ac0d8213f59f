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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "qroof/quantum_core.hpp"

namespace qroof {

using Rng = std::mt19937_64;

/// Independent generator for a (seed, stream...) tuple, e.g. (seed, restart).
Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {});

/// dim x cols matrix of standard complex Gaussians (unit variance per
/// real and imaginary part).
Matrix ginibre(int rows, int cols, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phases
/// divided out).
Matrix haar_unitary(int dim, Rng& rng);

/// Hermitian matrix with Gaussian entries (GUE-like), not normalized.
HermitianOperator random_hermitian(int dim, Rng& rng);

/// Hermitian matrix with unit Frobenius norm.
HermitianOperator random_unit_hermitian(int dim, Rng& rng);

/// Haar-random pure state.
PureState random_pure_state(int dim, Rng& rng);

}  // namespace qroof
