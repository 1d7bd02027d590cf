// Copyright 2026 The tpskit Authors
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

#include <cstddef>
#include <cstdint>
#include <random>

#include "tpskit/linalg.hpp"

namespace tpskit {

using Rng = std::mt19937_64;

/// Seed for the `index`-th independent stream derived from `seed`
/// (splitmix64 finalizer). Sampling loops seed one Rng per sample from this
/// so results do not depend on how the loop is chunked across threads.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Unit vector from normalized complex normal deviates (Haar measure).
ComplexVector haar_state(std::size_t dim, Rng& rng);

/// Hermitian matrix (G + G†)/2 with G complex Ginibre.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Haar-random unitary via QR of a Ginibre matrix with the R-diagonal phases
/// divided out.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace tpskit
