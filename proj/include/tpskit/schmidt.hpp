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
#include <utility>

#include "tpskit/linalg.hpp"
#include "tpskit/tps.hpp"

namespace tpskit {

inline constexpr double kDefaultSchmidtTol = 1e-10;

/// ψ = Σ_k α_k φ_k ⊗ χ_k in the product coordinates of a TPS.
///
/// All min(d1, d2) coefficients are kept; `rank` counts those above
/// truncation_tol·α_1. Bases are gauge-dependent when coefficients are
/// degenerate.
struct SchmidtDecomposition {
  RealVector coefficients;
  ComplexMatrix left_basis;   // d1 x min(d1, d2), orthonormal columns
  ComplexMatrix right_basis;  // d2 x min(d1, d2), orthonormal columns
  std::size_t rank = 0;
  double truncation_tol = kDefaultSchmidtTol;
};

SchmidtDecomposition schmidt(const ComplexVector& psi, const TensorProductStructure& tps,
                             double truncation_tol = kDefaultSchmidtTol);

/// Σ_k α_k φ_k ⊗ χ_k over the first `rank` terms, in product coordinates.
ComplexVector reconstruct(const SchmidtDecomposition& sd);

struct FactorizabilityVerdict {
  bool factorizable = false;
  std::size_t rank = 0;
};

FactorizabilityVerdict is_factorizable(const ComplexVector& psi,
                                       const TensorProductStructure& tps,
                                       double truncation_tol = kDefaultSchmidtTol);

/// (Ψ1, Ψ2) with Ψ1 ⊗ Ψ2 equal to ψ's product coordinates. Ψ1 is unit with
/// its first largest-modulus entry real positive; Ψ2 carries the norm.
/// Throws NotFactorizable when rank > 1.
std::pair<ComplexVector, ComplexVector> factors(const SchmidtDecomposition& sd);

}  // namespace tpskit
