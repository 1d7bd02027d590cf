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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tpskit/linalg.hpp"
#include "tpskit/observable.hpp"
#include "tpskit/tps.hpp"

namespace tpskit {

struct SpinConfig {
  double hbar = 1.0;
};

void validate(const SpinConfig& cfg);

/// Single spin-1/2 components S_i = (ħ/2)σ_i.
struct SpinOperators {
  Observable sx;
  Observable sy;
  Observable sz;
};

SpinOperators spin_operators(const SpinConfig& cfg = {});

/// Squares of total-spin components for two spins:
/// S_z² = (ħ²/2) I⊗I + 2 S_z⊗S_z, and likewise for x.
struct TotalSpinSquares {
  Observable sz2;
  Observable sx2;
};

TotalSpinSquares total_spin_squares(const SpinConfig& cfg = {});

/// The χ_{s,t} basis: joint eigenvectors of S_z² (eigenvalue sħ²) and S_x²
/// (eigenvalue tħ²).
///
/// `tps` has factor 1 indexed by s and factor 2 by t, both descending
/// (product index 0 is s = 1). Row p of `change_of_basis` holds the
/// components of the p-th χ in the global basis (ψ_{++}, ψ_{+−}, ψ_{−+}, ψ_{−−}).
struct ChiBasis {
  TensorProductStructure tps;
  ComplexMatrix change_of_basis;
};

ChiBasis chi_basis(const SpinConfig& cfg = {});

/// Closed form of Q(S_z², S_x², Ψ1⊗Ψ2):
/// −ħ²⟨S_y⟩₁⟨S_y⟩₂ − 4⟨S_x⟩₁⟨S_x⟩₂⟨S_z⟩₁⟨S_z⟩₂.
double spin_qcf_closed_form(const ComplexVector& psi1, const ComplexVector& psi2,
                            const SpinConfig& cfg = {});

struct SpinSample {
  std::size_t index = 0;
  double residual = 0.0;
  double qcf_value = 0.0;
  std::size_t chi_rank = 0;  // Schmidt rank of Ψ1⊗Ψ2 in the χ TPS
};

struct SpinDemoReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double closed_form_residual_max = 0.0;
  double fraction_nonzero = 0.0;
  /// Fraction of sampled product states with Schmidt rank 2 in the χ TPS.
  double fraction_entangled_in_chi = 0.0;
  /// Schmidt ranks of ψ_{++}, ψ_{+−}, ψ_{−+}, ψ_{−−} in the χ TPS. Each of
  /// these has a definite S_z² value, so each is rank 1.
  std::array<std::size_t, 4> chi_tps_ranks{};
  std::vector<SpinSample> rows;
};

/// Haar-random product states Ψ1⊗Ψ2, sample i drawn from derive_seed(seed, i).
/// A sample counts as nonzero when |Q| > 1e-8.
SpinDemoReport demo_spins(std::size_t samples, std::uint64_t seed, const SpinConfig& cfg = {});

}  // namespace tpskit
