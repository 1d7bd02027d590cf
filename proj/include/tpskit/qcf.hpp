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

#include <optional>

#include "tpskit/linalg.hpp"
#include "tpskit/observable.hpp"
#include "tpskit/tps.hpp"

namespace tpskit {

/// Quantum covariance function Q(A, B, ψ) = ⟨ψ, ABψ⟩ − ⟨ψ, Aψ⟩⟨ψ, Bψ⟩.
///
/// Complex in general; real (to 1e-10) when A and B commute.
Complex qcf(const Observable& a, const Observable& b, const ComplexVector& psi);

enum class WitnessVerdict { kEntangledWitnessed, kInconclusive };

const char* to_string(WitnessVerdict verdict);

struct QcfReport {
  Complex value;
  double witness_threshold = 0.0;
  WitnessVerdict verdict = WitnessVerdict::kInconclusive;
};

/// Q(U(A1⊗I)U†, U(I⊗B2)U†, ψ) for the TPS unitary U.
///
/// A nonzero value proves ψ is entangled in this TPS; zero proves nothing.
/// The default witness threshold is D·1e-12.
QcfReport qcf_local(const Observable& a1, const Observable& b2, const ComplexVector& psi,
                    const TensorProductStructure& tps,
                    std::optional<double> witness_threshold = std::nullopt);

/// ⟨A²⟩ − ⟨A⟩², clamped at zero.
double variance(const Observable& a, const ComplexVector& psi);

struct SumDiffIdentity {
  double lhs = 0.0;  // Re Q(A⊗I + I⊗B, A⊗I − I⊗B, Ψ1⊗Ψ2)
  double rhs = 0.0;  // Var(A, Ψ1) − Var(B, Ψ2)
};

SumDiffIdentity sum_diff_qcf_identity(const Observable& a1, const Observable& b2,
                                      const ComplexVector& psi1, const ComplexVector& psi2);

}  // namespace tpskit
