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

#include "tpskit/qcf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tpskit {

namespace {

void require_dim(const Observable& op, const ComplexVector& psi, const char* what) {
  if (op.dim() != static_cast<std::size_t>(psi.size())) {
    throw DimensionMismatch(std::string(what) + ": observable dimension " +
                            std::to_string(op.dim()) + " vs state dimension " +
                            std::to_string(psi.size()));
  }
}

Observable embed_left(const Observable& a1, std::size_t d2) {
  return tensor_op(a1, Observable::identity(d2));
}

Observable embed_right(const Observable& b2, std::size_t d1) {
  return tensor_op(Observable::identity(d1), b2);
}

}  // namespace

Complex qcf(const Observable& a, const Observable& b, const ComplexVector& psi) {
  require_dim(a, psi, "qcf");
  require_dim(b, psi, "qcf");
  require_unit(psi, kUnitNormTol, "qcf");
  const ComplexVector a_psi = a.apply(psi);
  const ComplexVector b_psi = b.apply(psi);
  // A is Hermitian, so ⟨ψ, ABψ⟩ = ⟨Aψ, Bψ⟩.
  const Complex ab = a_psi.dot(b_psi);
  const Complex mean_a = psi.dot(a_psi);
  const Complex mean_b = psi.dot(b_psi);
  return ab - mean_a.real() * mean_b.real();
}

const char* to_string(WitnessVerdict verdict) {
  switch (verdict) {
    case WitnessVerdict::kEntangledWitnessed:
      return "entangled-witnessed";
    case WitnessVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

QcfReport qcf_local(const Observable& a1, const Observable& b2, const ComplexVector& psi,
                    const TensorProductStructure& tps, std::optional<double> witness_threshold) {
  if (a1.dim() != tps.d1() || b2.dim() != tps.d2()) {
    throw DimensionMismatch("qcf_local: local observables must be d1 x d1 and d2 x d2");
  }
  // Q is invariant under conjugating A, B and ψ by the same unitary, so the
  // product coordinates U†ψ are used with A1⊗I and I⊗B2 directly.
  const ComplexVector coords = tps.to_product(psi);
  QcfReport report;
  report.value = qcf(embed_left(a1, tps.d2()), embed_right(b2, tps.d1()), coords);
  report.witness_threshold =
      witness_threshold.value_or(static_cast<double>(tps.dim()) * 1e-12);
  if (!(report.witness_threshold >= 0.0) || !std::isfinite(report.witness_threshold)) {
    throw ContractViolation("qcf_local: witness threshold must be finite and nonnegative");
  }
  report.verdict = std::abs(report.value) > report.witness_threshold
                       ? WitnessVerdict::kEntangledWitnessed
                       : WitnessVerdict::kInconclusive;
  return report;
}

double variance(const Observable& a, const ComplexVector& psi) {
  require_dim(a, psi, "variance");
  require_unit(psi, kUnitNormTol, "variance");
  const ComplexVector a_psi = a.apply(psi);
  const double mean = psi.dot(a_psi).real();
  const double second = a_psi.squaredNorm();
  return std::max(0.0, second - mean * mean);
}

SumDiffIdentity sum_diff_qcf_identity(const Observable& a1, const Observable& b2,
                                      const ComplexVector& psi1, const ComplexVector& psi2) {
  const Observable left = embed_left(a1, b2.dim());
  const Observable right = embed_right(b2, a1.dim());
  const ComplexMatrix lm = left.matrix();
  const ComplexMatrix rm = right.matrix();
  const Observable sum(lm + rm);
  const Observable diff(lm - rm);
  SumDiffIdentity out;
  out.lhs = qcf(sum, diff, tensor_vec(psi1, psi2)).real();
  out.rhs = variance(a1, psi1) - variance(b2, psi2);
  return out;
}

}  // namespace tpskit
