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

#include "tpskit/schmidt.hpp"

#include <string>

namespace tpskit {

SchmidtDecomposition schmidt(const ComplexVector& psi, const TensorProductStructure& tps,
                             double truncation_tol) {
  require_unit(psi, kUnitNormTol, "schmidt");
  const ComplexMatrix c = coefficient_matrix(psi, tps);
  SvdResult dec = svd(c);

  SchmidtDecomposition sd;
  sd.coefficients = std::move(dec.singular_values);
  sd.left_basis = std::move(dec.left_vectors);
  // C = Σ α u v†, so the right factor vectors are conj(v).
  sd.right_basis = dec.right_vectors.conjugate();
  sd.truncation_tol = truncation_tol;
  const double cutoff = truncation_tol * sd.coefficients[0];
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
    if (sd.coefficients[k] > cutoff) {
      ++sd.rank;
    }
  }
  return sd;
}

ComplexVector reconstruct(const SchmidtDecomposition& sd) {
  const Eigen::Index d1 = sd.left_basis.rows();
  const Eigen::Index d2 = sd.right_basis.rows();
  ComplexVector out = ComplexVector::Zero(d1 * d2);
  for (std::size_t k = 0; k < sd.rank; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    out += sd.coefficients[col] *
           tensor_vec(sd.left_basis.col(col), sd.right_basis.col(col));
  }
  return out;
}

FactorizabilityVerdict is_factorizable(const ComplexVector& psi,
                                       const TensorProductStructure& tps,
                                       double truncation_tol) {
  const SchmidtDecomposition sd = schmidt(psi, tps, truncation_tol);
  return {sd.rank == 1, sd.rank};
}

std::pair<ComplexVector, ComplexVector> factors(const SchmidtDecomposition& sd) {
  if (sd.rank != 1) {
    throw NotFactorizable("state has Schmidt rank " + std::to_string(sd.rank) +
                          "; it is entangled in this TPS");
  }
  ComplexVector left = sd.left_basis.col(0);
  ComplexVector right = sd.coefficients[0] * sd.right_basis.col(0);
  const Complex phase = fix_phase(left);
  right /= phase;
  return {left, right};
}

}  // namespace tpskit
