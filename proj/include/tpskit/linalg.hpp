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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "tpskit/errors.hpp"

namespace tpskit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultMaxGlobalDim = std::size_t{1} << 20;
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kImaginaryTol = 1e-10;

/// Throws ContractViolation if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);
void require_finite(const ComplexVector& v, const char* what);

/// Throws ContractViolation unless |‖v‖ - 1| <= tol.
void require_unit(const ComplexVector& v, double tol, const char* what);

/// max |H - H†|.
double hermiticity_defect(const ComplexMatrix& h);
/// max |U†U - I|.
double unitarity_defect(const ComplexMatrix& u);

void require_hermitian(const ComplexMatrix& h, double tol, const char* what);
void require_unitary(const ComplexMatrix& u, double tol, const char* what);

/// Tensor product with the left factor as the slow index:
/// result[i * dim(v) + j] = u[i] * v[j].
ComplexVector tensor_vec(const ComplexVector& u, const ComplexVector& v,
                         std::size_t max_dim = kDefaultMaxGlobalDim);

/// Kronecker product of square matrices, consistent with tensor_vec so that
/// (A⊗B)(u⊗v) = (Au)⊗(Bv).
ComplexMatrix tensor_op(const ComplexMatrix& a, const ComplexMatrix& b,
                        std::size_t max_dim = kDefaultMaxGlobalDim);

/// Thin SVD M = U diag(σ) V†, σ descending. For each k the first
/// largest-modulus entry of U(:,k) is real positive, with V(:,k) rotated by
/// the same phase.
struct SvdResult {
  ComplexMatrix left_vectors;
  RealVector singular_values;
  ComplexMatrix right_vectors;
};

SvdResult svd(const ComplexMatrix& m);

/// Hermitian eigendecomposition, eigenvalues ascending. Each eigenvector is
/// phase-fixed so that its first largest-modulus component is real positive.
struct EighResult {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

EighResult eigh(const ComplexMatrix& h, double hermitian_tol = kHermitianTol);

/// Multiplies v by the unit phase that makes its first largest-modulus entry
/// real positive, and returns that phase. Entries within a relative 1e-10 of
/// the maximum modulus count as ties, resolved by lowest index.
Complex fix_phase(Eigen::Ref<ComplexVector> v);

/// ⟨u, v⟩, conjugate-linear in u.
Complex inner(const ComplexVector& u, const ComplexVector& v);
double norm(const ComplexVector& v);
ComplexVector normalize(const ComplexVector& v);

}  // namespace tpskit
