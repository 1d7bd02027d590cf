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
#include <optional>

#include "tpskit/linalg.hpp"

namespace tpskit {

/// A Hermitian operator on a finite-dimensional space.
///
/// Stored either densely or, for operators diagonal in the computational
/// basis (positions on a grid), as a real diagonal. The diagonal form lets
/// the coordinate demos work on global spaces of dimension d^2 ~ 1.7e4 where
/// a dense matrix would not fit.
class Observable {
 public:
  /// Validates Hermiticity to `tol` (max-norm of H - H†).
  explicit Observable(ComplexMatrix matrix, double tol = kHermitianTol);

  static Observable diagonal(RealVector values);
  static Observable identity(std::size_t dim);

  std::size_t dim() const noexcept;
  bool is_diagonal() const noexcept { return diagonal_.has_value(); }

  /// Dense matrix; materializes the diagonal form if needed.
  ComplexMatrix matrix() const;

  ComplexVector apply(const ComplexVector& psi) const;

  /// Diagonal entries; only valid when is_diagonal().
  const RealVector& diagonal_values() const { return *diagonal_; }

 private:
  Observable() = default;

  std::optional<ComplexMatrix> dense_;
  std::optional<RealVector> diagonal_;
};

/// A ⊗ B with the left factor slow; diagonal if both inputs are.
Observable tensor_op(const Observable& a, const Observable& b,
                     std::size_t max_dim = kDefaultMaxGlobalDim);

/// ⟨ψ, Aψ⟩ for unit ψ (within kUnitNormTol). The imaginary part is checked
/// against kImaginaryTol and then discarded.
double expectation(const Observable& a, const ComplexVector& psi);

}  // namespace tpskit
