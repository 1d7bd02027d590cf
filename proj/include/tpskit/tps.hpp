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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tpskit/linalg.hpp"
#include "tpskit/observable.hpp"

namespace tpskit {

/// Largest global dimension for which a TPS unitary is held densely.
inline constexpr std::size_t kMaxDenseTpsDim = 4096;

/// A bipartition H = H1 ⊗ H2 of a global space of dimension D = d1·d2.
///
/// The factorization unitary U maps product coordinates to global
/// coordinates: column p = k·d2 + r of U is the global vector identified with
/// the product basis state φ_k ⊗ φ_r. The trivial TPS is U = I.
///
/// Relabelings are stored as permutations so they scale to the coordinate
/// grids (D ≈ 1.7e4); everything else holds U densely.
class TensorProductStructure {
 public:
  static TensorProductStructure trivial(std::size_t d1, std::size_t d2);

  /// Validates ‖U†U − I‖_max ≤ tol.
  static TensorProductStructure from_unitary(std::size_t d1, std::size_t d2,
                                             ComplexMatrix unitary,
                                             double tol = kUnitaryTol);

  /// U e_p = e_{columns[p]}. `columns` must be a permutation of 0..D-1.
  static TensorProductStructure from_permutation(std::size_t d1, std::size_t d2,
                                                 std::vector<std::size_t> columns);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t dim() const noexcept { return d1_ * d2_; }

  bool is_permutation() const noexcept;
  /// Permutation columns; only valid when is_permutation().
  const std::vector<std::size_t>& permutation() const;

  /// Dense U. Throws SizingError beyond kMaxDenseTpsDim.
  ComplexMatrix unitary() const;

  /// U†ψ: the coefficients of ψ in this TPS's product basis.
  ComplexVector to_product(const ComplexVector& psi) const;
  /// Uc: the global vector with product coefficients c.
  ComplexVector from_product(const ComplexVector& coefficients) const;

  /// U A U† for an operator given in product coordinates.
  Observable to_global(const Observable& product_op) const;

  const std::vector<std::string>& label_left() const noexcept { return label_left_; }
  const std::vector<std::string>& label_right() const noexcept { return label_right_; }
  /// Labels must be empty or have d1 (resp. d2) entries.
  void set_labels(std::vector<std::string> left, std::vector<std::string> right);

 private:
  TensorProductStructure(std::size_t d1, std::size_t d2,
                         std::variant<std::vector<std::size_t>, ComplexMatrix> map);

  std::size_t d1_;
  std::size_t d2_;
  std::variant<std::vector<std::size_t>, ComplexMatrix> map_;
  std::vector<std::string> label_left_;
  std::vector<std::string> label_right_;
};

/// A bijection of the d1 x d2 index grid onto itself, (i, j) -> (a, b).
/// Bijectivity and range are checked exhaustively on construction.
class IndexBijection {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// `forward[i * d2 + j]` is the image of (i, j).
  IndexBijection(std::size_t d1, std::size_t d2, std::vector<Pair> forward);

  static IndexBijection identity(std::size_t d1, std::size_t d2);
  /// (i, j) -> (j, i); requires d1 == d2.
  static IndexBijection swap(std::size_t d);
  /// (i, j) -> (left[i], right[j]) for permutations left of 0..d1-1 and
  /// right of 0..d2-1.
  static IndexBijection factor_local(std::vector<std::size_t> left,
                                     std::vector<std::size_t> right);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }

  Pair forward(std::size_t i, std::size_t j) const;
  Pair inverse(std::size_t a, std::size_t b) const;

 private:
  std::size_t d1_;
  std::size_t d2_;
  std::vector<Pair> forward_;
  std::vector<Pair> inverse_;
};

/// C[k][r] = (U†ψ)[k·d2 + r].
ComplexMatrix coefficient_matrix(const ComplexVector& psi, const TensorProductStructure& tps);

/// TPS whose product state (a, b) is the global basis state e_{i·d2+j} with
/// (a, b) = bij(i, j).
TensorProductStructure relabel_tps(const IndexBijection& bij);

/// Relabels the product basis of an existing TPS: U' = U · P.
TensorProductStructure relabel_tps(const TensorProductStructure& tps,
                                   const IndexBijection& bij);

/// Modular sum/difference map on a d x d grid, d odd:
/// (i, j) -> ((i + j) mod d, (i - j) mod d).
IndexBijection sum_diff_bijection(std::size_t d);

/// TPS whose product basis is the joint eigenbasis of commuting F and G.
///
/// F must have exactly d1 distinct eigenvalues and G exactly d2, with every
/// (f, g) pair occupied by one joint eigenvector. Column (s, t) of U is the
/// joint eigenvector with the s-th largest F eigenvalue and the t-th largest
/// G eigenvalue, phase-fixed like eigh. `tol` bounds both ‖[F, G]‖_max and
/// the eigenvalue clustering gap.
TensorProductStructure tps_from_joint_eigenbasis(const Observable& f, const Observable& g,
                                                 std::size_t d1, std::size_t d2,
                                                 double tol = 1e-9);

/// U' = U · (U_A ⊗ U_B). Product states stay product.
TensorProductStructure local_unitary_tps(const TensorProductStructure& tps,
                                         const ComplexMatrix& u_a, const ComplexMatrix& u_b);

/// A TPS with the same (d1, d2) in which ψ is the product state (0, 0).
/// U's first column is ψ; the rest is ψ's Gram–Schmidt completion by the
/// computational basis vectors in index order.
TensorProductStructure disentangling_tps(const ComplexVector& psi,
                                         const TensorProductStructure& tps);

}  // namespace tpskit
