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

#include "tpskit/tps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tpskit {

namespace {

std::size_t checked_dim(std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0) {
    throw DimensionMismatch("TPS factor dimensions must be at least 1");
  }
  if (d2 > kDefaultMaxGlobalDim / d1) {
    throw SizingError("TPS global dimension exceeds the maximum");
  }
  return d1 * d2;
}

void require_dim(const ComplexVector& v, std::size_t dim, const char* what) {
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                            ", got " + std::to_string(v.size()));
  }
}

// Groups ascending values into clusters of near-equal entries. Returns the
// cluster index of each value and the cluster representatives (means).
std::pair<std::vector<std::size_t>, std::vector<double>> cluster_values(
    const std::vector<double>& sorted, double tol) {
  std::vector<std::size_t> labels(sorted.size());
  std::vector<double> means;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > tol) {
      means.push_back(0.0);
      counts.push_back(0);
    }
    labels[i] = means.size() - 1;
    means.back() += sorted[i];
    ++counts.back();
  }
  for (std::size_t c = 0; c < means.size(); ++c) {
    means[c] /= static_cast<double>(counts[c]);
  }
  return {labels, means};
}

}  // namespace

// TensorProductStructure ---------------------------------------------------

TensorProductStructure::TensorProductStructure(
    std::size_t d1, std::size_t d2, std::variant<std::vector<std::size_t>, ComplexMatrix> map)
    : d1_(d1), d2_(d2), map_(std::move(map)) {}

TensorProductStructure TensorProductStructure::trivial(std::size_t d1, std::size_t d2) {
  std::vector<std::size_t> columns(checked_dim(d1, d2));
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  return TensorProductStructure(d1, d2, std::move(columns));
}

TensorProductStructure TensorProductStructure::from_unitary(std::size_t d1, std::size_t d2,
                                                            ComplexMatrix unitary,
                                                            double tol) {
  const std::size_t dim = checked_dim(d1, d2);
  if (static_cast<std::size_t>(unitary.rows()) != dim ||
      static_cast<std::size_t>(unitary.cols()) != dim) {
    throw DimensionMismatch("TPS unitary must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
  }
  if (dim > kMaxDenseTpsDim) {
    throw SizingError("dense TPS unitary beyond " + std::to_string(kMaxDenseTpsDim));
  }
  require_unitary(unitary, tol, "TPS factorization unitary");
  return TensorProductStructure(d1, d2, std::move(unitary));
}

TensorProductStructure TensorProductStructure::from_permutation(
    std::size_t d1, std::size_t d2, std::vector<std::size_t> columns) {
  const std::size_t dim = checked_dim(d1, d2);
  if (columns.size() != dim) {
    throw DimensionMismatch("TPS permutation must have " + std::to_string(dim) + " entries");
  }
  std::vector<bool> seen(dim, false);
  for (std::size_t c : columns) {
    if (c >= dim || seen[c]) {
      throw BijectionError("TPS permutation is not a bijection of 0.." +
                           std::to_string(dim - 1));
    }
    seen[c] = true;
  }
  return TensorProductStructure(d1, d2, std::move(columns));
}

bool TensorProductStructure::is_permutation() const noexcept {
  return std::holds_alternative<std::vector<std::size_t>>(map_);
}

const std::vector<std::size_t>& TensorProductStructure::permutation() const {
  return std::get<std::vector<std::size_t>>(map_);
}

ComplexMatrix TensorProductStructure::unitary() const {
  if (const auto* dense = std::get_if<ComplexMatrix>(&map_)) {
    return *dense;
  }
  if (dim() > kMaxDenseTpsDim) {
    throw SizingError("cannot materialize a " + std::to_string(dim()) +
                      "-dimensional TPS unitary");
  }
  const auto& perm = permutation();
  const auto n = static_cast<Eigen::Index>(dim());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    u(static_cast<Eigen::Index>(perm[p]), static_cast<Eigen::Index>(p)) = 1.0;
  }
  return u;
}

ComplexVector TensorProductStructure::to_product(const ComplexVector& psi) const {
  require_dim(psi, dim(), "to_product");
  if (const auto* dense = std::get_if<ComplexMatrix>(&map_)) {
    return dense->adjoint() * psi;
  }
  const auto& perm = permutation();
  ComplexVector out(psi.size());
  for (std::size_t p = 0; p < perm.size(); ++p) {
    out[static_cast<Eigen::Index>(p)] = psi[static_cast<Eigen::Index>(perm[p])];
  }
  return out;
}

ComplexVector TensorProductStructure::from_product(const ComplexVector& coefficients) const {
  require_dim(coefficients, dim(), "from_product");
  if (const auto* dense = std::get_if<ComplexMatrix>(&map_)) {
    return *dense * coefficients;
  }
  const auto& perm = permutation();
  ComplexVector out(coefficients.size());
  for (std::size_t p = 0; p < perm.size(); ++p) {
    out[static_cast<Eigen::Index>(perm[p])] = coefficients[static_cast<Eigen::Index>(p)];
  }
  return out;
}

Observable TensorProductStructure::to_global(const Observable& product_op) const {
  if (product_op.dim() != dim()) {
    throw DimensionMismatch("operator dimension does not match the TPS");
  }
  if (is_permutation() && product_op.is_diagonal()) {
    const auto& perm = permutation();
    const RealVector& values = product_op.diagonal_values();
    RealVector out(values.size());
    for (std::size_t p = 0; p < perm.size(); ++p) {
      out[static_cast<Eigen::Index>(perm[p])] = values[static_cast<Eigen::Index>(p)];
    }
    return Observable::diagonal(std::move(out));
  }
  const ComplexMatrix u = unitary();
  const ComplexMatrix m = u * product_op.matrix() * u.adjoint();
  return Observable(0.5 * (m + m.adjoint()));
}

void TensorProductStructure::set_labels(std::vector<std::string> left,
                                        std::vector<std::string> right) {
  if ((!left.empty() && left.size() != d1_) || (!right.empty() && right.size() != d2_)) {
    throw DimensionMismatch("TPS labels must match the factor dimensions");
  }
  label_left_ = std::move(left);
  label_right_ = std::move(right);
}

// IndexBijection -----------------------------------------------------------

IndexBijection::IndexBijection(std::size_t d1, std::size_t d2, std::vector<Pair> forward)
    : d1_(d1), d2_(d2), forward_(std::move(forward)) {
  const std::size_t dim = checked_dim(d1, d2);
  if (forward_.size() != dim) {
    throw BijectionError("bijection table has " + std::to_string(forward_.size()) +
                         " entries, expected " + std::to_string(dim));
  }
  const Pair unset{d1, d2};
  inverse_.assign(dim, unset);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      const auto [a, b] = forward_[i * d2 + j];
      if (a >= d1 || b >= d2) {
        throw BijectionError("image (" + std::to_string(a) + "," + std::to_string(b) +
                             ") of (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is outside the grid");
      }
      Pair& slot = inverse_[a * d2 + b];
      if (slot != unset) {
        throw BijectionError("target (" + std::to_string(a) + "," + std::to_string(b) +
                             ") is hit by both (" + std::to_string(slot.first) + "," +
                             std::to_string(slot.second) + ") and (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
      }
      slot = {i, j};
    }
  }
}

IndexBijection IndexBijection::identity(std::size_t d1, std::size_t d2) {
  std::vector<Pair> forward;
  forward.reserve(checked_dim(d1, d2));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      forward.emplace_back(i, j);
    }
  }
  return IndexBijection(d1, d2, std::move(forward));
}

IndexBijection IndexBijection::swap(std::size_t d) {
  std::vector<Pair> forward;
  forward.reserve(checked_dim(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      forward.emplace_back(j, i);
    }
  }
  return IndexBijection(d, d, std::move(forward));
}

IndexBijection IndexBijection::factor_local(std::vector<std::size_t> left,
                                            std::vector<std::size_t> right) {
  std::vector<Pair> forward;
  forward.reserve(checked_dim(left.size(), right.size()));
  for (std::size_t i : left) {
    for (std::size_t j : right) {
      forward.emplace_back(i, j);
    }
  }
  return IndexBijection(left.size(), right.size(), std::move(forward));
}

IndexBijection::Pair IndexBijection::forward(std::size_t i, std::size_t j) const {
  return forward_.at(i * d2_ + j);
}

IndexBijection::Pair IndexBijection::inverse(std::size_t a, std::size_t b) const {
  return inverse_.at(a * d2_ + b);
}

// Operations ---------------------------------------------------------------

ComplexMatrix coefficient_matrix(const ComplexVector& psi, const TensorProductStructure& tps) {
  const ComplexVector c = tps.to_product(psi);
  const auto d1 = static_cast<Eigen::Index>(tps.d1());
  const auto d2 = static_cast<Eigen::Index>(tps.d2());
  // Row-major reshape: left factor is the slow index.
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      c.data(), d1, d2);
}

namespace {

// Permutation columns P with P e_{bij(i,j)} = e_{i·d2+j}.
std::vector<std::size_t> bijection_columns(const IndexBijection& bij) {
  const std::size_t d2 = bij.d2();
  std::vector<std::size_t> columns(bij.d1() * d2);
  for (std::size_t i = 0; i < bij.d1(); ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      const auto [a, b] = bij.forward(i, j);
      columns[a * d2 + b] = i * d2 + j;
    }
  }
  return columns;
}

}  // namespace

TensorProductStructure relabel_tps(const IndexBijection& bij) {
  return TensorProductStructure::from_permutation(bij.d1(), bij.d2(), bijection_columns(bij));
}

TensorProductStructure relabel_tps(const TensorProductStructure& tps, const IndexBijection& bij) {
  if (tps.d1() != bij.d1() || tps.d2() != bij.d2()) {
    throw DimensionMismatch("bijection grid does not match the TPS dimensions");
  }
  const std::vector<std::size_t> columns = bijection_columns(bij);
  TensorProductStructure out = [&] {
    if (tps.is_permutation()) {
      const auto& base = tps.permutation();
      std::vector<std::size_t> composed(columns.size());
      for (std::size_t p = 0; p < columns.size(); ++p) {
        composed[p] = base[columns[p]];
      }
      return TensorProductStructure::from_permutation(tps.d1(), tps.d2(), std::move(composed));
    }
    const ComplexMatrix base = tps.unitary();
    ComplexMatrix u(base.rows(), base.cols());
    for (std::size_t p = 0; p < columns.size(); ++p) {
      u.col(static_cast<Eigen::Index>(p)) = base.col(static_cast<Eigen::Index>(columns[p]));
    }
    // Column permutation of a validated unitary; no re-check needed.
    return TensorProductStructure::from_unitary(tps.d1(), tps.d2(), std::move(u), 1.0);
  }();
  return out;
}

IndexBijection sum_diff_bijection(std::size_t d) {
  if (d == 0 || d % 2 == 0) {
    throw GridConstraintError("sum/difference relabeling needs an odd grid size, got " +
                              std::to_string(d) +
                              ": 2 has no inverse modulo an even d, so (i+j, i-j) "
                              "would not determine (i, j)");
  }
  std::vector<IndexBijection::Pair> forward;
  forward.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      forward.emplace_back((i + j) % d, (i + d - j) % d);
    }
  }
  return IndexBijection(d, d, std::move(forward));
}

TensorProductStructure tps_from_joint_eigenbasis(const Observable& f, const Observable& g,
                                                 std::size_t d1, std::size_t d2, double tol) {
  const std::size_t dim = checked_dim(d1, d2);
  if (f.dim() != dim || g.dim() != dim) {
    throw DimensionMismatch("joint eigenbasis: observables must have dimension d1*d2 = " +
                            std::to_string(dim));
  }
  const ComplexMatrix fm = f.matrix();
  const ComplexMatrix gm = g.matrix();
  const double commutator = (fm * gm - gm * fm).cwiseAbs().maxCoeff();
  if (commutator > tol) {
    throw ContractViolation("joint eigenbasis: observables do not commute, max|[F,G]| = " +
                            std::to_string(commutator));
  }

  const auto n = static_cast<Eigen::Index>(dim);
  const double f_tol = std::max(tol, 1e-9) * std::max(1.0, fm.cwiseAbs().maxCoeff()) * 1e3;
  const double g_tol = std::max(tol, 1e-9) * std::max(1.0, gm.cwiseAbs().maxCoeff()) * 1e3;

  const EighResult fe = eigh(fm);
  const std::vector<double> f_values(fe.eigenvalues.data(), fe.eigenvalues.data() + n);
  const auto [f_labels, f_means] = cluster_values(f_values, f_tol);

  // Diagonalize G inside each F eigenspace.
  ComplexMatrix joint(n, n);
  std::vector<std::size_t> joint_f(dim);
  std::vector<double> joint_g(dim);
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start;
    while (stop < n && f_labels[stop] == f_labels[start]) {
      ++stop;
    }
    const ComplexMatrix q = fe.eigenvectors.middleCols(start, stop - start);
    ComplexMatrix block = q.adjoint() * gm * q;
    block = 0.5 * (block + block.adjoint());
    const EighResult ge = eigh(block);
    joint.middleCols(start, stop - start) = q * ge.eigenvectors;
    for (Eigen::Index k = 0; k < stop - start; ++k) {
      joint_f[start + k] = f_labels[start];
      joint_g[start + k] = ge.eigenvalues[k];
    }
    start = stop;
  }

  std::vector<std::size_t> g_order(dim);
  std::iota(g_order.begin(), g_order.end(), std::size_t{0});
  std::stable_sort(g_order.begin(), g_order.end(),
                   [&](std::size_t a, std::size_t b) { return joint_g[a] < joint_g[b]; });
  std::vector<double> g_sorted(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    g_sorted[k] = joint_g[g_order[k]];
  }
  const auto [g_sorted_labels, g_means] = cluster_values(g_sorted, g_tol);
  std::vector<std::size_t> g_labels(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    g_labels[g_order[k]] = g_sorted_labels[k];
  }

  if (f_means.size() != d1 || g_means.size() != d2) {
    std::ostringstream msg;
    msg << "joint spectrum is not a " << d1 << "x" << d2 << " grid: F has " << f_means.size()
        << " distinct eigenvalues and G has " << g_means.size();
    throw StructureError(msg.str());
  }

  // Cluster labels ascend with eigenvalue; descending order flips them.
  std::vector<std::size_t> cell_count(dim, 0);
  std::vector<Eigen::Index> cell_vector(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t s = d1 - 1 - joint_f[k];
    const std::size_t t = d2 - 1 - g_labels[k];
    ++cell_count[s * d2 + t];
    cell_vector[s * d2 + t] = static_cast<Eigen::Index>(k);
  }
  std::ostringstream bad;
  for (std::size_t s = 0; s < d1; ++s) {
    for (std::size_t t = 0; t < d2; ++t) {
      if (cell_count[s * d2 + t] != 1) {
        bad << " (F=" << f_means[d1 - 1 - s] << ", G=" << g_means[d2 - 1 - t]
            << "): multiplicity " << cell_count[s * d2 + t] << ";";
      }
    }
  }
  if (!bad.str().empty()) {
    throw StructureError("joint spectrum cells must each hold one eigenvector:" + bad.str());
  }

  ComplexMatrix u(n, n);
  for (std::size_t p = 0; p < dim; ++p) {
    u.col(static_cast<Eigen::Index>(p)) = joint.col(cell_vector[p]);
    fix_phase(u.col(static_cast<Eigen::Index>(p)));
  }
  return TensorProductStructure::from_unitary(d1, d2, std::move(u));
}

TensorProductStructure local_unitary_tps(const TensorProductStructure& tps,
                                         const ComplexMatrix& u_a, const ComplexMatrix& u_b) {
  if (static_cast<std::size_t>(u_a.rows()) != tps.d1() ||
      static_cast<std::size_t>(u_b.rows()) != tps.d2()) {
    throw DimensionMismatch("local unitaries must be d1 x d1 and d2 x d2");
  }
  require_unitary(u_a, kUnitaryTol, "local unitary U_A");
  require_unitary(u_b, kUnitaryTol, "local unitary U_B");
  ComplexMatrix u = tps.unitary() * tensor_op(u_a, u_b);
  TensorProductStructure out =
      TensorProductStructure::from_unitary(tps.d1(), tps.d2(), std::move(u));
  out.set_labels(tps.label_left(), tps.label_right());
  return out;
}

TensorProductStructure disentangling_tps(const ComplexVector& psi,
                                         const TensorProductStructure& tps) {
  require_dim(psi, tps.dim(), "disentangling_tps");
  require_unit(psi, kUnitNormTol, "disentangling_tps");
  const auto n = static_cast<Eigen::Index>(tps.dim());
  if (tps.dim() > kMaxDenseTpsDim) {
    throw SizingError("disentangling TPS beyond the dense limit");
  }
  ComplexMatrix basis(n, n);
  basis.col(0) = psi;
  Eigen::Index filled = 1;
  for (Eigen::Index k = 0; k < n && filled < n; ++k) {
    ComplexVector candidate = ComplexVector::Unit(n, k);
    // Two passes of modified Gram–Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index c = 0; c < filled; ++c) {
        candidate -= basis.col(c).dot(candidate) * basis.col(c);
      }
    }
    const double residual = candidate.norm();
    if (residual < 1e-8) {
      continue;
    }
    basis.col(filled++) = candidate / residual;
  }
  if (filled != n) {
    throw NumericalFailure("disentangling_tps: basis completion fell short",
                           static_cast<std::size_t>(filled), 0.0);
  }
  return TensorProductStructure::from_unitary(tps.d1(), tps.d2(), std::move(basis));
}

}  // namespace tpskit
