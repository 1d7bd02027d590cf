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

#include "tpskit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpskit/observable.hpp"

namespace tpskit {

namespace {

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t max_dim) {
  if (a != 0 && b > max_dim / a) {
    throw SizingError("tensor product dimension " + std::to_string(a) + "x" +
                      std::to_string(b) + " exceeds the maximum global dimension " +
                      std::to_string(max_dim));
  }
  return a * b;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ContractViolation(std::string(what) + ": non-finite entry");
  }
}

void require_finite(const ComplexVector& v, const char* what) {
  if (!v.allFinite()) {
    throw ContractViolation(std::string(what) + ": non-finite entry");
  }
}

void require_unit(const ComplexVector& v, double tol, const char* what) {
  require_finite(v, what);
  const double n = v.norm();
  if (std::abs(n - 1.0) > tol) {
    throw ContractViolation(std::string(what) + ": expected a unit vector, norm is " +
                            std::to_string(n));
  }
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw ShapeError("hermiticity check on a non-square matrix");
  }
  return max_abs(h - h.adjoint());
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw ShapeError("unitarity check on a non-square matrix");
  }
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

void require_hermitian(const ComplexMatrix& h, double tol, const char* what) {
  require_finite(h, what);
  const double defect = hermiticity_defect(h);
  if (defect > tol) {
    throw ContractViolation(std::string(what) + ": not Hermitian, max|H-H^dag| = " +
                            std::to_string(defect));
  }
}

void require_unitary(const ComplexMatrix& u, double tol, const char* what) {
  require_finite(u, what);
  const double defect = unitarity_defect(u);
  if (defect > tol) {
    throw ContractViolation(std::string(what) + ": not unitary, max|U^dag U - I| = " +
                            std::to_string(defect));
  }
}

ComplexVector tensor_vec(const ComplexVector& u, const ComplexVector& v,
                         std::size_t max_dim) {
  if (u.size() == 0 || v.size() == 0) {
    throw ShapeError("tensor_vec: empty operand");
  }
  const auto nu = static_cast<std::size_t>(u.size());
  const auto nv = static_cast<std::size_t>(v.size());
  const std::size_t n = checked_product(nu, nv, max_dim);
  ComplexVector out(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out.segment(i * v.size(), v.size()) = u[i] * v;
  }
  return out;
}

ComplexMatrix tensor_op(const ComplexMatrix& a, const ComplexMatrix& b,
                        std::size_t max_dim) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw ShapeError("tensor_op: operands must be square");
  }
  const std::size_t n = checked_product(static_cast<std::size_t>(a.rows()),
                                        static_cast<std::size_t>(b.rows()), max_dim);
  ComplexMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const Eigen::Index nb = b.rows();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * nb, k * nb, nb, nb) = a(i, k) * b;
    }
  }
  return out;
}

Complex fix_phase(Eigen::Ref<ComplexVector> v) {
  if (v.size() == 0) {
    return Complex{1.0, 0.0};
  }
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) {
    return Complex{1.0, 0.0};
  }
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= top * (1.0 - 1e-10)) {
      pivot = i;
      break;
    }
  }
  const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
  v *= phase;
  v[pivot] = Complex{std::abs(v[pivot]), 0.0};
  return phase;
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  if (m.size() == 0) {
    throw ShapeError("svd: empty matrix");
  }
  Eigen::BDCSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success) {
    throw NumericalFailure("svd did not converge", 0, 0.0);
  }
  SvdResult out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
  for (Eigen::Index k = 0; k < out.left_vectors.cols(); ++k) {
    const Complex phase = fix_phase(out.left_vectors.col(k));
    out.right_vectors.col(k) *= phase;
  }

  const double scale = std::max(1.0, m.norm());
  const ComplexMatrix rebuilt =
      out.left_vectors * out.singular_values.cast<Complex>().asDiagonal() *
      out.right_vectors.adjoint();
  const double residual = (m - rebuilt).norm();
  const auto k = out.left_vectors.cols();
  const ComplexMatrix eye = ComplexMatrix::Identity(k, k);
  const double ortho = std::max(max_abs(out.left_vectors.adjoint() * out.left_vectors - eye),
                                max_abs(out.right_vectors.adjoint() * out.right_vectors - eye));
  if (residual > 1e-10 * scale || ortho > 1e-10) {
    throw NumericalFailure("svd postcondition failed", 1, std::max(residual / scale, ortho));
  }
  return out;
}

EighResult eigh(const ComplexMatrix& h, double hermitian_tol) {
  require_hermitian(h, hermitian_tol, "eigh");
  // Symmetrize so the solver sees an exactly Hermitian operand.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("eigh did not converge", 0, 0.0);
  }
  EighResult out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
    fix_phase(out.eigenvectors.col(k));
  }
  return out;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner: dimensions " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  return u.dot(v);
}

double norm(const ComplexVector& v) { return v.norm(); }

ComplexVector normalize(const ComplexVector& v) {
  require_finite(v, "normalize");
  const double n = v.norm();
  if (n == 0.0) {
    throw DegenerateInput("normalize: zero vector");
  }
  return v / n;
}

// Observable ---------------------------------------------------------------

Observable::Observable(ComplexMatrix matrix, double tol) {
  require_hermitian(matrix, tol, "observable");
  dense_ = std::move(matrix);
}

Observable Observable::diagonal(RealVector values) {
  if (!values.allFinite()) {
    throw ContractViolation("observable: non-finite diagonal entry");
  }
  Observable out;
  out.diagonal_ = std::move(values);
  return out;
}

Observable Observable::identity(std::size_t dim) {
  return diagonal(RealVector::Ones(static_cast<Eigen::Index>(dim)));
}

std::size_t Observable::dim() const noexcept {
  return static_cast<std::size_t>(diagonal_ ? diagonal_->size() : dense_->rows());
}

ComplexMatrix Observable::matrix() const {
  if (diagonal_) {
    return diagonal_->cast<Complex>().asDiagonal();
  }
  return *dense_;
}

ComplexVector Observable::apply(const ComplexVector& psi) const {
  if (static_cast<std::size_t>(psi.size()) != dim()) {
    throw DimensionMismatch("observable of dimension " + std::to_string(dim()) +
                            " applied to a vector of dimension " +
                            std::to_string(psi.size()));
  }
  if (diagonal_) {
    return diagonal_->cast<Complex>().cwiseProduct(psi);
  }
  return *dense_ * psi;
}

Observable tensor_op(const Observable& a, const Observable& b, std::size_t max_dim) {
  if (a.is_diagonal() && b.is_diagonal()) {
    const std::size_t n = checked_product(a.dim(), b.dim(), max_dim);
    const RealVector& da = a.diagonal_values();
    const RealVector& db = b.diagonal_values();
    RealVector values(static_cast<Eigen::Index>(n));
    const auto nb = static_cast<Eigen::Index>(b.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
      for (Eigen::Index j = 0; j < nb; ++j) {
        values[i * nb + j] = da[i] * db[j];
      }
    }
    return Observable::diagonal(std::move(values));
  }
  return Observable(tensor_op(a.matrix(), b.matrix(), max_dim));
}

double expectation(const Observable& a, const ComplexVector& psi) {
  require_unit(psi, kUnitNormTol, "expectation");
  const Complex value = psi.dot(a.apply(psi));
  if (std::abs(value.imag()) > kImaginaryTol * std::max(1.0, std::abs(value))) {
    throw NumericalFailure("expectation has a non-negligible imaginary part", 0,
                           std::abs(value.imag()));
  }
  return value.real();
}

}  // namespace tpskit
