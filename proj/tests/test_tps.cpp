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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tpskit/random.hpp"
#include "tpskit/schmidt.hpp"
#include "tpskit/tps.hpp"

using namespace tpskit;

namespace {

ComplexVector bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = v[3] = 1.0 / std::numbers::sqrt2;
  return v;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return m / std::numbers::sqrt2;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("coefficient_matrix examples") {
  const auto trivial = TensorProductStructure::trivial(2, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK(max_abs(coefficient_matrix(ComplexVector::Unit(4, 0), trivial) - expected) == 0.0);

  const ComplexMatrix bell = coefficient_matrix(bell_state(), trivial);
  CHECK(max_abs(bell - ComplexMatrix::Identity(2, 2) / std::numbers::sqrt2) < 1e-16);

  Rng rng(3);
  const ComplexVector u = haar_state(3, rng);
  const ComplexVector v = haar_state(4, rng);
  const ComplexMatrix c = coefficient_matrix(tensor_vec(u, v), TensorProductStructure::trivial(3, 4));
  // Outer-product oracle: C = u vᵀ.
  CHECK(max_abs(c - u * v.transpose()) < 1e-15);
  CHECK(c.norm() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(coefficient_matrix(ComplexVector::Unit(3, 0), trivial), DimensionMismatch);
}

TEST_CASE("relabel_tps of identity and swap") {
  CHECK(max_abs(relabel_tps(IndexBijection::identity(2, 2)).unitary() -
                ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  CHECK(max_abs(relabel_tps(IndexBijection::swap(2)).unitary() - swap) == 0.0);
}

TEST_CASE("relabel_tps of the d=3 sum/difference map is the expected permutation") {
  const IndexBijection bij = sum_diff_bijection(3);
  const ComplexMatrix u = relabel_tps(bij).unitary();
  // Exhaustive oracle: global e_{3i+j} must be the product state (i+j, i−j) mod 3.
  ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int a = (i + j) % 3;
      const int b = ((i - j) % 3 + 3) % 3;
      expected(3 * i + j, 3 * a + b) = 1.0;
    }
  }
  CHECK(max_abs(u - expected) == 0.0);
  for (Eigen::Index k = 0; k < 9; ++k) {
    CHECK(u.row(k).cwiseAbs().sum() == 1.0);
    CHECK(u.col(k).cwiseAbs().sum() == 1.0);
  }
}

TEST_CASE("relabel_tps composes with an existing TPS") {
  const auto swapped = relabel_tps(TensorProductStructure::trivial(2, 2), IndexBijection::swap(2));
  const auto back = relabel_tps(swapped, IndexBijection::swap(2));
  CHECK(back.permutation() == TensorProductStructure::trivial(2, 2).permutation());

  Rng rng(5);
  const auto dense = TensorProductStructure::from_unitary(2, 2, random_unitary(4, rng));
  const auto twice = relabel_tps(relabel_tps(dense, IndexBijection::swap(2)), IndexBijection::swap(2));
  CHECK(max_abs(twice.unitary() - dense.unitary()) == 0.0);
}

TEST_CASE("IndexBijection rejects non-bijective tables") {
  using P = IndexBijection::Pair;
  CHECK_THROWS_AS(IndexBijection(2, 2, {P{0, 0}, P{0, 0}, P{1, 0}, P{1, 1}}), BijectionError);
  CHECK_THROWS_AS(IndexBijection(2, 2, {P{0, 0}, P{0, 1}, P{1, 0}, P{2, 1}}), BijectionError);
  CHECK_THROWS_AS(IndexBijection(2, 2, {P{0, 0}}), BijectionError);
}

TEST_CASE("sum_diff_bijection examples") {
  const IndexBijection b3 = sum_diff_bijection(3);
  CHECK(b3.forward(0, 0) == IndexBijection::Pair{0, 0});
  // (1 + 2) mod 3 = 0, (1 − 2) mod 3 = 2.
  CHECK(b3.forward(1, 2) == IndexBijection::Pair{0, 2});
  CHECK(b3.inverse(0, 2) == IndexBijection::Pair{1, 2});

  for (std::size_t d : {3u, 5u, 7u, 9u}) {
    const IndexBijection b = sum_diff_bijection(d);
    const std::size_t inv2 = (d + 1) / 2;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto [a, bb] = b.forward(i, j);
        CHECK(b.inverse(a, bb) == IndexBijection::Pair{i, j});
        // Closed-form inverse with the modular inverse of 2.
        CHECK((inv2 * (a + bb)) % d == i);
        CHECK((inv2 * (a + d - bb)) % d == j);
      }
    }
  }
  CHECK_THROWS_AS(sum_diff_bijection(4), GridConstraintError);
}

TEST_CASE("tps_from_joint_eigenbasis of already-product observables") {
  const Observable f(tensor_op(pauli_z(), ComplexMatrix::Identity(2, 2)));
  const Observable g(tensor_op(ComplexMatrix::Identity(2, 2), pauli_z()));
  const auto tps = tps_from_joint_eigenbasis(f, g, 2, 2);
  CHECK(max_abs(tps.unitary() - ComplexMatrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("tps_from_joint_eigenbasis recovers a random construction") {
  Rng rng(23);
  for (auto [d1, d2] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
    const auto n = d1 * d2;
    const ComplexMatrix v = random_unitary(static_cast<std::size_t>(n), rng);
    RealVector df(n);
    RealVector dg(n);
    for (int s = 0; s < d1; ++s) {
      for (int t = 0; t < d2; ++t) {
        // Descending in s and t so V's column order is the expected one.
        df[s * d2 + t] = 1.5 * (d1 - s);
        dg[s * d2 + t] = -0.7 * t;
      }
    }
    const ComplexMatrix fm = v * df.cast<Complex>().asDiagonal() * v.adjoint();
    const ComplexMatrix gm = v * dg.cast<Complex>().asDiagonal() * v.adjoint();
    const auto tps = tps_from_joint_eigenbasis(Observable(0.5 * (fm + fm.adjoint())),
                                               Observable(0.5 * (gm + gm.adjoint())),
                                               static_cast<std::size_t>(d1),
                                               static_cast<std::size_t>(d2));
    const ComplexMatrix u = tps.unitary();
    for (Eigen::Index c = 0; c < n; ++c) {
      // Same column up to a phase: |⟨v_c, u_c⟩| = 1.
      CHECK(std::abs(v.col(c).dot(u.col(c))) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("tps_from_joint_eigenbasis errors") {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const Observable f(tensor_op(pauli_z(), ComplexMatrix::Identity(2, 2)));
  const Observable nc(tensor_op(x, ComplexMatrix::Identity(2, 2)));
  CHECK_THROWS_AS(tps_from_joint_eigenbasis(f, nc, 2, 2), ContractViolation);

  // G = I has one eigenvalue, not two.
  CHECK_THROWS_AS(tps_from_joint_eigenbasis(f, Observable::identity(4), 2, 2), StructureError);

  // Two distinct values each, but the joint cells are unevenly filled.
  RealVector fd(4);
  fd << 1, 1, 1, 0;
  RealVector gd(4);
  gd << 1, 1, 0, 0;
  CHECK_THROWS_AS(tps_from_joint_eigenbasis(Observable(fd.cast<Complex>().asDiagonal().toDenseMatrix()),
                                            Observable(gd.cast<Complex>().asDiagonal().toDenseMatrix()),
                                            2, 2),
                  StructureError);
}

TEST_CASE("local_unitary_tps") {
  const auto trivial = TensorProductStructure::trivial(2, 2);
  const auto same = local_unitary_tps(trivial, ComplexMatrix::Identity(2, 2),
                                      ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(same.unitary() - ComplexMatrix::Identity(4, 4)) == 0.0);

  const auto hh = local_unitary_tps(trivial, hadamard(), hadamard());
  CHECK(schmidt(bell_state(), hh).rank == 2);

  CHECK_THROWS_AS(local_unitary_tps(trivial, 2.0 * ComplexMatrix::Identity(2, 2), hadamard()),
                  ContractViolation);
  CHECK_THROWS_AS(local_unitary_tps(trivial, ComplexMatrix::Identity(3, 3), hadamard()),
                  DimensionMismatch);
}

TEST_CASE("local unitaries keep product states product") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d1 = 2 + static_cast<std::size_t>(trial % 2);
    const std::size_t d2 = 2 + static_cast<std::size_t>((trial / 2) % 2);
    const auto base = TensorProductStructure::from_unitary(d1, d2, random_unitary(d1 * d2, rng));
    const ComplexVector psi =
        base.from_product(tensor_vec(haar_state(d1, rng), haar_state(d2, rng)));
    const auto moved = local_unitary_tps(base, random_unitary(d1, rng), random_unitary(d2, rng));
    CHECK(schmidt(psi, moved).rank == 1);
  }
}

TEST_CASE("disentangling_tps") {
  const auto trivial22 = TensorProductStructure::trivial(2, 2);
  const auto bell_tps = disentangling_tps(bell_state(), trivial22);
  CHECK(bell_tps.d1() == 2);
  CHECK(bell_tps.d2() == 2);
  CHECK(schmidt(bell_state(), bell_tps).rank == 1);
  CHECK(unitarity_defect(bell_tps.unitary()) <= 1e-9);

  const ComplexVector product = ComplexVector::Unit(4, 2);
  CHECK(schmidt(product, disentangling_tps(product, trivial22)).rank == 1);

  Rng rng(31);
  const auto trivial33 = TensorProductStructure::trivial(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexVector psi = haar_state(9, rng);
    REQUIRE(schmidt(psi, trivial33).rank >= 2);
    const auto tps = disentangling_tps(psi, trivial33);
    CHECK(schmidt(psi, tps).rank == 1);
    CHECK(unitarity_defect(tps.unitary()) <= 1e-9);
  }
}

TEST_CASE("permutation TPS agrees with its dense unitary") {
  const auto tps = relabel_tps(sum_diff_bijection(5));
  Rng rng(37);
  const ComplexVector psi = haar_state(25, rng);
  CHECK((tps.to_product(psi) - tps.unitary().adjoint() * psi).norm() == 0.0);
  CHECK((tps.from_product(psi) - tps.unitary() * psi).norm() == 0.0);

  RealVector d(25);
  for (int k = 0; k < 25; ++k) {
    d[k] = 0.1 * k;
  }
  const Observable op = Observable::diagonal(d);
  const ComplexMatrix u = tps.unitary();
  CHECK(max_abs(tps.to_global(op).matrix() - u * op.matrix() * u.adjoint()) == 0.0);
}

TEST_CASE("from_unitary validation") {
  CHECK_THROWS_AS(TensorProductStructure::from_unitary(2, 2, 2.0 * ComplexMatrix::Identity(4, 4)),
                  ContractViolation);
  CHECK_THROWS_AS(TensorProductStructure::from_unitary(2, 3, ComplexMatrix::Identity(4, 4)),
                  DimensionMismatch);
  CHECK_THROWS_AS(TensorProductStructure::from_permutation(2, 2, {0, 1, 1, 3}), BijectionError);
}
