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

#include "tpskit/spin_demo.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "tpskit/qcf.hpp"
#include "tpskit/random.hpp"
#include "tpskit/schmidt.hpp"

namespace tpskit {

namespace {

constexpr double kNonzeroQcf = 1e-8;

ComplexMatrix pauli(char axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case 'x':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'y':
      m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

Observable total_square(const ComplexMatrix& s, double hbar) {
  const ComplexMatrix eye4 = ComplexMatrix::Identity(4, 4);
  return Observable(0.5 * hbar * hbar * eye4 + 2.0 * tensor_op(s, s));
}

}  // namespace

void validate(const SpinConfig& cfg) {
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar)) {
    throw ContractViolation("hbar must be positive and finite");
  }
}

SpinOperators spin_operators(const SpinConfig& cfg) {
  validate(cfg);
  const double half = 0.5 * cfg.hbar;
  return {Observable(half * pauli('x')), Observable(half * pauli('y')),
          Observable(half * pauli('z'))};
}

TotalSpinSquares total_spin_squares(const SpinConfig& cfg) {
  const SpinOperators s = spin_operators(cfg);
  return {total_square(s.sz.matrix(), cfg.hbar), total_square(s.sx.matrix(), cfg.hbar)};
}

ChiBasis chi_basis(const SpinConfig& cfg) {
  const TotalSpinSquares sq = total_spin_squares(cfg);
  TensorProductStructure tps = tps_from_joint_eigenbasis(sq.sz2, sq.sx2, 2, 2);
  tps.set_labels({"s=1", "s=0"}, {"t=1", "t=0"});
  ComplexMatrix rows = tps.unitary().transpose();
  return {std::move(tps), std::move(rows)};
}

double spin_qcf_closed_form(const ComplexVector& psi1, const ComplexVector& psi2,
                            const SpinConfig& cfg) {
  if (psi1.size() != 2 || psi2.size() != 2) {
    throw DimensionMismatch("spin states must be two-dimensional");
  }
  const SpinOperators s = spin_operators(cfg);
  const double y = expectation(s.sy, psi1) * expectation(s.sy, psi2);
  const double x = expectation(s.sx, psi1) * expectation(s.sx, psi2);
  const double z = expectation(s.sz, psi1) * expectation(s.sz, psi2);
  return -cfg.hbar * cfg.hbar * y - 4.0 * x * z;
}

SpinDemoReport demo_spins(std::size_t samples, std::uint64_t seed, const SpinConfig& cfg) {
  const TotalSpinSquares sq = total_spin_squares(cfg);
  const ChiBasis chi = chi_basis(cfg);
  SpinDemoReport report;
  report.samples = samples;
  report.seed = seed;
  report.rows.resize(samples);

  detail::parallel_for(samples, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const ComplexVector psi1 = haar_state(2, rng);
    const ComplexVector psi2 = haar_state(2, rng);
    const ComplexVector product = tensor_vec(psi1, psi2);
    const double direct = qcf(sq.sz2, sq.sx2, product).real();
    const double closed = spin_qcf_closed_form(psi1, psi2, cfg);
    report.rows[i] = {i, std::abs(direct - closed), direct, schmidt(product, chi.tps).rank};
  });

  std::size_t nonzero = 0;
  std::size_t entangled = 0;
  for (const SpinSample& row : report.rows) {
    report.closed_form_residual_max = std::max(report.closed_form_residual_max, row.residual);
    if (std::abs(row.qcf_value) > kNonzeroQcf) {
      ++nonzero;
    }
    if (row.chi_rank == 2) {
      ++entangled;
    }
  }
  if (samples != 0) {
    report.fraction_nonzero = static_cast<double>(nonzero) / static_cast<double>(samples);
    report.fraction_entangled_in_chi =
        static_cast<double>(entangled) / static_cast<double>(samples);
  }

  for (Eigen::Index k = 0; k < 4; ++k) {
    report.chi_tps_ranks[static_cast<std::size_t>(k)] =
        schmidt(ComplexVector::Unit(4, k), chi.tps).rank;
  }
  return report;
}

}  // namespace tpskit
