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

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "tpskit/linalg.hpp"

namespace tpskit {

/// Measurement directions for the CHSH combination
/// E(a, b) + E(a, b′) + E(a′, b) − E(a′, b′).
class ChshSettings {
 public:
  /// Each direction must be a unit 3-vector to 1e-12.
  ChshSettings(Eigen::Vector3d a, Eigen::Vector3d a_prime, Eigen::Vector3d b,
               Eigen::Vector3d b_prime);

  /// Directions from polar/azimuthal angles, in the order a, a′, b, b′.
  static ChshSettings from_angles(const std::array<double, 8>& angles);

  const Eigen::Vector3d& a() const noexcept { return dirs_[0]; }
  const Eigen::Vector3d& a_prime() const noexcept { return dirs_[1]; }
  const Eigen::Vector3d& b() const noexcept { return dirs_[2]; }
  const Eigen::Vector3d& b_prime() const noexcept { return dirs_[3]; }

 private:
  std::array<Eigen::Vector3d, 4> dirs_;
};

/// ⟨ψ, (u·σ)⊗(v·σ) ψ⟩ for a unit two-qubit state.
double correlation(const ComplexVector& psi, const Eigen::Vector3d& u, const Eigen::Vector3d& v);

double chsh_value(const ComplexVector& psi, const ChshSettings& settings);

struct ChshMaximum {
  double value = 0.0;
  double grid_value = 0.0;  // best value after the 15° coordinate-grid stage
  ChshSettings settings;
  std::size_t evaluations = 0;
};

/// Maximizes chsh_value over the four directions: cyclic coordinate search
/// over a 15° angle grid from several fixed starts, then coordinate descent
/// with step halving down to 1e-6 rad (at most 1000 sweeps per step size).
ChshMaximum chsh_max(const ComplexVector& psi);

/// T_ij = ⟨σ_i ⊗ σ_j⟩.
Eigen::Matrix3d correlation_matrix(const ComplexVector& psi);

/// Closed-form CHSH maximum 2√(t1² + t2²) from the two largest singular
/// values of the correlation matrix. Independent of chsh_max.
double chsh_max_closed_form(const ComplexVector& psi);

}  // namespace tpskit
