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
#include <string>
#include <vector>

#include "tpskit/linalg.hpp"
#include "tpskit/observable.hpp"
#include "tpskit/schmidt.hpp"
#include "tpskit/tps.hpp"

namespace tpskit {

/// Centered 1-D grid: x_i = (i − (d−1)/2)·h with d odd.
class Grid {
 public:
  Grid(std::size_t points, double spacing);

  /// Grid of `points` points spanning [−half_width, half_width].
  static Grid spanning(std::size_t points, double half_width);

  std::size_t points() const noexcept { return points_; }
  double spacing() const noexcept { return spacing_; }
  double position(std::size_t i) const noexcept;
  double half_width() const noexcept { return position(points_ - 1); }

  /// Diagonal position operator X.
  Observable position_operator() const;

  bool operator==(const Grid&) const = default;

 private:
  std::size_t points_;
  double spacing_;
};

/// A unit-norm wavefunction sampled on a grid. `boundary_warning` is set when
/// the profile is not negligible at the grid edges (relative density above
/// 1e-12), where the modular relabeling would wrap it around.
struct SampledProfile {
  Grid grid;
  ComplexVector samples;
  std::optional<std::string> boundary_warning;
};

/// Samples ∝ exp(−(x − center)²/(4σ²)); |samples|² has variance σ².
SampledProfile gaussian_profile(const Grid& grid, double center, double sigma);

/// Samples ∝ exp(−(x − s)²/(4σ²)) + exp(−(x + s)²/(4σ²)).
SampledProfile double_gaussian_profile(const Grid& grid, double separation, double sigma);

/// Samples ∝ x·exp(−x²/(4σ²)); vanishes at the grid center.
SampledProfile odd_gaussian_profile(const Grid& grid, double sigma);

/// Discrete Fourier mode exp(2πi·m·i/d)/√d, 0 ≤ m < d.
SampledProfile fourier_profile(const Grid& grid, std::size_t mode);

struct CoordinateReport {
  std::size_t rank_xy = 0;
  std::size_t rank_ab = 0;
  RealVector coefficients_xy;
  RealVector coefficients_ab;
  std::optional<double> qcf_ab;         // sum/difference only
  std::optional<double> variance_diff;  // sum/difference only
  std::vector<std::string> warnings;
};

/// Ψ = f⊗g analysed in the position TPS and in the sum/difference
/// relabeling. qcf_ab is Re Q(X⊗I + I⊗X, X⊗I − I⊗X, Ψ) and must agree with
/// Var_f(X) − Var_g(X) to 1e-9, otherwise NumericalFailure is thrown.
CoordinateReport demo_sum_diff(const SampledProfile& f, const SampledProfile& g,
                               double truncation_tol = kDefaultSchmidtTol);

/// Ψ = f⊗g analysed in the position TPS and in relabel_tps(bij).
CoordinateReport demo_general_bijection(const SampledProfile& f, const SampledProfile& g,
                                        const IndexBijection& bij,
                                        double truncation_tol = kDefaultSchmidtTol);

}  // namespace tpskit
