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

#include "tpskit/grid_demo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tpskit/qcf.hpp"

namespace tpskit {

namespace {

constexpr double kEdgeDensityTol = 1e-12;

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ContractViolation("profile width sigma must be positive and finite");
  }
}

SampledProfile finish(const Grid& grid, ComplexVector samples, double edge_density,
                      const char* name) {
  SampledProfile out{grid, normalize(samples), std::nullopt};
  if (edge_density >= kEdgeDensityTol) {
    std::ostringstream msg;
    msg << name << " profile is truncated by the grid boundary (relative edge density "
        << edge_density << ")";
    out.boundary_warning = msg.str();
  }
  return out;
}

// exp(−(edge − c)²/(2σ²)): density at the nearer grid edge relative to the peak.
double edge_density(const Grid& grid, double center, double sigma) {
  const double gap = grid.half_width() - std::abs(center);
  if (gap <= 0.0) {
    return 1.0;
  }
  return std::exp(-gap * gap / (2.0 * sigma * sigma));
}

void require_same_grid(const SampledProfile& f, const SampledProfile& g) {
  if (!(f.grid == g.grid)) {
    throw DimensionMismatch("profiles are sampled on different grids");
  }
}

CoordinateReport analyse(const SampledProfile& f, const SampledProfile& g,
                         const IndexBijection& bij, double truncation_tol) {
  require_same_grid(f, g);
  const std::size_t d = f.grid.points();
  const ComplexVector psi = tensor_vec(f.samples, g.samples);

  CoordinateReport report;
  const SchmidtDecomposition xy = schmidt(psi, TensorProductStructure::trivial(d, d),
                                          truncation_tol);
  const SchmidtDecomposition ab = schmidt(psi, relabel_tps(bij), truncation_tol);
  report.rank_xy = xy.rank;
  report.rank_ab = ab.rank;
  report.coefficients_xy = xy.coefficients;
  report.coefficients_ab = ab.coefficients;
  for (const auto* p : {&f, &g}) {
    if (p->boundary_warning) {
      report.warnings.push_back(*p->boundary_warning);
    }
  }
  return report;
}

}  // namespace

Grid::Grid(std::size_t points, double spacing) : points_(points), spacing_(spacing) {
  if (points == 0 || points % 2 == 0) {
    throw GridConstraintError("grid needs an odd number of points, got " +
                              std::to_string(points));
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw GridConstraintError("grid spacing must be positive and finite");
  }
}

Grid Grid::spanning(std::size_t points, double half_width) {
  if (points < 3 || points % 2 == 0) {
    throw GridConstraintError("grid needs an odd number of points >= 3, got " +
                              std::to_string(points));
  }
  return Grid(points, 2.0 * half_width / static_cast<double>(points - 1));
}

double Grid::position(std::size_t i) const noexcept {
  const auto centered =
      static_cast<double>(static_cast<long long>(i) - static_cast<long long>(points_ - 1) / 2);
  return centered * spacing_;
}

Observable Grid::position_operator() const {
  RealVector x(static_cast<Eigen::Index>(points_));
  for (std::size_t i = 0; i < points_; ++i) {
    x[static_cast<Eigen::Index>(i)] = position(i);
  }
  return Observable::diagonal(std::move(x));
}

SampledProfile gaussian_profile(const Grid& grid, double center, double sigma) {
  require_sigma(sigma);
  ComplexVector s(static_cast<Eigen::Index>(grid.points()));
  for (std::size_t i = 0; i < grid.points(); ++i) {
    const double u = grid.position(i) - center;
    s[static_cast<Eigen::Index>(i)] = std::exp(-u * u / (4.0 * sigma * sigma));
  }
  return finish(grid, std::move(s), edge_density(grid, center, sigma), "gaussian");
}

SampledProfile double_gaussian_profile(const Grid& grid, double separation, double sigma) {
  require_sigma(sigma);
  ComplexVector s(static_cast<Eigen::Index>(grid.points()));
  for (std::size_t i = 0; i < grid.points(); ++i) {
    const double x = grid.position(i);
    const double l = x - separation;
    const double r = x + separation;
    s[static_cast<Eigen::Index>(i)] =
        std::exp(-l * l / (4.0 * sigma * sigma)) + std::exp(-r * r / (4.0 * sigma * sigma));
  }
  return finish(grid, std::move(s), edge_density(grid, std::abs(separation), sigma),
                "double gaussian");
}

SampledProfile odd_gaussian_profile(const Grid& grid, double sigma) {
  require_sigma(sigma);
  ComplexVector s(static_cast<Eigen::Index>(grid.points()));
  for (std::size_t i = 0; i < grid.points(); ++i) {
    const double x = grid.position(i);
    s[static_cast<Eigen::Index>(i)] = x * std::exp(-x * x / (4.0 * sigma * sigma));
  }
  // The x prefactor shifts the peak of |x|exp(...) to x = σ√2; compare the
  // edge density against that peak.
  const double edge = grid.half_width();
  const double peak = 2.0 * sigma * sigma * std::exp(-1.0);
  const double density = edge * edge * std::exp(-edge * edge / (2.0 * sigma * sigma)) / peak;
  return finish(grid, std::move(s), density, "odd gaussian");
}

SampledProfile fourier_profile(const Grid& grid, std::size_t mode) {
  const std::size_t d = grid.points();
  if (mode >= d) {
    throw ContractViolation("Fourier mode " + std::to_string(mode) + " outside [0, " +
                            std::to_string(d) + ")");
  }
  ComplexVector s(static_cast<Eigen::Index>(d));
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    // Reduce m·i mod d first so the phase argument stays exact.
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((mode * i) % d) /
                         static_cast<double>(d);
    s[static_cast<Eigen::Index>(i)] = std::polar(norm, angle);
  }
  // Plane waves are periodic on the grid; no boundary check applies.
  return SampledProfile{grid, std::move(s), std::nullopt};
}

CoordinateReport demo_sum_diff(const SampledProfile& f, const SampledProfile& g,
                               double truncation_tol) {
  require_same_grid(f, g);
  const std::size_t d = f.grid.points();
  CoordinateReport report = analyse(f, g, sum_diff_bijection(d), truncation_tol);

  const Observable x = f.grid.position_operator();
  const RealVector& xs = x.diagonal_values();
  const auto n = static_cast<Eigen::Index>(d);
  RealVector sum(n * n);
  RealVector diff(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sum[i * n + j] = xs[i] + xs[j];
      diff[i * n + j] = xs[i] - xs[j];
    }
  }
  const ComplexVector psi = tensor_vec(f.samples, g.samples);
  const double q = qcf(Observable::diagonal(std::move(sum)), Observable::diagonal(std::move(diff)),
                       psi)
                       .real();
  const double vd = variance(x, f.samples) - variance(x, g.samples);
  if (std::abs(q - vd) > 1e-9) {
    throw NumericalFailure("sum/difference QCF disagrees with the variance difference", 0,
                           std::abs(q - vd));
  }
  report.qcf_ab = q;
  report.variance_diff = vd;
  return report;
}

CoordinateReport demo_general_bijection(const SampledProfile& f, const SampledProfile& g,
                                        const IndexBijection& bij, double truncation_tol) {
  require_same_grid(f, g);
  if (bij.d1() != f.grid.points() || bij.d2() != f.grid.points()) {
    throw DimensionMismatch("bijection grid does not match the profile grid");
  }
  return analyse(f, g, bij, truncation_tol);
}

}  // namespace tpskit
