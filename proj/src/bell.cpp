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

#include "tpskit/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tpskit/random.hpp"

namespace tpskit {

namespace {

constexpr double kGridStep = std::numbers::pi / 12.0;  // 15°
constexpr double kMinStep = 1e-6;
constexpr std::size_t kMaxSweepsPerStep = 1000;
constexpr std::size_t kStarts = 12;
constexpr std::size_t kMaxGridSweeps = 20;

using Matrix2 = Eigen::Matrix2cd;
using Vector4 = Eigen::Vector4cd;

Matrix2 bloch_operator(const Eigen::Vector3d& n) {
  Matrix2 m;
  m << n.z(), Complex(n.x(), -n.y()), Complex(n.x(), n.y()), -n.z();
  return m;
}

Eigen::Vector3d direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

void require_two_qubit(const ComplexVector& psi) {
  if (psi.size() != 4) {
    throw DimensionMismatch("CHSH needs a two-qubit (4-dimensional) state, got dimension " +
                            std::to_string(psi.size()));
  }
  require_unit(psi, kUnitNormTol, "chsh");
}

double fast_correlation(const Vector4& psi, const Matrix2& u, const Matrix2& v) {
  Vector4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          acc += u(i, k) * v(j, l) * psi[2 * k + l];
        }
      }
      out[2 * i + j] = acc;
    }
  }
  return psi.dot(out).real();
}

class ChshObjective {
 public:
  explicit ChshObjective(const ComplexVector& psi) : psi_(psi) {}

  double operator()(const std::array<double, 8>& x) {
    ++evaluations_;
    std::array<Matrix2, 4> ops;
    for (std::size_t k = 0; k < 4; ++k) {
      ops[k] = bloch_operator(direction(x[2 * k], x[2 * k + 1]));
    }
    return fast_correlation(psi_, ops[0], ops[2]) + fast_correlation(psi_, ops[0], ops[3]) +
           fast_correlation(psi_, ops[1], ops[2]) - fast_correlation(psi_, ops[1], ops[3]);
  }

  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  Vector4 psi_;
  std::size_t evaluations_ = 0;
};

// Cyclic coordinate search over the 15° lattice; each coordinate jumps to
// its best lattice value until a sweep changes nothing.
double grid_search(ChshObjective& objective, std::array<double, 8>& x) {
  double best = objective(x);
  const int steps = static_cast<int>(std::lround(2.0 * std::numbers::pi / kGridStep));
  for (std::size_t sweep = 0; sweep < kMaxGridSweeps; ++sweep) {
    bool moved = false;
    for (std::size_t c = 0; c < x.size(); ++c) {
      const double keep = x[c];
      double best_coord = keep;
      for (int s = 0; s < steps; ++s) {
        x[c] = s * kGridStep;
        const double v = objective(x);
        if (v > best + 1e-14) {
          best = v;
          best_coord = x[c];
          moved = true;
        }
      }
      x[c] = best_coord;
    }
    if (!moved) {
      break;
    }
  }
  return best;
}

double refine(ChshObjective& objective, std::array<double, 8>& x, double value) {
  for (double step = kGridStep / 2.0; step >= kMinStep; step /= 2.0) {
    for (std::size_t sweep = 0; sweep < kMaxSweepsPerStep; ++sweep) {
      bool improved = false;
      for (std::size_t c = 0; c < x.size(); ++c) {
        for (const double delta : {step, -step}) {
          const double keep = x[c];
          x[c] = keep + delta;
          const double v = objective(x);
          if (v > value) {
            value = v;
            improved = true;
            break;
          }
          x[c] = keep;
        }
      }
      if (!improved) {
        break;
      }
    }
  }
  return value;
}

}  // namespace

ChshSettings::ChshSettings(Eigen::Vector3d a, Eigen::Vector3d a_prime, Eigen::Vector3d b,
                           Eigen::Vector3d b_prime)
    : dirs_{std::move(a), std::move(a_prime), std::move(b), std::move(b_prime)} {
  for (const auto& d : dirs_) {
    if (!d.allFinite() || std::abs(d.norm() - 1.0) > 1e-12) {
      throw ContractViolation("CHSH measurement directions must be unit vectors");
    }
  }
}

ChshSettings ChshSettings::from_angles(const std::array<double, 8>& angles) {
  return ChshSettings(direction(angles[0], angles[1]), direction(angles[2], angles[3]),
                      direction(angles[4], angles[5]), direction(angles[6], angles[7]));
}

double correlation(const ComplexVector& psi, const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  require_two_qubit(psi);
  const ComplexMatrix op = tensor_op(ComplexMatrix(bloch_operator(u)),
                                     ComplexMatrix(bloch_operator(v)));
  return psi.dot(op * psi).real();
}

double chsh_value(const ComplexVector& psi, const ChshSettings& s) {
  return correlation(psi, s.a(), s.b()) + correlation(psi, s.a(), s.b_prime()) +
         correlation(psi, s.a_prime(), s.b()) - correlation(psi, s.a_prime(), s.b_prime());
}

ChshMaximum chsh_max(const ComplexVector& psi) {
  require_two_qubit(psi);
  ChshObjective objective(psi);

  // Fixed starting lattice points; the sequence is seeded, never time-based.
  Rng rng(0x43485348ULL);
  std::uniform_int_distribution<int> lattice(0, 23);
  std::array<double, 8> best_x{};
  double best = -std::numeric_limits<double>::infinity();
  double grid_best = best;
  std::vector<std::pair<double, std::array<double, 8>>> candidates;
  for (std::size_t start = 0; start < kStarts; ++start) {
    std::array<double, 8> x{};
    for (double& angle : x) {
      angle = lattice(rng) * kGridStep;
    }
    const double v = grid_search(objective, x);
    candidates.emplace_back(v, x);
    grid_best = std::max(grid_best, v);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  const std::size_t polish = std::min<std::size_t>(3, candidates.size());
  for (std::size_t k = 0; k < polish; ++k) {
    auto [v, x] = candidates[k];
    v = refine(objective, x, v);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }

  ChshMaximum out{best, grid_best, ChshSettings::from_angles(best_x), objective.evaluations()};
  return out;
}

Eigen::Matrix3d correlation_matrix(const ComplexVector& psi) {
  require_two_qubit(psi);
  const std::array<Eigen::Vector3d, 3> axes{Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(),
                                            Eigen::Vector3d::UnitZ()};
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = correlation(psi, axes[i], axes[j]);
    }
  }
  return t;
}

double chsh_max_closed_form(const ComplexVector& psi) {
  const Eigen::JacobiSVD<Eigen::Matrix3d> dec(correlation_matrix(psi));
  const Eigen::Vector3d s = dec.singularValues();
  return 2.0 * std::sqrt(s[0] * s[0] + s[1] * s[1]);
}

}  // namespace tpskit
