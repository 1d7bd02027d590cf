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

#include "tpskit/report.hpp"

#include <array>
#include <charconv>

namespace tpskit {

namespace {

Json vector_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
  }
  return out;
}

Json vector3_json(const Eigen::Vector3d& v) { return Json::array({v.x(), v.y(), v.z()}); }

}  // namespace

Json to_json(const RunManifest& m) {
  Json j;
  j["subcommand"] = m.subcommand;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed;
  j["tolerances"] = m.tolerances;
  if (m.timestamp) {
    j["timestamp"] = *m.timestamp;
  }
  j["version"] = m.version;
  return j;
}

Json to_json(const SchmidtDecomposition& sd) {
  Json j;
  j["rank"] = sd.rank;
  j["coefficients"] = vector_json(sd.coefficients.head(static_cast<Eigen::Index>(sd.rank)));
  j["all_coefficients"] = vector_json(sd.coefficients);
  j["factorizable"] = sd.rank == 1;
  j["truncation_tol"] = sd.truncation_tol;
  return j;
}

Json to_json(const QcfReport& r) {
  Json j;
  j["value"] = Json::array({r.value.real(), r.value.imag()});
  j["witness_threshold"] = r.witness_threshold;
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const CoordinateReport& r) {
  Json j;
  j["rank_xy"] = r.rank_xy;
  j["rank_ab"] = r.rank_ab;
  const auto head = [](const RealVector& v) {
    return vector_json(v.head(std::min<Eigen::Index>(4, v.size())));
  };
  j["leading_coefficients_xy"] = head(r.coefficients_xy);
  j["leading_coefficients_ab"] = head(r.coefficients_ab);
  j["qcf_ab"] = r.qcf_ab ? Json(*r.qcf_ab) : Json(nullptr);
  j["variance_diff"] = r.variance_diff ? Json(*r.variance_diff) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const SpinDemoReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["closed_form_residual_max"] = r.closed_form_residual_max;
  j["fraction_nonzero"] = r.fraction_nonzero;
  j["fraction_entangled_in_chi"] = r.fraction_entangled_in_chi;
  j["chi_tps_rank_examples"] = {{"psi_pp", r.chi_tps_ranks[0]},
                                {"psi_pm", r.chi_tps_ranks[1]},
                                {"psi_mp", r.chi_tps_ranks[2]},
                                {"psi_mm", r.chi_tps_ranks[3]}};
  return j;
}

Json to_json(const ChshSettings& s) {
  Json j;
  j["a"] = vector3_json(s.a());
  j["a_prime"] = vector3_json(s.a_prime());
  j["b"] = vector3_json(s.b());
  j["b_prime"] = vector3_json(s.b_prime());
  return j;
}

Json to_json(const ChshMaximum& r) {
  Json j;
  j["value"] = r.value;
  j["grid_value"] = r.grid_value;
  j["settings"] = to_json(r.settings);
  j["evaluations"] = r.evaluations;
  return j;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) {
        out += ',';
      }
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tpskit
