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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpskit/bell.hpp"
#include "tpskit/grid_demo.hpp"
#include "tpskit/qcf.hpp"
#include "tpskit/schmidt.hpp"
#include "tpskit/spin_demo.hpp"

namespace tpskit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Everything needed to reproduce a report. No field is filled from the
/// clock: `timestamp` is whatever the caller passed in, if anything.
struct RunManifest {
  std::string subcommand;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  Json tolerances = Json::object();
  std::optional<std::string> timestamp;
  std::string version = kVersion;
};

Json to_json(const RunManifest& manifest);
Json to_json(const SchmidtDecomposition& sd);
Json to_json(const QcfReport& report);
Json to_json(const CoordinateReport& report);
Json to_json(const SpinDemoReport& report);
Json to_json(const ChshSettings& settings);
Json to_json(const ChshMaximum& result);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Comma-separated rows; the first row is the header.
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace tpskit
