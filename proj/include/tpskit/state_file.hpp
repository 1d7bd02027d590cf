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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpskit/linalg.hpp"
#include "tpskit/tps.hpp"

namespace tpskit {

/// On-disk pure state:
///
///   {
///     "dims": [d1, d2],
///     "tps": {"d1": d1, "d2": d2, "unitary": [[re, im], ...]},   // optional
///     "amplitudes": [[re, im], ...],
///     "metadata": {"key": "value", ...}
///   }
///
/// Amplitudes are in global index order; the TPS unitary is row-major. A
/// missing "tps" block means the trivial TPS. Doubles are written in
/// shortest round-trip form, so write -> read is bit-exact.
struct StateFile {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::optional<TensorProductStructure> tps;
  ComplexVector amplitudes;
  std::map<std::string, std::string> metadata;
  /// Non-fatal findings while loading (e.g. renormalization).
  std::vector<std::string> warnings;

  TensorProductStructure effective_tps() const;
};

/// Throws ParseError on malformed JSON or schema violations, and
/// DimensionMismatch when amplitude or TPS sizes disagree with "dims".
/// States off unit norm by more than 1e-10 are renormalized; a warning is
/// recorded when the deviation exceeds 1e-8.
StateFile parse_state_file(const std::string& text);
StateFile read_state_file(const std::string& path);

std::string serialize_state_file(const StateFile& state);
void write_state_file(const std::string& path, const StateFile& state);

/// Standalone TPS block, same layout as the "tps" member of a state file.
TensorProductStructure parse_tps(const std::string& text);
TensorProductStructure read_tps_file(const std::string& path);
std::string serialize_tps(const TensorProductStructure& tps);

/// {"d1": .., "d2": .., "forward": [[a, b], ...]} with entry i*d2 + j the
/// image of (i, j). Repeated or out-of-range targets raise BijectionError.
IndexBijection parse_bijection(const std::string& text);
IndexBijection read_bijection_file(const std::string& path);

/// {"rows": n, "cols": n, "entries": [[re, im], ...]} row-major.
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix read_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace tpskit
