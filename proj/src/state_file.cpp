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

#include "tpskit/state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tpskit {

namespace {

using Json = nlohmann::ordered_json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  // nlohmann reports the byte after the offending character; a trailing
  // newline would otherwise push an EOF error onto a nonexistent line.
  if (end > 0 && end == text.size() && text[end - 1] == '\n') {
    --line;
  }
  return line;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (const auto pos = msg.find("parse error"); pos != std::string::npos) {
      msg = msg.substr(pos);
    }
    throw ParseError(msg, line_of(text, e.byte));
  }
}

const Json& member(const Json& obj, const char* key, const char* where) {
  if (!obj.is_object()) {
    throw ParseError(std::string(where) + " must be a JSON object", 0);
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(where) + " is missing \"" + key + "\"", 0);
  }
  return *it;
}

std::size_t as_count(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer", 0);
  }
  return v.get<std::size_t>();
}

Complex as_complex(const Json& v, const char* what, std::size_t index) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(std::string(what) + "[" + std::to_string(index) +
                         "] must be a [re, im] pair of numbers",
                     0);
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Complex> as_complex_list(const Json& v, const char* what) {
  if (!v.is_array()) {
    throw ParseError(std::string(what) + " must be an array of [re, im] pairs", 0);
  }
  std::vector<Complex> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_complex(v[i], what, i));
  }
  return out;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

TensorProductStructure tps_from_json(const Json& j) {
  const std::size_t d1 = as_count(member(j, "d1", "tps"), "tps.d1");
  const std::size_t d2 = as_count(member(j, "d2", "tps"), "tps.d2");
  const std::vector<Complex> entries = as_complex_list(member(j, "unitary", "tps"), "tps.unitary");
  const std::size_t dim = d1 * d2;
  if (entries.size() != dim * dim) {
    throw DimensionMismatch("tps.unitary has " + std::to_string(entries.size()) +
                            " entries, expected " + std::to_string(dim * dim));
  }
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix u(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      u(r, c) = entries[static_cast<std::size_t>(r * n + c)];
    }
  }
  TensorProductStructure tps = TensorProductStructure::from_unitary(d1, d2, std::move(u));
  std::vector<std::string> left;
  std::vector<std::string> right;
  if (const auto it = j.find("label_left"); it != j.end()) {
    left = it->get<std::vector<std::string>>();
  }
  if (const auto it = j.find("label_right"); it != j.end()) {
    right = it->get<std::vector<std::string>>();
  }
  tps.set_labels(std::move(left), std::move(right));
  return tps;
}

Json tps_to_json(const TensorProductStructure& tps) {
  Json j;
  j["d1"] = tps.d1();
  j["d2"] = tps.d2();
  const ComplexMatrix u = tps.unitary();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      entries.push_back(complex_json(u(r, c)));
    }
  }
  j["unitary"] = std::move(entries);
  if (!tps.label_left().empty()) {
    j["label_left"] = tps.label_left();
  }
  if (!tps.label_right().empty()) {
    j["label_right"] = tps.label_right();
  }
  return j;
}

template <typename Fn>
auto with_schema_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what(), 0);
  }
}

}  // namespace

TensorProductStructure StateFile::effective_tps() const {
  return tps ? *tps : TensorProductStructure::trivial(d1, d2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path, 0);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StateFile parse_state_file(const std::string& text) {
  const Json j = parse_json(text);
  return with_schema_errors([&] {
    StateFile state;
    const Json& dims = member(j, "dims", "state file");
    if (!dims.is_array() || dims.size() != 2) {
      throw ParseError("\"dims\" must be a two-element array [d1, d2]", 0);
    }
    state.d1 = as_count(dims[0], "dims[0]");
    state.d2 = as_count(dims[1], "dims[1]");
    if (state.d1 == 0 || state.d2 == 0) {
      throw DimensionMismatch("state dimensions must be at least 1");
    }

    const std::vector<Complex> amps = as_complex_list(member(j, "amplitudes", "state file"),
                                                      "amplitudes");
    if (amps.size() != state.d1 * state.d2) {
      throw DimensionMismatch("state has " + std::to_string(amps.size()) +
                              " amplitudes but dims give " +
                              std::to_string(state.d1 * state.d2));
    }
    state.amplitudes = Eigen::Map<const ComplexVector>(amps.data(),
                                                       static_cast<Eigen::Index>(amps.size()));
    require_finite(state.amplitudes, "amplitudes");
    const double n = state.amplitudes.norm();
    if (n == 0.0) {
      throw DegenerateInput("state file holds the zero vector");
    }
    if (std::abs(n - 1.0) > kUnitNormTol) {
      state.amplitudes /= n;
      if (std::abs(n - 1.0) > 1e-8) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "amplitudes had norm " << n << "; renormalized";
        state.warnings.push_back(msg.str());
      }
    }

    if (const auto it = j.find("tps"); it != j.end() && !it->is_null()) {
      TensorProductStructure tps = tps_from_json(*it);
      if (tps.d1() != state.d1 || tps.d2() != state.d2) {
        throw DimensionMismatch("tps dimensions do not match \"dims\"");
      }
      state.tps = std::move(tps);
    }
    if (const auto it = j.find("metadata"); it != j.end()) {
      if (!it->is_object()) {
        throw ParseError("\"metadata\" must be an object of strings", 0);
      }
      for (const auto& [key, value] : it->items()) {
        state.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
      }
    }
    return state;
  });
}

StateFile read_state_file(const std::string& path) { return parse_state_file(read_text_file(path)); }

std::string serialize_state_file(const StateFile& state) {
  Json j;
  j["dims"] = Json::array({state.d1, state.d2});
  if (state.tps) {
    j["tps"] = tps_to_json(*state.tps);
  }
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    amps.push_back(complex_json(state.amplitudes[i]));
  }
  j["amplitudes"] = std::move(amps);
  j["metadata"] = Json::object();
  for (const auto& [key, value] : state.metadata) {
    j["metadata"][key] = value;
  }
  return j.dump(2) + "\n";
}

void write_state_file(const std::string& path, const StateFile& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << serialize_state_file(state);
}

TensorProductStructure parse_tps(const std::string& text) {
  const Json j = parse_json(text);
  return with_schema_errors([&] { return tps_from_json(j); });
}

TensorProductStructure read_tps_file(const std::string& path) {
  return parse_tps(read_text_file(path));
}

std::string serialize_tps(const TensorProductStructure& tps) {
  return tps_to_json(tps).dump(2) + "\n";
}

IndexBijection parse_bijection(const std::string& text) {
  const Json j = parse_json(text);
  return with_schema_errors([&] {
    const std::size_t d1 = as_count(member(j, "d1", "bijection"), "bijection.d1");
    const std::size_t d2 = as_count(member(j, "d2", "bijection"), "bijection.d2");
    const Json& fwd = member(j, "forward", "bijection");
    if (!fwd.is_array()) {
      throw ParseError("bijection.forward must be an array of [a, b] pairs", 0);
    }
    std::vector<IndexBijection::Pair> forward;
    forward.reserve(fwd.size());
    for (const Json& pair : fwd) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("bijection.forward entries must be [a, b] pairs", 0);
      }
      forward.emplace_back(as_count(pair[0], "bijection target"),
                           as_count(pair[1], "bijection target"));
    }
    return IndexBijection(d1, d2, std::move(forward));
  });
}

IndexBijection read_bijection_file(const std::string& path) {
  return parse_bijection(read_text_file(path));
}

ComplexMatrix parse_matrix(const std::string& text) {
  const Json j = parse_json(text);
  return with_schema_errors([&] {
    const std::size_t rows = as_count(member(j, "rows", "matrix"), "matrix.rows");
    const std::size_t cols = as_count(member(j, "cols", "matrix"), "matrix.cols");
    const std::vector<Complex> entries =
        as_complex_list(member(j, "entries", "matrix"), "matrix.entries");
    if (entries.size() != rows * cols) {
      throw DimensionMismatch("matrix has " + std::to_string(entries.size()) +
                              " entries, expected " + std::to_string(rows * cols));
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r * cols + c];
      }
    }
    return m;
  });
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return parse_matrix(read_text_file(path));
}

}  // namespace tpskit
