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
#include <stdexcept>
#include <string>

namespace tpskit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested dimension exceeds the configured maximum.
class SizingError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes are incompatible with the operation (e.g. non-square).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions disagree with each other or with a TPS.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (Hermiticity, unitarity, unit norm, ...) failed.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Input is degenerate for the operation, e.g. normalizing a zero vector.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to converge or to meet its postcondition.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, std::size_t iterations, double residual)
      : Error(what + " (iterations=" + std::to_string(iterations) +
              ", residual=" + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

/// Grid parameters violate a structural requirement (odd point count, ...).
class GridConstraintError : public Error {
 public:
  using Error::Error;
};

/// Joint spectrum does not form the requested d1 x d2 grid.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A map offered as an index bijection is not one.
class BijectionError : public Error {
 public:
  using Error::Error;
};

/// Factors were requested from a state whose Schmidt rank exceeds one.
class NotFactorizable : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tpskit
