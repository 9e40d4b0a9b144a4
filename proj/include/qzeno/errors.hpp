// Copyright 2026 The qzeno Authors
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

#include <stdexcept>
#include <string>

namespace qz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  DimensionError(const std::string& what, long rows_a, long cols_a, long rows_b, long cols_b)
      : Error(what + ": dimension mismatch " + std::to_string(rows_a) + "x" + std::to_string(cols_a) +
              " vs " + std::to_string(rows_b) + "x" + std::to_string(cols_b)) {}
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Physical or numerical parameter outside its allowed range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural contract (Hermiticity, trace, schedule order, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPairError : public Error {
 public:
  using Error::Error;
};

}  // namespace qz
