// Copyright 2026 The relinfo authors
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

#ifndef RELINFO_ERROR_HPP
#define RELINFO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace relinfo {

/// Category of a structured library error.
enum class ErrorKind {
  InvalidArgument,   ///< malformed input (bad dimension, bad index, bad range)
  DimensionMismatch, ///< operands live on incompatible spaces
  NotHermitian,      ///< matrix failed the hermiticity check
  NotUnitary,        ///< matrix failed the unitarity check
  NotDensity,        ///< matrix failed the density-operator checks
  NotProjector,      ///< matrix failed the idempotence check
  NotNormalized,     ///< state vector or distribution out of tolerance
  NonCommuting,      ///< joint statistics requested for incompatible variables
  NullSupport,       ///< conditioning on an outcome of (near-)zero probability
  Io,                ///< file could not be read or written
};

/// Exception carrying an ErrorKind alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

} // namespace relinfo

#endif // RELINFO_ERROR_HPP
