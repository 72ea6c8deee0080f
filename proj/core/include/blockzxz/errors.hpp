// Copyright 2026 The blockzxz Authors
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

namespace bzxz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (non-unitary matrix, bad size, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Malformed gate or circuit, or mismatched dimensions.
class StructuralError : public Error {
  public:
    using Error::Error;
};

/// Request exceeds a configured size cap.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// A pseudo-gate reached an emitter that only accepts elementary gates.
class LoweringError : public Error {
  public:
    using Error::Error;
};

/// A matrix factorization failed to reproduce its input.
class FactorizationError : public Error {
  public:
    FactorizationError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// A synthesis step failed its reconstruction check.
class SynthesisError : public Error {
  public:
    SynthesisError(const std::string& node, const std::string& what, double residual)
        : Error("node " + node + ": " + what + " (residual " + std::to_string(residual) + ")"),
          node_(node),
          residual_(residual) {}

    const std::string& node() const noexcept { return node_; }
    double residual() const noexcept { return residual_; }

  private:
    std::string node_;
    double residual_;
};

}  // namespace bzxz
