// Copyright 2026 The ChannelForge Authors
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

namespace channelforge {

/// Shapes of the operands do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be Hermitian is not, beyond the tolerance.
class NotHermitianError : public std::domain_error {
 public:
  NotHermitianError(const std::string& what, double deviation)
      : std::domain_error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// The Choi matrix has an eigenvalue below -tol. Carries the witness.
class NotCompletelyPositiveError : public std::domain_error {
 public:
  NotCompletelyPositiveError(const std::string& what, double min_eigenvalue)
      : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Trace preservation is required (isometric dilation, affine form) but fails.
class NotTracePreservingError : public std::domain_error {
 public:
  NotTracePreservingError(const std::string& what, double deviation)
      : std::domain_error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class NotUnitaryError : public std::invalid_argument {
 public:
  NotUnitaryError(const std::string& what, double deviation)
      : std::invalid_argument(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// Operator basis is not orthonormal under tr(A_j^dagger A_k).
class BasisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not a valid density matrix / Bloch vector.
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative routine failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed channel / state / generator document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace channelforge
