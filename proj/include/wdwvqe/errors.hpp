// Copyright 2026 The wdwvqe Authors
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

namespace wdwvqe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A model parameter required by the Hamiltonian kind was not supplied.
class MissingParameter : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Observable and state disagree on the number of qubits.
class QubitMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Base for failures that come out of the numerics rather than the inputs.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A function evaluated on the grid produced inf or nan, usually an
/// unregularized singularity such as 1/a^2 at a = 0.
class NonFiniteValue : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonFiniteObjective : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Every SPSA calibration probe measured a zero objective difference.
class ZeroGradientRegion : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace wdwvqe
