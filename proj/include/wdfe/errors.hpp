// Copyright 2026 The wigner-dfe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wdfe {

/// Base of all library errors. Each category carries the CLI exit code it
/// maps to.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept = 0;
};

/// Malformed input: invariant violations, bad parameters, failed
/// preconditions, out-of-range phase points.
class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// Out-of-range index or mismatched dimensions.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A documented precondition of a protocol does not hold (e.g. target is
/// not a stabilizer state).
class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Unreadable or unwritable files.
class IoError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Enumeration caps and work budgets.
class ResourceError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

/// Floating-point results outside what the mathematics allows (imaginary
/// residues, probabilities outside [0,1], internal cross-check failures).
class NumericalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

}  // namespace wdfe
