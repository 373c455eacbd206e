// Copyright 2026 The imprecise-q Authors
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

#ifndef IMPQ_ERROR_H
#define IMPQ_ERROR_H

#include <stdexcept>
#include <string>

namespace impq {

/// Caller passed arguments that violate a documented precondition.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds the desk-scale resource bounds (register size, modulus).
class ResourceError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Floating point state drifted outside the tolerances the simulator promises.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A projection found no component of the state inside the requested subspace.
class SubspaceError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

/// An output file could not be opened or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace impq

#endif
