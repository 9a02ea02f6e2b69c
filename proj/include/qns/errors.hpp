// Copyright 2026 The qns Authors
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

namespace qns {

/// Base class of every error raised by the library. The CLI maps the
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A numerical guard tripped: non-Hermitian input, imaginary residue on a
/// real observable, invalid density matrix, insufficient Fock truncation.
class NumericError : public Error {
   public:
    using Error::Error;
};

/// The requested computation would exceed the configured resource budget.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Malformed or inconsistent user configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

}  // namespace qns
