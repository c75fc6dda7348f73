// Copyright 2026 The qwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types thrown by the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qwit {

/// Base class of every error raised by qwit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or out-of-range dimensions (qubit counts, vector lengths).
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Qubit or basis index outside the valid range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Invalid argument value (non-finite angle, bad shot count, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input (sign vectors, model files, configs).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Request exceeds what the exhaustive routines are allowed to enumerate.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Filesystem failures.
class IoError : public Error {
  public:
    using Error::Error;
};

/// The optimizer was handed a cost it cannot work with.
class OptimizationError : public Error {
  public:
    using Error::Error;
};

} // namespace qwit
