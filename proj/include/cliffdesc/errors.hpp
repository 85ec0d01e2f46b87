// Copyright 2026 The cliffdesc Authors
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

namespace cliffdesc {

/// Base class for all structural failures. Verification outcomes are not
/// errors; they are returned as reports. Exceptions mark inputs on which the
/// requested computation is not defined at all.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix orders or vector lengths do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A generator index lies outside [0, dim).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An operation defined only for even (or only for odd) dimension was called
/// with the wrong parity.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// The input lacks a structural property the operation requires exactly
/// (block form, proportionality to the identity, admissible entry alphabet).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A finite-closure computation exceeded its configured element bound.
class ClosureBoundError : public Error {
 public:
  using Error::Error;
};

/// Floating-point linear algebra failed to converge or lost accuracy.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A matrix entry falls outside the five-value render alphabet.
class RenderError : public Error {
 public:
  using Error::Error;
};

/// Malformed caller input: out-of-range dimension, bad flag combination.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A document does not conform to the serialization schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffdesc
