// Copyright 2026 The riordan-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Base class for every domain error raised by the library. The command line
// front end maps these to exit code 1; argument/usage problems are reported
// by the option parser and map to exit code 2 instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient or entry index past the known truncation. Asking for data the
// object does not hold is always an error, never a silent zero.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Multiplicative inversion of a series whose constant term vanishes, or a
// substitution whose linear term vanishes.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// Substitution g(t) where t has a nonzero constant term: the composite
// would need infinitely many terms of g per output coefficient.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// Square root of a series that has no square root over the rationals at the
// requested truncation (odd valuation, negative or non-square leading term).
class SqrtDomainError : public Error {
 public:
  using Error::Error;
};

// A computation was asked to produce more data than the stored truncation
// budget supports, or an enumeration exceeded its hard size bound.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Construction arguments violate a structural precondition (zero leading
// coefficient where a unit is required, inadmissible parameters, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Lexical or syntactic problem in a series expression. Carries the byte
// offset of the offending token in the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace riordan
