// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTEQ_ERROR_HPP
#define SOFTEQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softeq {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance / 3dm / multi-instance text. line() is 1-based, 0 when
// the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation was called on an instance outside its class (non-contiguous
// domain for the DP, a value in three domains for the matching solver, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search would exceed its configured cap or budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant. Never expected; reported instead of asserted so
// that release builds still surface it.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace softeq

#endif  // SOFTEQ_ERROR_HPP
