// Copyright 2026 The sblab Authors
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

#ifndef SBLAB_ERRORS_HPP_
#define SBLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sblab {

// Base class for recoverable failures reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An Instance (or other value) that breaks its documented invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Simplex breakdown: singular basis or pivot below tolerance with no
// alternative. Never swallowed by the engine.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition (empty candidate list, dimension mismatch...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sblab

#endif  // SBLAB_ERRORS_HPP_
