// Copyright 2026 The rrcc Authors
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

#ifndef RRCC_ERRORS_HPP
#define RRCC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrcc {

/// A caller violated an operation's precondition (bad parameters, wrong
/// code pairing, ...). The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input (polynomial, exponent spec) could not be parsed.
class ParseError : public PreconditionError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : PreconditionError("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rrcc

#endif  // RRCC_ERRORS_HPP
