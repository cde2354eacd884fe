// Copyright 2026 The bilogic Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bilogic {

enum class ErrorKind {
  Parse,      // lexical/syntactic errors, arity mismatches, unknown symbols
  Signature,  // inconsistent symbol usage outside the parser
  Carrier,    // value outside its carrier, or incompatible carriers
  Model,      // structurally invalid model
  Eval,       // evaluation precondition failure (unassigned variable, ...)
  Budget,     // enumeration refused
};

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure. `column()` is the 1-based code-point column of the
/// offending token (one past the end for premature end of input).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int column)
      : Error(ErrorKind::Parse, message), column_(column) {}

  int column() const noexcept { return column_; }

 private:
  int column_;
};

class SignatureError : public Error {
 public:
  explicit SignatureError(const std::string& message)
      : Error(ErrorKind::Signature, message) {}
};

class CarrierError : public Error {
 public:
  explicit CarrierError(const std::string& message)
      : Error(ErrorKind::Carrier, message) {}
};

class ModelError : public Error {
 public:
  explicit ModelError(const std::string& message)
      : Error(ErrorKind::Model, message) {}
};

class EvalError : public Error {
 public:
  explicit EvalError(const std::string& message)
      : Error(ErrorKind::Eval, message) {}
};

/// Thrown when a search would exceed the enumeration budget.
/// `required()` is the number of models the search would have to visit
/// (saturated at UINT64_MAX).
class BudgetError : public Error {
 public:
  BudgetError(const std::string& message, std::uint64_t required)
      : Error(ErrorKind::Budget, message), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace bilogic
