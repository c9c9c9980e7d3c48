// Copyright 2026 The hypalg Authors
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

#ifndef HYPALG_ERRORS_HPP
#define HYPALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypalg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of different dimension, or a length that does not match the algebra.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t got);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

/// Malformed input text. Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string source = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& source() const noexcept { return source_; }
  const std::string& message() const noexcept { return message_; }

  /// Same error, attributed to a named source (usually a file path).
  ParseError with_source(std::string source) const;

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string source_;
};

/// A request the numerical routines refuse to honour (e.g. an unstable stencil order).
class UnsupportedRequest : public Error {
 public:
  using Error::Error;
};

}  // namespace hypalg

#endif  // HYPALG_ERRORS_HPP
