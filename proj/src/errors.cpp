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

#include "hypalg/errors.hpp"

#include <utility>

namespace hypalg {

namespace {

std::string describe(const std::string& message, std::size_t line, std::size_t column,
                     const std::string& source) {
  std::string out;
  if (!source.empty()) out += source + ":";
  if (line > 0) {
    out += std::to_string(line) + ":";
    if (column > 0) out += std::to_string(column) + ":";
  }
  if (!out.empty()) out += " ";
  return out + message;
}

}  // namespace

DimensionMismatch::DimensionMismatch(const std::string& what, std::size_t expected,
                                     std::size_t got)
    : Error(what + ": expected dimension " + std::to_string(expected) + ", got " +
            std::to_string(got)),
      expected_(expected),
      got_(got) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::string source)
    : Error(describe(message, line, column, source)),
      message_(message),
      line_(line),
      column_(column),
      source_(std::move(source)) {}

ParseError ParseError::with_source(std::string source) const {
  return ParseError(message_, line_, column_, std::move(source));
}

}  // namespace hypalg
