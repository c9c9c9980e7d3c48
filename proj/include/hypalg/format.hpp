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

// Text formats.
//
// Algebra file (`#` starts a comment, blank lines ignored):
//
//     field: R              # or C
//     dim: 2
//     names: 1 e            # optional, default e0 e1 ...
//     mul 1 1 : 1 0         # one line per unordered pair 1 <= i <= j <= dim-1
//
// Products with index 0 follow from the unit law; they may be written out but
// must then match it. Scalars are `<real>`, `<real>+<real>i` or
// `<real>-<real>i` with no inner spaces.
//
// Polynomial file:   `degree: <m>` then `coeff <r> : <dim scalars>` per power.
// Idempotent file:   `idempotents: <n>` then one line of <dim scalars> each.

#ifndef HYPALG_FORMAT_HPP
#define HYPALG_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hypalg/algebra.hpp"
#include "hypalg/polynomial.hpp"

namespace hypalg {

/// Parses one scalar token; throws ParseError (line/column 0) on bad syntax.
Scalar parse_scalar(std::string_view token);

AlgebraTable parse_algebra(std::string_view text);
AlgebraPolynomial parse_polynomial(std::string_view text, const AlgebraTable& table);
std::vector<Element> parse_idempotents(std::string_view text, const AlgebraTable& table);

/// Whitespace-separated list of exactly table.dim() scalars.
Element parse_element(std::string_view text, const AlgebraTable& table);

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

// File variants attribute parse errors to the path.
AlgebraTable load_algebra(const std::filesystem::path& path);
AlgebraPolynomial load_polynomial(const std::filesystem::path& path, const AlgebraTable& table);
std::vector<Element> load_idempotents(const std::filesystem::path& path,
                                      const AlgebraTable& table);

/// Shortest round-trip text; real-field values never carry an imaginary part.
/// Negative zero is printed as 0.
std::string format_scalar(Scalar s, Field field);
std::string format_element(const Element& a, Field field);

std::string write_algebra(const AlgebraTable& table);
std::string write_idempotents(const std::vector<Element>& idems, const AlgebraTable& table);

}  // namespace hypalg

#endif  // HYPALG_FORMAT_HPP
