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

#include "hypalg/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "hypalg/errors.hpp"

namespace hypalg {

namespace {

constexpr std::size_t kMaxDim = 512;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits into non-empty logical lines. ':' is always a token of its own.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      if (is_space(raw[k])) {
        ++k;
        continue;
      }
      if (raw[k] == ':') {
        line.tokens.push_back({raw.substr(k, 1), k + 1});
        ++k;
        continue;
      }
      const std::size_t begin = k;
      while (k < raw.size() && !is_space(raw[k]) && raw[k] != ':') ++k;
      line.tokens.push_back({raw.substr(begin, k - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& message, const Line& line, std::size_t column) {
  throw ParseError(message, line.number, column);
}

[[noreturn]] void fail_at(const std::string& message, const Line& line, const Token& token) {
  fail(message, line, token.column);
}

std::size_t end_column(const Line& line) {
  const Token& last = line.tokens.back();
  return last.column + last.text.size();
}

// `key : values...`; returns the values.
std::vector<Token> key_values(const Line& line, std::string_view key) {
  if (line.tokens.size() < 2 || line.tokens[0].text != key || line.tokens[1].text != ":") {
    fail("expected '" + std::string(key) + ":'", line, line.tokens[0].column);
  }
  return {line.tokens.begin() + 2, line.tokens.end()};
}

bool has_key(const Line& line, std::string_view key) {
  return line.tokens.size() >= 2 && line.tokens[0].text == key && line.tokens[1].text == ":";
}

std::size_t parse_index(const Line& line, const Token& token, const char* what) {
  std::size_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail_at(std::string("expected a non-negative integer ") + what + ", got '" +
                std::string(token.text) + "'",
            line, token);
  }
  return value;
}

bool parse_real(std::string_view text, double& out) {
  if (text.size() > 1 && text[0] == '+' && text[1] != '+' && text[1] != '-') text.remove_prefix(1);
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

Scalar scalar_or_throw(std::string_view token) {
  const auto bad = [&]() -> ParseError {
    return ParseError("malformed scalar '" + std::string(token) + "'", 0, 0);
  };
  if (token.empty()) throw bad();
  if (token.back() != 'i') {
    double re = 0.0;
    if (!parse_real(token, re)) throw bad();
    return {re, 0.0};
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  double im = 0.0;
  if (split == std::string_view::npos) {
    if (!parse_real(body, im)) throw bad();
  } else {
    if (!parse_real(body.substr(0, split), re)) throw bad();
    if (!parse_real(body.substr(split), im)) throw bad();
  }
  return {re, im};
}

Scalar parse_scalar_token(const Line& line, const Token& token, Field field) {
  Scalar s;
  try {
    s = scalar_or_throw(token.text);
  } catch (const ParseError& e) {
    fail_at(e.message(), line, token);
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail_at("non-finite scalar '" + std::string(token.text) + "'", line, token);
  }
  if (field == Field::Real && s.imag() != 0.0) {
    fail_at("complex scalar '" + std::string(token.text) + "' in a real-field file", line, token);
  }
  return s;
}

Element parse_scalars(const Line& line, std::span<const Token> tokens, std::size_t dim,
                      Field field) {
  if (tokens.size() != dim) {
    const std::size_t column = tokens.empty() ? end_column(line) : tokens.front().column;
    fail("expected " + std::to_string(dim) + " scalars, got " + std::to_string(tokens.size()),
         line, column);
  }
  Element out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = parse_scalar_token(line, tokens[k], field);
  return out;
}

template <class Parse>
auto with_path(const std::filesystem::path& path, Parse&& parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw e.with_source(path.string());
  }
}

std::string real_text(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

}  // namespace

Scalar parse_scalar(std::string_view token) { return scalar_or_throw(token); }

AlgebraTable parse_algebra(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty algebra file", 0, 0);

  const Line& field_line = lines[0];
  const auto field_values = key_values(field_line, "field");
  if (field_values.size() != 1 || (field_values[0].text != "R" && field_values[0].text != "C")) {
    fail("expected 'field: R' or 'field: C'", field_line,
         field_values.empty() ? end_column(field_line) : field_values[0].column);
  }
  const Field field = field_values[0].text == "R" ? Field::Real : Field::Complex;

  if (lines.size() < 2) throw ParseError("missing 'dim:' line", field_line.number + 1, 0);
  const Line& dim_line = lines[1];
  const auto dim_values = key_values(dim_line, "dim");
  if (dim_values.size() != 1) fail("expected 'dim: <d>'", dim_line, end_column(dim_line));
  const std::size_t dim = parse_index(dim_line, dim_values[0], "dimension");
  if (dim == 0 || dim > kMaxDim) {
    fail_at("dimension must be between 1 and " + std::to_string(kMaxDim), dim_line, dim_values[0]);
  }

  std::size_t next = 2;
  std::vector<std::string> names;
  if (next < lines.size() && has_key(lines[next], "names")) {
    const Line& names_line = lines[next];
    const auto values = key_values(names_line, "names");
    if (values.size() != dim) {
      fail("expected " + std::to_string(dim) + " basis names, got " +
               std::to_string(values.size()),
           names_line, values.empty() ? end_column(names_line) : values[0].column);
    }
    std::set<std::string_view> seen;
    for (const Token& t : values) {
      if (!seen.insert(t.text).second) {
        fail_at("duplicate basis name '" + std::string(t.text) + "'", names_line, t);
      }
      names.emplace_back(t.text);
    }
    ++next;
  }

  std::map<std::pair<std::size_t, std::size_t>, Element> products;
  for (; next < lines.size(); ++next) {
    const Line& line = lines[next];
    const Token& head = line.tokens[0];
    if (head.text != "mul") {
      fail_at("unexpected '" + std::string(head.text) + "', expected 'mul <i> <j> : ...'", line,
              head);
    }
    if (line.tokens.size() < 4 || line.tokens[3].text != ":") {
      fail("expected 'mul <i> <j> : <scalars>'", line,
           line.tokens.size() < 4 ? end_column(line) : line.tokens[3].column);
    }
    std::size_t i = parse_index(line, line.tokens[1], "basis index");
    std::size_t j = parse_index(line, line.tokens[2], "basis index");
    if (i >= dim) fail_at("basis index out of range", line, line.tokens[1]);
    if (j >= dim) fail_at("basis index out of range", line, line.tokens[2]);
    if (i > j) std::swap(i, j);
    const std::span<const Token> scalar_tokens(line.tokens.begin() + 4, line.tokens.end());
    Element value = parse_scalars(line, scalar_tokens, dim, field);
    if (i == 0) {
      if (value != Element::basis(dim, j)) {
        fail_at("product with the unit e0 must equal e" + std::to_string(j), line,
                line.tokens[1]);
      }
      continue;
    }
    if (!products.emplace(std::make_pair(i, j), std::move(value)).second) {
      fail_at("duplicate product line for pair (" + std::to_string(i) + ", " + std::to_string(j) +
                  ")",
              line, head);
    }
  }

  std::vector<Scalar> constants(dim * dim * dim, Scalar(0.0, 0.0));
  const auto set_row = [&](std::size_t i, std::size_t j, const Element& value) {
    for (std::size_t k = 0; k < dim; ++k) constants[(i * dim + j) * dim + k] = value[k];
  };
  for (std::size_t j = 0; j < dim; ++j) {
    const Element e = Element::basis(dim, j);
    set_row(0, j, e);
    set_row(j, 0, e);
  }
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const auto it = products.find({i, j});
      if (it == products.end()) {
        throw ParseError("missing product line for pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")",
                         0, 0);
      }
      set_row(i, j, it->second);
      set_row(j, i, it->second);
    }
  }
  return AlgebraTable(field, dim, std::move(names), std::move(constants));
}

AlgebraPolynomial parse_polynomial(std::string_view text, const AlgebraTable& table) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty polynomial file", 0, 0);
  const Line& head = lines[0];
  const auto degree_values = key_values(head, "degree");
  if (degree_values.size() != 1) fail("expected 'degree: <m>'", head, end_column(head));
  const std::size_t degree = parse_index(head, degree_values[0], "degree");
  if (degree > 4096) fail_at("degree too large", head, degree_values[0]);

  std::vector<Element> coeffs(degree + 1, table.zero());
  std::vector<bool> seen(degree + 1, false);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const Line& line = lines[n];
    if (line.tokens[0].text != "coeff") {
      fail_at("unexpected '" + std::string(line.tokens[0].text) +
                  "', expected 'coeff <r> : ...'",
              line, line.tokens[0]);
    }
    if (line.tokens.size() < 3 || line.tokens[2].text != ":") {
      fail("expected 'coeff <r> : <scalars>'", line,
           line.tokens.size() < 3 ? end_column(line) : line.tokens[2].column);
    }
    const std::size_t r = parse_index(line, line.tokens[1], "power");
    if (r > degree) fail_at("power exceeds declared degree", line, line.tokens[1]);
    if (seen[r]) fail_at("duplicate coefficient for power " + std::to_string(r), line, line.tokens[0]);
    seen[r] = true;
    const std::span<const Token> scalar_tokens(line.tokens.begin() + 3, line.tokens.end());
    coeffs[r] = parse_scalars(line, scalar_tokens, table.dim(), table.field());
  }
  return AlgebraPolynomial(std::move(coeffs));
}

std::vector<Element> parse_idempotents(std::string_view text, const AlgebraTable& table) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty idempotent file", 0, 0);
  const Line& head = lines[0];
  const auto count_values = key_values(head, "idempotents");
  if (count_values.size() != 1) fail("expected 'idempotents: <n>'", head, end_column(head));
  const std::size_t count = parse_index(head, count_values[0], "count");
  if (count == 0) fail_at("idempotent count must be positive", head, count_values[0]);
  if (lines.size() - 1 != count) {
    throw ParseError("expected " + std::to_string(count) + " idempotent lines, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number, 0);
  }
  std::vector<Element> idems;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    idems.push_back(parse_scalars(lines[n], lines[n].tokens, table.dim(), table.field()));
  }
  return idems;
}

Element parse_element(std::string_view text, const AlgebraTable& table) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.size() != 1) {
    throw ParseError("expected a single line of " + std::to_string(table.dim()) + " scalars", 0, 0);
  }
  return parse_scalars(lines[0], lines[0].tokens, table.dim(), table.field());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", 0, 0, path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AlgebraTable load_algebra(const std::filesystem::path& path) {
  return with_path(path, [](const std::string& text) { return parse_algebra(text); });
}

AlgebraPolynomial load_polynomial(const std::filesystem::path& path, const AlgebraTable& table) {
  return with_path(path, [&](const std::string& text) { return parse_polynomial(text, table); });
}

std::vector<Element> load_idempotents(const std::filesystem::path& path,
                                      const AlgebraTable& table) {
  return with_path(path, [&](const std::string& text) { return parse_idempotents(text, table); });
}

std::string format_scalar(Scalar s, Field field) {
  if (field == Field::Real) return real_text(s.real());
  const double im = s.imag();
  if (im == 0.0) return real_text(s.real()) + "+0i";
  return real_text(s.real()) + (im < 0.0 ? "-" : "+") + real_text(std::abs(im)) + "i";
}

std::string format_element(const Element& a, Field field) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) out += ' ';
    out += format_scalar(a[k], field);
  }
  return out;
}

std::string write_algebra(const AlgebraTable& table) {
  std::string out = std::string("field: ") + field_name(table.field()) + "\n";
  out += "dim: " + std::to_string(table.dim()) + "\n";
  out += "names:";
  for (const auto& name : table.basis_names()) out += " " + name;
  out += "\n";
  for (std::size_t i = 1; i < table.dim(); ++i) {
    for (std::size_t j = i; j < table.dim(); ++j) {
      const auto row = table.product_row(i, j);
      out += "mul " + std::to_string(i) + " " + std::to_string(j) + " : " +
             format_element(Element(std::vector<Scalar>(row.begin(), row.end())), table.field()) +
             "\n";
    }
  }
  return out;
}

std::string write_idempotents(const std::vector<Element>& idems, const AlgebraTable& table) {
  std::string out = "idempotents: " + std::to_string(idems.size()) + "\n";
  for (const Element& e : idems) {
    require_dim(table, e, "write_idempotents");
    out += format_element(e, table.field()) + "\n";
  }
  return out;
}

}  // namespace hypalg
