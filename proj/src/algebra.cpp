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

#include "hypalg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hypalg/errors.hpp"
#include "hypalg/kernels.hpp"

namespace hypalg {

const char* field_name(Field field) noexcept { return field == Field::Real ? "R" : "C"; }

Element Element::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw std::out_of_range("basis index out of range");
  Element e(dim);
  e[k] = Scalar(1.0, 0.0);
  return e;
}

AlgebraTable::AlgebraTable(Field field, std::size_t dim, std::vector<std::string> basis_names,
                           std::vector<Scalar> constants)
    : field_(field), dim_(dim), names_(std::move(basis_names)), constants_(std::move(constants)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (names_.empty()) {
    for (std::size_t k = 0; k < dim_; ++k) names_.push_back("e" + std::to_string(k));
  }
  if (names_.size() != dim_) throw DimensionMismatch("basis names", dim_, names_.size());
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw DimensionMismatch("structure constants", dim_ * dim_ * dim_, constants_.size());
  }
}

AxiomReport verify_algebra(const AlgebraTable& table, double tol_axiom) {
  const std::size_t d = table.dim();
  AxiomReport report;
  report.tolerance = tol_axiom;

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar c = table.constant(i, j, k);
        report.commutativity =
            std::max(report.commutativity, std::abs(c - table.constant(j, i, k)));
        if (table.field() == Field::Real) {
          report.realness = std::max(report.realness, std::abs(c.imag()));
        }
      }
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const double delta = j == k ? 1.0 : 0.0;
      report.unit_law = std::max(report.unit_law, std::abs(table.constant(0, j, k) - delta));
    }
  }
  // (e_i e_j) e_k versus e_i (e_j e_k), coordinate q.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t q = 0; q < d; ++q) {
          Scalar left(0.0), right(0.0);
          for (std::size_t p = 0; p < d; ++p) {
            left += table.constant(i, j, p) * table.constant(p, k, q);
            right += table.constant(j, k, p) * table.constant(i, p, q);
          }
          report.associativity = std::max(report.associativity, std::abs(left - right));
        }
      }
    }
  }
  return report;
}

namespace {

void require_same(const Element& a, const Element& b, const char* what) {
  if (a.size() != b.size()) throw DimensionMismatch(what, a.size(), b.size());
}

}  // namespace

void require_dim(const AlgebraTable& table, const Element& a, const char* what) {
  if (a.size() != table.dim()) throw DimensionMismatch(what, table.dim(), a.size());
}

Element add(const Element& a, const Element& b) {
  require_same(a, b, "add");
  Element out = a;
  kernels::active().axpy(Scalar(1.0, 0.0), b.data(), out.data(), out.size());
  return out;
}

Element sub(const Element& a, const Element& b) {
  require_same(a, b, "sub");
  Element out = a;
  kernels::active().axpy(Scalar(-1.0, 0.0), b.data(), out.data(), out.size());
  return out;
}

Element neg(const Element& a) {
  Element out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

Element scalar_mul(Scalar s, const Element& a) {
  Element out(a.size());
  kernels::active().axpy(s, a.data(), out.data(), out.size());
  return out;
}

Element mul(const AlgebraTable& table, const Element& a, const Element& b) {
  require_dim(table, a, "mul");
  require_dim(table, b, "mul");
  Element out(table.dim());
  kernels::active().structure_product(a.data(), b.data(), table.constants().data(), table.dim(),
                                      out.data());
  return out;
}

Element power(const AlgebraTable& table, const Element& a, unsigned n) {
  require_dim(table, a, "power");
  Element result = table.unit();
  Element base = a;
  while (n > 0) {
    if (n & 1U) result = mul(table, result, base);
    n >>= 1U;
    if (n > 0) base = mul(table, base, base);
  }
  return result;
}

ScalarMatrix regular_representation(const AlgebraTable& table, const Element& a) {
  require_dim(table, a, "regular_representation");
  const std::size_t d = table.dim();
  ScalarMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const Element column = mul(table, a, table.basis(j));
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = column[k];
    }
  }
  return m;
}

double norm_inf(const Element& a) { return kernels::active().max_abs(a.data(), a.size()); }

double distance_inf(const Element& a, const Element& b) { return norm_inf(sub(a, b)); }

bool canonical_less(const Element& a, const Element& b, double quantum) {
  auto key = [quantum](double v) {
    const double r = std::round(v / quantum);
    return r == 0.0 ? 0.0 : r;
  };
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double x = key(a[k].real()), y = key(b[k].real());
    if (x != y) return x < y;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double x = key(a[k].imag()), y = key(b[k].imag());
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

}  // namespace hypalg
