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

#include "hypalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hypalg/errors.hpp"

namespace hypalg {

AlgebraPolynomial::AlgebraPolynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const Element& c : coeffs_) {
    if (c.size() != coeffs_.front().size()) {
      throw DimensionMismatch("polynomial coefficient", coeffs_.front().size(), c.size());
    }
  }
}

AlgebraPolynomial AlgebraPolynomial::monomial(const Element& c, std::size_t power) {
  std::vector<Element> coeffs(power + 1, Element::zero(c.size()));
  coeffs[power] = c;
  return AlgebraPolynomial(std::move(coeffs));
}

std::size_t AlgebraPolynomial::degree(double tol_lead) const {
  for (std::size_t r = coeffs_.size(); r-- > 0;) {
    if (norm_inf(coeffs_[r]) > tol_lead) return r;
  }
  return 0;
}

Element eval_poly(const AlgebraTable& table, const AlgebraPolynomial& p, const Element& w) {
  require_dim(table, w, "eval_poly");
  if (p.dim() != table.dim()) throw DimensionMismatch("eval_poly", table.dim(), p.dim());
  const auto& a = p.coeffs();
  Element acc = a.back();
  for (std::size_t r = a.size() - 1; r-- > 0;) {
    acc = add(mul(table, acc, w), a[r]);
  }
  return acc;
}

AlgebraPolynomial combine(Scalar alpha, const AlgebraPolynomial& p, Scalar beta,
                          const AlgebraPolynomial& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("combine", p.dim(), q.dim());
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<Element> out(n, Element::zero(p.dim()));
  for (std::size_t r = 0; r < p.coeffs().size(); ++r) out[r] = scalar_mul(alpha, p[r]);
  for (std::size_t r = 0; r < q.coeffs().size(); ++r) out[r] = add(out[r], scalar_mul(beta, q[r]));
  return AlgebraPolynomial(std::move(out));
}

}  // namespace hypalg
